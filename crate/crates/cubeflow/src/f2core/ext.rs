use std::collections::BTreeSet;

use crate::{Error, Result};

/// Element of the exterior algebra Λ*(F2^n), n ≤ 64. Monomials are bitmasks
/// over the generators `e_0 .. e_{n-1}`; over F2 the wedge is sign-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement {
    dim: usize,
    terms: BTreeSet<u64>,
}

impl ExtElement {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 64, "ambient dimension {dim} exceeds 64");
        ExtElement { dim, terms: BTreeSet::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, 0)
    }

    pub fn monomial(dim: usize, mask: u64) -> Self {
        let mut e = Self::zero(dim);
        e.toggle(mask);
        e
    }

    /// The degree-one element `e_i`.
    pub fn generator(dim: usize, i: usize) -> Self {
        assert!(i < dim, "generator index out of range");
        Self::monomial(dim, 1 << i)
    }

    /// The degree-one element `Σ_{i ∈ mask} e_i`.
    pub fn linear(dim: usize, mask: u64) -> Self {
        let mut e = Self::zero(dim);
        let mut m = mask;
        while m != 0 {
            e.toggle(1 << m.trailing_zeros());
            m &= m - 1;
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn toggle(&mut self, mask: u64) {
        if self.dim < 64 {
            assert!(mask >> self.dim == 0, "monomial outside ambient dimension");
        }
        if !self.terms.remove(&mask) {
            self.terms.insert(mask);
        }
    }

    pub fn add(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check(other)?;
        let mut out = self.clone();
        for m in other.terms() {
            out.toggle(m);
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check(other)?;
        let mut out = ExtElement::zero(self.dim);
        for a in self.terms() {
            for b in other.terms() {
                if a & b == 0 {
                    out.toggle(a | b);
                }
            }
        }
        Ok(out)
    }

    fn check(&self, other: &ExtElement) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("ambient {} vs {}", self.dim, other.dim)));
        }
        Ok(())
    }
}

/// Monomials of `v_1 ∧ … ∧ v_k` for degree-one factors given as masks.
pub(crate) fn wedge_masks(factors: &[u64]) -> Vec<u64> {
    let mut cur: Vec<u64> = vec![0];
    for &v in factors {
        if v == 0 {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(cur.len() * v.count_ones() as usize);
        for &m in &cur {
            let mut bits = v & !m;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits ^= b;
                next.push(m | b);
            }
        }
        if v.count_ones() > 1 {
            next.sort_unstable();
            dedup_mod2(&mut next);
        }
        if next.is_empty() {
            return next;
        }
        cur = next;
    }
    cur
}

/// Remove pairs of equal neighbours from a sorted vector (F2 cancellation).
pub(crate) fn dedup_mod2<T: PartialEq + Copy>(v: &mut Vec<T>) {
    let mut out = 0;
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            v[out] = v[i];
            out += 1;
        }
        i = j;
    }
    v.truncate(out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elem(dim: usize, bits: u32) -> ExtElement {
        // bits selects a subset of the 2^dim monomials
        let mut e = ExtElement::zero(dim);
        for m in 0..(1u64 << dim) {
            if (bits >> m) & 1 == 1 {
                e.toggle(m);
            }
        }
        e
    }

    #[test]
    fn basic_identities() {
        let e1 = ExtElement::generator(3, 0);
        let e2 = ExtElement::generator(3, 1);
        assert!(e1.wedge(&e1).unwrap().is_zero());
        assert_eq!(e1.wedge(&e2).unwrap(), e2.wedge(&e1).unwrap());
        let s = e1.add(&e2).unwrap();
        assert!(s.wedge(&s).unwrap().is_zero());
        assert!(e1.wedge(&ExtElement::one(4)).is_err());
    }

    #[test]
    fn wedge_masks_small_cases() {
        let vs = [0b011u64, 0b110, 0b101];
        // (e0+e1)(e1+e2)(e0+e2) is zero: the vectors are dependent
        assert!(wedge_masks(&vs).is_empty());
        let w = wedge_masks(&[0b011, 0b100]);
        assert_eq!(w, vec![0b101, 0b110]);
    }

    proptest! {
        #[test]
        fn associative_and_bilinear(dim in 1usize..=4, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let width = 1u32 << dim;
            let mask = if width >= 32 { u32::MAX } else { (1u32 << width) - 1 };
            let (a, b, c) = (elem(dim, a & mask), elem(dim, b & mask), elem(dim, c & mask));
            let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
            let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            let lin = a.add(&b).unwrap().wedge(&c).unwrap();
            prop_assert_eq!(lin, a.wedge(&c).unwrap().add(&b.wedge(&c).unwrap()).unwrap());
        }
    }

    #[test]
    fn exhaustive_dim5_associativity_on_generators() {
        let dim = 5;
        let monos: Vec<ExtElement> = (0..32u64).map(|m| ExtElement::monomial(dim, m)).collect();
        for a in &monos {
            for b in &monos {
                let ab = a.wedge(b).unwrap();
                for c in monos.iter().step_by(3) {
                    assert_eq!(ab.wedge(c).unwrap(), a.wedge(&b.wedge(c).unwrap()).unwrap());
                }
            }
        }
    }
}
