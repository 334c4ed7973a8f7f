use crate::f2core::BitVec;

/// Incremental row echelon form that remembers how each row was built from the
/// accepted input vectors, so coordinates can be read back.
pub(crate) struct Echelon {
    n: usize,
    rows: Vec<(usize, BitVec, BitVec)>,
}

impl Echelon {
    pub(crate) fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the rows; returns the remainder and the combination used.
    fn reduce(&self, mut v: BitVec) -> (BitVec, BitVec) {
        let mut combo = BitVec::zeros(self.rows.len() + 1);
        for (k, (pivot, row, c)) in self.rows.iter().enumerate() {
            if v.get(*pivot) {
                v.xor_assign(row);
                for i in c.ones() {
                    combo.flip(i);
                }
                debug_assert!(k < combo.len());
            }
        }
        (v, combo)
    }

    /// Adds `v` if it is independent of the rows so far.
    pub(crate) fn insert(&mut self, v: BitVec) -> bool {
        assert_eq!(v.len(), self.n);
        let (rem, combo) = self.reduce(v);
        let Some(pivot) = rem.first_one() else { return false };
        let k = self.rows.len();
        let mut c = BitVec::zeros(k + 1);
        for i in combo.ones().filter(|&i| i < k) {
            c.set(i, true);
        }
        c.flip(k);
        self.rows.push((pivot, rem, c));
        true
    }

    /// Coefficients of `v` over the accepted vectors, or `None` outside the span.
    pub(crate) fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        let (rem, combo) = self.reduce(v.clone());
        if !rem.is_zero() {
            return None;
        }
        Some(BitVec::from_indices(self.rows.len(), combo.ones().filter(|&i| i < self.rows.len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_recover_combinations() {
        let vs = [0b0011u64, 0b0110, 0b1100, 0b0101];
        let mk = |m: u64| BitVec::from_indices(4, (0..4).filter(|&i| m >> i & 1 == 1));
        let mut e = Echelon::new(4);
        let accepted: Vec<u64> = vs.iter().copied().filter(|&m| e.insert(mk(m))).collect();
        assert_eq!(accepted, vec![0b0011, 0b0110, 0b1100]);
        let target = 0b0011 ^ 0b1100;
        let c = e.coordinates(&mk(target)).unwrap();
        assert_eq!(c.ones().collect::<Vec<_>>(), vec![0, 2]);
        assert!(e.coordinates(&mk(0b0001)).is_none());
    }
}
