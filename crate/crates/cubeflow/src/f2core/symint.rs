use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer symmetric matrix (linking forms, symmetrized Seifert forms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymIntMatrix {
    n: usize,
    a: Vec<Vec<i64>>,
}

impl SymIntMatrix {
    pub fn new(a: Vec<Vec<i64>>) -> crate::Result<Self> {
        let n = a.len();
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(crate::Error::Dimension(format!("row {i} has length {}", row.len())));
            }
            for j in 0..i {
                if a[i][j] != a[j][i] {
                    return Err(crate::Error::Dimension(format!("not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(SymIntMatrix { n, a })
    }

    pub fn zeros(n: usize) -> Self {
        SymIntMatrix { n, a: vec![vec![0; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// Sets both `a_ij` and `a_ji`.
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i][j] = v;
        self.a[j][i] = v;
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// `D A D` for a sign vector `D = diag(s)`.
    pub fn conjugate_by_signs(&self, s: &[i64]) -> SymIntMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.a[i][j] = s[i] * self.a[i][j] * s[j];
            }
        }
        out
    }

    pub fn negated(&self) -> SymIntMatrix {
        let mut out = self.clone();
        out.a.iter_mut().flatten().for_each(|x| *x = -*x);
        out
    }

    /// Congruence diagonalization over ℚ. Returns `(signature, det, nullity)`.
    pub fn signature_det_nullity(&self) -> (i64, BigInt, usize) {
        let mut m: Vec<Vec<BigRational>> =
            self.a.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
        let mut alive: Vec<usize> = (0..self.n).collect();
        let mut sig = 0i64;
        let mut det = BigRational::one();

        while !alive.is_empty() {
            if let Some(&p) = alive.iter().find(|&&i| !m[i][i].is_zero()) {
                let piv = m[p][p].clone();
                sig += if piv.is_positive() { 1 } else { -1 };
                det *= &piv;
                alive.retain(|&i| i != p);
                for &i in &alive {
                    if m[i][p].is_zero() {
                        continue;
                    }
                    let f = &m[i][p] / &piv;
                    for &j in &alive {
                        let t = &f * &m[p][j];
                        m[i][j] -= t;
                    }
                }
                continue;
            }
            let pair = alive.iter().flat_map(|&i| alive.iter().map(move |&j| (i, j))).find(|&(i, j)| i < j && !m[i][j].is_zero());
            let Some((p, q)) = pair else { break };
            // Hyperbolic block [[0, c], [c, 0]]: signature 0, determinant −c².
            let c = m[p][q].clone();
            det *= -(&c * &c);
            alive.retain(|&i| i != p && i != q);
            let rest = alive.clone();
            let bp: Vec<BigRational> = rest.iter().map(|&k| m[k][p].clone()).collect();
            let bq: Vec<BigRational> = rest.iter().map(|&k| m[k][q].clone()).collect();
            for (x, &k) in rest.iter().enumerate() {
                for (y, &l) in rest.iter().enumerate() {
                    let t = (&bp[x] * &bq[y] + &bq[x] * &bp[y]) / &c;
                    m[k][l] -= t;
                }
            }
        }
        let nullity = alive.len();
        if nullity > 0 {
            det = BigRational::zero();
        }
        debug_assert!(det.is_integer());
        (sig, det.to_integer(), nullity)
    }
}

/// Exact determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_det(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else { return BigInt::zero() };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sdn(rows: Vec<Vec<i64>>) -> (i64, i64, usize) {
        let (s, d, n) = SymIntMatrix::new(rows).unwrap().signature_det_nullity();
        (s, i64::try_from(d).unwrap(), n)
    }

    #[test]
    fn small_forms() {
        assert_eq!(sdn(vec![vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, 1]]), (1, -1, 0));
        assert_eq!(sdn(vec![vec![0, 1], vec![1, 0]]), (0, -1, 0));
        assert_eq!(sdn(vec![vec![0, 0], vec![0, 0]]), (0, 0, 2));
        assert_eq!(sdn(vec![vec![2, 1], vec![1, 2]]), (2, 3, 0));
        assert_eq!(sdn(vec![]), (0, 1, 0));
        assert!(SymIntMatrix::new(vec![vec![0, 1], vec![2, 0]]).is_err());
    }

    fn arb_sym(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                let mut a = vec![vec![0; n]; n];
                for i in 0..n {
                    for j in 0..=i {
                        a[i][j] = v[i * n + j];
                        a[j][i] = v[i * n + j];
                    }
                }
                a
            })
        })
    }

    proptest! {
        #[test]
        fn det_matches_bareiss(a in arb_sym(7)) {
            let (_, d, _) = SymIntMatrix::new(a.clone()).unwrap().signature_det_nullity();
            prop_assert_eq!(d, bareiss_det(&a));
        }

        #[test]
        fn congruence_invariance(a in arb_sym(7), signs in proptest::collection::vec(any::<bool>(), 7)) {
            let m = SymIntMatrix::new(a).unwrap();
            let s: Vec<i64> = (0..m.n()).map(|i| if signs[i] { 1 } else { -1 }).collect();
            let (s1, d1, n1) = m.signature_det_nullity();
            let (s2, d2, n2) = m.conjugate_by_signs(&s).signature_det_nullity();
            prop_assert_eq!((s1, n1), (s2, n2));
            prop_assert_eq!(d1.abs(), d2.abs());
            prop_assert!(s1.unsigned_abs() as usize <= m.n() - n1);
        }

        #[test]
        fn negation_flips_signature(a in arb_sym(6)) {
            let m = SymIntMatrix::new(a).unwrap();
            let (s1, _, n1) = m.signature_det_nullity();
            let (s2, _, n2) = m.negated().signature_det_nullity();
            prop_assert_eq!(s1, -s2);
            prop_assert_eq!(n1, n2);
        }
    }
}
