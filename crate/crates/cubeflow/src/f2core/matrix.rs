use super::BitVec;

/// Dense matrix over F2, stored as packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix { rows, cols, data: vec![BitVec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        F2Matrix { rows: rows.len(), cols, data: rows }
    }

    /// Build from column vectors (each of length `rows`).
    pub fn from_columns(rows: usize, cols: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows, "row {i} out of range {}", self.rows);
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        assert!(i < self.rows, "row {i} out of range {}", self.rows);
        self.data[i].set(j, b)
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(i < self.rows, "row {i} out of range {}", self.rows);
        self.data[i].flip(j)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        BitVec::from_bools(&self.data.iter().map(|r| r.dot(v)).collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            let acc = &mut out.data[i];
            for k in r.ones() {
                acc.xor_assign(&other.data[k]);
            }
        }
        out
    }

    /// Reduced row echelon form; returns the reduced matrix and its pivot columns.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| m.data[i].get(c)) else { continue };
            m.data.swap(r, p);
            let pivot_row = m.data[r].clone();
            for i in 0..self.rows {
                if i != r && m.data[i].get(c) {
                    m.data[i].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only; cheaper than a full rref.
        let mut rows: Vec<BitVec> = self.data.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(c)) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::unit(self.cols, free);
            for (k, &p) in pivots.iter().enumerate() {
                if r.data[k].get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `self · x = b`, if one exists.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        // Augment and eliminate.
        let mut aug = F2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in self.data[i].ones() {
                aug.set(i, j, true);
            }
            if b.get(i) {
                aug.set(i, self.cols, true);
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = BitVec::zeros(self.cols);
        for (k, &p) in pivots.iter().enumerate() {
            if r.data[k].get(self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }
}

/// Rank of the span of a list of vectors of common length `n`.
#[cfg(test)]
pub(crate) fn span_rank(n: usize, vecs: &[BitVec]) -> usize {
    F2Matrix::from_rows(n, vecs.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_rank(m: &F2Matrix) -> usize {
        // Integer fraction-free elimination, reduced mod 2 at every step.
        let mut a: Vec<Vec<i64>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j) as i64).collect()).collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| a[i][c] % 2 != 0) else { continue };
            a.swap(rank, p);
            for i in 0..a.len() {
                if i != rank && a[i][c] % 2 != 0 {
                    let (pr, f) = (a[rank].clone(), a[i][c]);
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x = (*x * pr[c] - f * y).rem_euclid(2);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = F2Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(any::<bool>(), r * c).prop_map(move |bits| F2Matrix::from_fn(r, c, |i, j| bits[i * c + j]))
        })
    }

    #[test]
    fn small_cases() {
        assert_eq!(F2Matrix::identity(3).rank(), 3);
        assert_eq!(F2Matrix::from_fn(2, 2, |_, _| true).rank(), 1);
        assert!(F2Matrix::identity(4).kernel_basis().is_empty());
        assert_eq!(F2Matrix::zeros(2, 3).kernel_basis().len(), 3);
    }

    proptest! {
        #[test]
        fn rank_matches_naive(m in arb_matrix(20)) {
            prop_assert_eq!(m.rank(), naive_rank(&m));
        }

        #[test]
        fn rank_nullity(m in arb_matrix(24)) {
            let ker = m.kernel_basis();
            prop_assert_eq!(m.rank() + ker.len(), m.cols());
            for v in &ker {
                prop_assert!(m.mul_vec(v).is_zero());
            }
            prop_assert_eq!(span_rank(m.cols(), &ker), ker.len());
        }

        #[test]
        fn solve_is_consistent(m in arb_matrix(16), seed in any::<u64>()) {
            let x = BitVec::from_indices(m.cols(), (0..m.cols()).filter(|i| (seed >> (i % 64)) & 1 == 1));
            let b = m.mul_vec(&x);
            let y = m.solve(&b).expect("b is in the image");
            prop_assert_eq!(m.mul_vec(&y), b);
        }

        #[test]
        fn transpose_preserves_rank(m in arb_matrix(18)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
