//! Exact linear algebra: bit-packed matrices over F2, exterior algebra over F2,
//! and congruence diagonalization of integer symmetric forms.

mod bitvec;
pub(crate) mod ext;
mod matrix;
mod symint;

pub use bitvec::BitVec;
pub use ext::ExtElement;
pub use matrix::F2Matrix;
pub use symint::{bareiss_det, SymIntMatrix};

/// Rank of an F2 matrix.
pub fn rank(m: &F2Matrix) -> usize {
    m.rank()
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel_basis(m: &F2Matrix) -> Vec<BitVec> {
    m.kernel_basis()
}

/// Exterior product over F2.
pub fn wedge(a: &ExtElement, b: &ExtElement) -> crate::Result<ExtElement> {
    a.wedge(b)
}

/// Signature, determinant and nullity of an integer symmetric matrix.
pub fn signature_det_nullity(a: &SymIntMatrix) -> (i64, num_bigint::BigInt, usize) {
    a.signature_det_nullity()
}
