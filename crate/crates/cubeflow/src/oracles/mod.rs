//! Independent reference computations: reduced Khovanov homology from the
//! rank-one Frobenius algebra, the Jones polynomial from the Kauffman bracket,
//! and signature data from a Seifert matrix.

mod frobenius;
mod jones;
mod seifert;

pub use frobenius::{frobenius_kh_reduced, frobenius_kh_reduced_at};
pub use jones::{determinant_from_jones, kauffman_bracket, kauffman_jones};
pub use seifert::{braid_word, seifert_matrix, seifert_signature, vogel_braided, SeifertData};
