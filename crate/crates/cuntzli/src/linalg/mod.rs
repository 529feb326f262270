//! Exact integer/rational linear algebra: matrices, Smith and Hermite forms,
//! finite quotients Z^n / A Z^n, and lattice arithmetic.

mod int_matrix;
mod quotient;
mod rat_matrix;
mod smith;

pub use int_matrix::{IntegerMatrix, IntegerVector};
pub use quotient::{lattice_intersection, lattice_member, Coset, QuotientGroup};
pub use rat_matrix::{RationalMatrix, RationalVector};
pub use smith::{column_hermite, integer_kernel, smith_general, smith_normal_form, SmithDecomposition};
