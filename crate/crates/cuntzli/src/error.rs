//! Crate-wide error type.
//!
//! Every fallible operation returns `Result<T, Error>`. Variants carry enough
//! context to print a one-line diagnosis; none of them allocate until an error
//! actually occurs.

use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A square-matrix operation was handed a matrix with determinant zero.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// Operands disagree in dimension.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A group element admits no factorization a^-1 m b within the search bound.
    #[error("element is not factorizable within the search bound: {0}")]
    NotFactorizable(String),

    /// No common-multiple witness found up to the given BFS depth.
    #[error("Ore witness search failed at depth {depth} for {detail}")]
    OreSearchFailed { depth: usize, detail: String },

    /// The 2x2-only checker was called in another dimension.
    #[error("operation requires a 2x2 matrix, got {0}x{0}")]
    WrongDimension(usize),

    /// The checker requires |det| > 1.
    #[error("determinant modulus {0} is too small (need |det| > 1)")]
    DeterminantTooSmall(String),

    /// Groupoid arrows whose source and range cylinders are provably disjoint.
    #[error("arrows are not composable: {0}")]
    NotComposable(String),

    /// The cylinder levels at hand cannot certify the requested composition.
    #[error("cylinder resolution too coarse: {0}")]
    ResolutionTooCoarse(String),

    /// The requested normal form has no canonical chain for this family.
    #[error("not supported for this system family: {0}")]
    NotSupported(String),

    /// Multiplication table fails associativity on a basis triple.
    #[error("multiplication table is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    /// Multiplication table fails commutativity on a basis pair.
    #[error("multiplication table is not commutative at basis pair ({0}, {1})")]
    NotCommutative(usize, usize),

    /// First basis vector does not act as the ring unit.
    #[error("multiplication table has no unit in basis slot 0 (fails at basis index {0})")]
    NotUnital(usize),

    /// No invertible intertwiner found in the solution space.
    #[error("no invertible intertwiner found: {0}")]
    NoIntertwiner(String),

    /// Malformed document or element expression.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
