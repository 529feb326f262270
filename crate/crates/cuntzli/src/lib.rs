//! Exact-arithmetic toolkit for the semigroup C*-relations attached to
//! integer matrix actions on Z^n.
//!
//! The crate models a system of isometries `s_a` (one per monoid element `a`)
//! and unitaries `u(m)` (one per lattice translation `m`) subject to the
//! covariance relation `s_a u(m) = u(A m) s_a` and the coset partition
//! relation at each level. Everything is computed exactly over `BigInt` /
//! `BigRational`; nothing here rounds.
//!
//! Capabilities, one module each:
//!
//! - [`linalg`]: Smith/Hermite forms, finite quotients `Z^n / A Z^n`,
//!   lattice membership and intersection.
//! - [`system`]: acting systems (matrix families), factorization of group
//!   elements into `a^-1 m b` words, Ore common-multiple witnesses, and the
//!   condition checkers (directedness, finite index, trivial core).
//! - [`semigroup`]: the inverse semigroup of partial isometries
//!   `E * w_g` in normal form, with exact multiplication and adjoints.
//! - [`regular_rep`]: the faithful basis-point oracle; every symbolic
//!   identity can be replayed pointwise on a finite window.
//! - [`tight`]: finite-level cylinders of the completion, the groupoid of
//!   germs, and canonical normal forms for the dilated action.
//! - [`duality`]: trace pairings for orders in number fields, the
//!   discriminant-matrix intertwiner, and phase-exact bicharacters.
//! - [`cli`]: the JSON document format and the `check` / `mul` / `verify`
//!   commands behind the thin `cuntzli` binary.
//!
//! Runnable walkthroughs, one per capability, live in `examples/`:
//!
//! ```text
//! cargo run -p cuntzli --example quotients      # Smith forms and cosets
//! cargo run -p cuntzli --example conditions     # system checkers
//! cargo run -p cuntzli --example semigroup      # normal forms and products
//! cargo run -p cuntzli --example oracle         # relation verification
//! cargo run -p cuntzli --example completion     # cylinders and germs
//! cargo run -p cuntzli --example number_fields  # trace-form duality
//! ```

pub mod cli;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod regular_rep;
pub mod sampling;
pub mod semigroup;
pub mod system;
pub mod tight;

pub use error::{Error, Result};
