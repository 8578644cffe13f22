//! Exact symmetric-polynomial eigenfunctions for Calogero–Sutherland type
//! operators.
//!
//! Everything is computed over the rationals. The crate is split into
//!
//! * [`algebra`]: rationals, index vectors, partial orders and sparse
//!   polynomial arithmetic,
//! * [`genfunc`]: the modified-complete polynomials `g_λ`, the overcomplete
//!   family `f_n` (two independent routes) and the two-species family
//!   `f_{n,ñ}`,
//! * [`operators`]: model specifications, exact application of the
//!   groundstate-conjugated operators and the groundstate identities,
//! * [`eigen`]: coefficient tables, assembled eigenfunctions and the oracle
//!   checks that certify them.

pub mod algebra;
pub mod eigen;
mod error;
pub mod genfunc;
pub mod operators;

pub use error::{Error, Result};
