//! Exact computations for globally generated vector bundles with small first
//! Chern class on projective space.
//!
//! The crate is split along the kinds of arithmetic involved:
//!
//! - [`chowring`]: Chern classes in `Z[h]/(h^{n+1})`, Riemann-Roch, the
//!   `P(E)` transform and the congruence/rank formulas for `c1 = 5` on `P^4`.
//! - [`exterior`]: multivectors over `k^{n+1}`, contraction, skew normal
//!   forms and the epimorphism criteria for contraction morphisms between
//!   twisted exterior powers of the cotangent bundle.
//! - [`cohomtab`]: Bott's formula, line bundle cohomology, spectra of stable
//!   rank 3 bundles on `P^3` and assorted closed-form cohomology counts.
//! - [`monadlab`]: symbolic bundle expressions and complexes built from them.
//! - [`classifier`]: enumeration of admissible Chern data and the table of
//!   bundles with `c1 = 5`.
//! - [`cli`]: the `pnbundles` command line front end.
//!
//! Everything is exact: integers are [`num::BigInt`], rationals are
//! [`num::BigRational`]. No floating point is used.

pub mod chowring;
pub mod classifier;
pub mod cli;
pub mod cohomtab;
pub mod exterior;
pub mod linalg;
pub mod monadlab;

mod error;
mod util;

pub use error::{Error, Result};
