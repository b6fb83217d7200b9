//! Exact computation of the even/odd subset-sum triangles, Losanitsch's
//! triangle, and their q-binomial residues modulo `q^p - 1`.
//!
//! Every quantity is produced by at least two independent routes
//! (recursion, closed form, generating-function series, brute-force
//! enumeration) so that the [`identities`] battery can cross-check them.
//!
//! * [`algebra`]: big integers, dense polynomials, the residue ring
//!   `Z[q]/(q^p - 1)` and cyclotomic reduction.
//! * [`oracle`]: brute-force enumeration of subsets, binary words,
//!   reversal classes and bracelets.
//! * [`triangles`]: the number triangles by recursion and closed form.
//! * [`identities`]: polynomial families, series expansion and the
//!   identity battery.

pub mod algebra;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod triangles;

pub use algebra::{binomial, q_binomial, Integer, ResiduePoly, RingPoly, UniPoly, Var};
pub use error::{Error, Result};
