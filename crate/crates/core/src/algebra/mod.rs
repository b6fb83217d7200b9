//! Exact integers, dense polynomials and the residue ring `Z[q]/(q^p - 1)`.

mod integer;
mod poly;
mod qbinom;
mod residue;
mod ring;

pub use integer::{binomial, exact_div, is_prime, Integer};
pub use poly::{UniPoly, Var};
pub use qbinom::{q_binomial, q_binomial_row, QBinomialTable};
pub use residue::ResiduePoly;
pub use ring::{Coeff, RingPoly};
