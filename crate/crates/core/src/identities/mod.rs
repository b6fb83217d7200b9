//! Polynomial families, generating-function series and the identity battery.

pub mod battery;
pub mod families;
pub mod general;
pub mod qpoly;
pub mod series;


pub use families::{e_poly, e_star_poly, l_poly, lbar_poly, o_poly};
pub use battery::{catalog, identity_battery, run_identity, CheckReport, Counterexample, IdentitySpec};
pub use general::{b_polys, general_e_poly};
pub use qpoly::{pentagonal_f, pentagonal_phi, q_fibonacci, q_newton, rogers_szego};
pub use series::{named_gf, series_expand, RationalGF};
