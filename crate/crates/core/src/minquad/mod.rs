//! Minimum-area circumscribed quadrilaterals.
//!
//! A circumscribed quadrilateral is encoded by four outward normal angles
//! `θ0 < θ1 < θ2 < θ3 < θ0 + 2π`, consecutive gaps below `π`; side `i` lies on
//! the supporting line of the body with normal angle `θi`.

mod brute;
mod certificate;
mod quad;
mod solver;
mod support;

pub use brute::brute_force_min_quad;
pub use certificate::{midpoint_certificate, varignon, CircumscriptionCertificate};
pub use quad::Quadrilateral;
pub use solver::{min_circumscribed_quadrilateral, solve, SolverOptions, Solution};
pub use support::SupportFunction;
