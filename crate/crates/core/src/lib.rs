//! Minimum-area circumscribed quadrilaterals of planar convex bodies, the
//! octagon-based improvement pipeline, and exact certification of the
//! constants behind the factor `(1 − 2.6·10⁻⁷)·√2`.

pub mod bench;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod geom;
pub mod io;
pub mod minquad;
pub mod num;
pub mod pipeline;

pub use error::{Error, Result};
