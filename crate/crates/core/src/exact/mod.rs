//! Certified arithmetic: rational intervals with outward rounding, square-root
//! enclosures and three-valued comparisons of radical expressions.

pub(crate) mod expr;
mod interval;

pub use expr::{certify_less, CertifiedComparison, Expr, Relation, Verdict};
pub use interval::{sqrt_enclosure, Interval};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 128;
