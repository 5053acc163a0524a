//! The explicit constants of the improvement argument and their certification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::expr::certify_less_named;
use crate::exact::{CertifiedComparison, Expr, Interval, Relation, Verdict};
use crate::num::{format_rational, rat, serialize_opt_rational, serialize_rational, Rational};
use crate::pipeline::zeta::zeta_bound;

/// `c1, c2, c3, r, δ`. `c2` and `r` default to their defining radicals
/// `1 + √(8c1(c1 − 1))` and `√(32(√c1 − 1))`; either may be overridden by a
/// rational value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PaperConstants {
    #[serde(serialize_with = "serialize_rational")]
    pub c1: Rational,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub c2: Option<Rational>,
    #[serde(serialize_with = "serialize_rational")]
    pub c3: Rational,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub r: Option<Rational>,
    #[serde(serialize_with = "serialize_rational")]
    pub delta: Rational,
}

impl Default for PaperConstants {
    fn default() -> Self {
        Self::paper()
    }
}

impl PaperConstants {
    /// `c1 = 1 + 5.3·10⁻⁷`, `c3 = 2.83134`, `δ = 2.824·10⁻²`, radical `c2` and `r`.
    pub fn paper() -> Self {
        Self {
            c1: rat(1, 1) + rat(53, 100_000_000),
            c2: None,
            c3: rat(283_134, 100_000),
            r: None,
            delta: rat(2_824, 100_000),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let one = rat(1, 1);
        if self.c1 < one {
            return Err(Error::BadParams(format!("c1 = {} < 1", format_rational(&self.c1))));
        }
        if self.c2.as_ref().is_some_and(|c2| *c2 < one) {
            return Err(Error::BadParams("c2 < 1".into()));
        }
        if self.r.as_ref().is_some_and(|r| *r < rat(0, 1)) {
            return Err(Error::BadParams("r < 0".into()));
        }
        if self.c3 < rat(14, 5) {
            return Err(Error::BadParams(format!("c3 = {} < 14/5", format_rational(&self.c3))));
        }
        if self.delta < rat(0, 1) || self.delta > rat(1, 10) {
            return Err(Error::BadParams(format!("delta = {} outside [0, 1/10]", format_rational(&self.delta))));
        }
        Ok(())
    }

    pub fn c1_expr(&self) -> Expr {
        Expr::constant(self.c1.clone())
    }

    pub fn c2_expr(&self) -> Expr {
        match &self.c2 {
            Some(v) => Expr::constant(v.clone()),
            None => Expr::int(1) + (Expr::int(8) * self.c1_expr() * (self.c1_expr() - Expr::int(1))).sqrt(),
        }
    }

    pub fn r_expr(&self) -> Expr {
        match &self.r {
            Some(v) => Expr::constant(v.clone()),
            None => (Expr::int(32) * (self.c1_expr().sqrt() - Expr::int(1))).sqrt(),
        }
    }

    /// `1/√c1`, the factor when the box is too large.
    pub fn box_large_factor(&self) -> Expr {
        Expr::int(1) / self.c1_expr().sqrt()
    }

    /// `1/√(1 + (c2 − 1)²/(8c1))`, the factor when the box is skewed.
    pub fn box_skewed_factor(&self) -> Expr {
        let excess = self.c2_expr() - Expr::int(1);
        Expr::int(1) / (Expr::int(1) + excess.square() / (Expr::int(8) * self.c1_expr())).sqrt()
    }

    /// `1/(1 + r²/32)`, the factor when the body leaves the octagon's neighbourhood.
    pub fn body_exceeds_factor(&self) -> Expr {
        Expr::int(1) / (Expr::int(1) + self.r_expr().square() / Expr::int(32))
    }

    /// Area bound of the corner-cut quadrangle, `c3(c3 + δ(2 + c3))/(1 + 2δ)`.
    pub fn corner_cut_bound(&self) -> Rational {
        let (c, d) = (&self.c3, &self.delta);
        c * (c + d * (rat(2, 1) + c)) / (rat(1, 1) + rat(2, 1) * d)
    }

    /// `ζ_{c3,δ}(−c3/2)`.
    pub fn zeta_bound(&self) -> Result<Rational> {
        zeta_bound(&self.c3, &self.delta)
    }

    /// `C(c3, r, δ) = (1 + r)² max{corner-cut bound, ζ bound}`.
    pub fn improvement_constant(&self) -> Result<Expr> {
        let worst = std::cmp::max(self.corner_cut_bound(), self.zeta_bound()?);
        Ok((Expr::int(1) + self.r_expr()).square() * Expr::constant(worst))
    }
}

/// Float view of the constants, taken from midpoints of tight enclosures.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConstantValues {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub r: f64,
    pub delta: f64,
}

fn midpoint(i: &Interval) -> f64 {
    let (lo, hi) = i.to_f64_bounds();
    0.5 * (lo + hi)
}

impl ConstantValues {
    pub fn from_constants(k: &PaperConstants) -> Result<Self> {
        let bits = crate::exact::DEFAULT_PRECISION;
        let f = |e: Expr| e.eval(bits).map(|i| midpoint(&i));
        Ok(Self {
            c1: f(k.c1_expr())?,
            c2: f(k.c2_expr())?,
            c3: f(Expr::constant(k.c3.clone()))?,
            r: f(k.r_expr())?,
            delta: f(Expr::constant(k.delta.clone()))?,
        })
    }
}

fn decimal(text: &str) -> Rational {
    crate::num::parse_rational(text).expect("literal decimal")
}

/// The three case factors agree: `(c2 − 1)² = 8c1(c1 − 1)` and
/// `1 + r²/32 = √c1`, checked exactly, plus overlap of the enclosures.
fn factors_coincide(k: &PaperConstants, bits: u32) -> Result<CertifiedComparison> {
    let f1 = k.box_large_factor();
    let f2 = k.box_skewed_factor();
    let f3 = k.body_exceeds_factor();
    let (i1, i2, i3) = (f1.eval(bits)?, f2.eval(bits)?, f3.eval(bits)?);
    let overlap = |a: &Interval, b: &Interval| a.lo() <= b.hi() && b.lo() <= a.hi();
    let one = rat(1, 1);
    let skew_identity = match &k.c2 {
        None => true,
        Some(c2) => {
            let e = c2 - &one;
            &e * &e == rat(8, 1) * &k.c1 * (&k.c1 - &one)
        }
    };
    let radius_identity = match &k.r {
        None => true,
        Some(r) => {
            let s = &one + r * r / rat(32, 1);
            &s * &s == k.c1
        }
    };
    let verdict = if !(overlap(&i1, &i2) && overlap(&i1, &i3) && overlap(&i2, &i3)) {
        Verdict::Disproven
    } else if skew_identity && radius_identity {
        Verdict::Proven
    } else {
        Verdict::UndecidableAtPrecision
    };
    Ok(CertifiedComparison::from_intervals(
        "factors_coincide",
        f1.to_string(),
        Relation::Equal,
        format!("{f2} = {f3}"),
        verdict,
        bits,
        &i1,
        &i2,
    ))
}

/// The eight comparisons behind the final factor, in order:
/// `c2_bound`, `r_bound`, `c3_dominates`, `corner_cut_bound`, `zeta_bound`,
/// `improvement_constant`, `final_factor`, `factors_coincide`.
pub fn certify_constants(k: &PaperConstants, precision_bits: u32) -> Result<Vec<CertifiedComparison>> {
    k.validate()?;
    if precision_bits < 8 {
        return Err(Error::BadParams(format!("precision {precision_bits} < 8 bits")));
    }
    let bits = precision_bits;
    let c = |q: Rational| Expr::constant(q);
    let area_threshold = decimal("7.95359");
    let checks = [
        ("c2_bound", k.c2_expr(), c(decimal("1.00206"))),
        ("r_bound", k.r_expr(), c(decimal("0.002913"))),
        ("c3_dominates", (Expr::int(8) * k.c1_expr() * k.c2_expr()).sqrt(), c(k.c3.clone())),
        ("corner_cut_bound", c(k.corner_cut_bound()), c(area_threshold.clone())),
        ("zeta_bound", c(k.zeta_bound()?), c(area_threshold)),
        ("improvement_constant", k.improvement_constant()?, c(decimal("7.999996"))),
        ("final_factor", k.box_large_factor(), c(decimal("0.99999974"))),
    ];
    let mut out = Vec::with_capacity(8);
    for (name, lhs, rhs) in checks.iter() {
        out.push(certify_less_named(name, lhs, rhs, bits)?);
    }
    out.push(factors_coincide(k, bits)?);
    Ok(out)
}

/// Whether every comparison is proven.
pub fn all_proven(comparisons: &[CertifiedComparison]) -> bool {
    comparisons.iter().all(CertifiedComparison::is_proven)
}

/// Smallest `f64` not below the rational `q`.
pub(crate) fn f64_upper(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    let f = q.to_f64().unwrap_or(f64::INFINITY);
    match Rational::from_float(f) {
        Some(back) if back < *q => f.next_up(),
        _ => f,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_constants_are_certified() {
        let out = certify_constants(&PaperConstants::paper(), 128).unwrap();
        assert_eq!(out.len(), 8);
        for cmp in &out {
            assert!(cmp.is_proven(), "{} is {:?}", cmp.name, cmp.verdict);
        }
    }

    #[test]
    fn perturbed_c1_fails() {
        let k = PaperConstants { c1: decimal("1.0001"), ..PaperConstants::paper() };
        let out = certify_constants(&k, 128).unwrap();
        let verdict = |n: &str| out.iter().find(|c| c.name == n).unwrap().verdict;
        assert_eq!(verdict("improvement_constant"), Verdict::Disproven);
        assert_eq!(verdict("c3_dominates"), Verdict::Disproven);
        assert_eq!(verdict("factors_coincide"), Verdict::Proven);
        assert!(!all_proven(&out));
    }

    #[test]
    fn low_precision_is_undecided_not_wrong() {
        let out = certify_constants(&PaperConstants::paper(), 8).unwrap();
        assert!(out.iter().any(|c| c.verdict == Verdict::UndecidableAtPrecision));
        assert!(out.iter().all(|c| c.verdict != Verdict::Disproven));
    }

    #[test]
    fn inconsistent_overrides() {
        let k = PaperConstants { r: Some(decimal("0.01")), ..PaperConstants::paper() };
        let out = certify_constants(&k, 128).unwrap();
        assert_eq!(out[7].verdict, Verdict::Disproven);
        // c1 = 9: (c2 - 1)^2 = 576 = 8·9·8 and 1 + r^2/32 = 3 = √9
        let exact = PaperConstants { c1: rat(9, 1), c2: Some(rat(25, 1)), r: Some(rat(8, 1)), ..PaperConstants::paper() };
        assert_eq!(certify_constants(&exact, 128).unwrap()[7].verdict, Verdict::Proven);
        let off = PaperConstants { c2: Some(rat(24, 1)), ..exact };
        assert_ne!(certify_constants(&off, 128).unwrap()[7].verdict, Verdict::Proven);
    }

    #[test]
    fn factor_values() {
        let k = PaperConstants::paper();
        let f = k.box_large_factor().eval(128).unwrap();
        let (lo, hi) = f.to_f64_bounds();
        assert!((lo - 0.999_999_735).abs() < 1e-9 && hi < 0.99999974);
        assert!(f64_upper(f.hi()) >= hi);
        assert!(Rational::from_float(f64_upper(f.hi())).unwrap() >= *f.hi());
    }

    #[test]
    fn validation() {
        let bad = PaperConstants { delta: rat(1, 5), ..PaperConstants::paper() };
        assert!(certify_constants(&bad, 128).is_err());
        assert!(certify_constants(&PaperConstants::paper(), 4).is_err());
    }
}
