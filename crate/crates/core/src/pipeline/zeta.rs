//! The rational function bounding the second corner-cut quadrangle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Scalar;

/// Arguments of `ζ_{c,δ}(t)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaParams<T> {
    pub c: T,
    pub delta: T,
    pub t: T,
}

impl<T: Scalar> ZetaParams<T> {
    pub fn new(c: T, delta: T, t: T) -> Self {
        Self { c, delta, t }
    }
}

fn check_domain<T: Scalar>(c: &T, delta: &T) -> Result<()> {
    if *c < T::ratio(14, 5) {
        return Err(Error::DomainError(format!("c = {c:?} < 14/5")));
    }
    if *delta < T::zero() || *delta > T::ratio(1, 10) {
        return Err(Error::DomainError(format!("delta = {delta:?} outside [0, 1/10]")));
    }
    Ok(())
}

fn half_width<T: Scalar>(c: &T) -> T {
    -(c.clone() / T::from_i64(2))
}

/// `c(9 − 20δ + 20δ²) + 4(t − 1)`, positive for `t > −c/2`.
fn denominator<T: Scalar>(c: &T, d: &T, t: &T) -> T {
    let k = T::from_i64;
    c.clone() * (k(9) - k(20) * d.clone() + k(20) * d.clone() * d.clone()) + k(4) * (t.clone() - T::one())
}

/// `ζ_{c,δ}(t)` for `c ≥ 14/5`, `δ ∈ [0, 1/10]`, `t ≥ −c/2`.
pub fn zeta<T: Scalar>(p: &ZetaParams<T>) -> Result<T> {
    let ZetaParams { c, delta: d, t } = p;
    check_domain(c, d)?;
    if *t < half_width(c) {
        return Err(Error::DomainError(format!("t = {t:?} < -c/2")));
    }
    let k = T::from_i64;
    let den = denominator(c, d, t);
    if den.is_zero() {
        return Err(Error::DomainError("zeta denominator vanishes".into()));
    }
    let tm1 = t.clone() - T::one();
    let a = c.clone() * (k(3) - k(4) * d.clone());
    let pre = c.clone() / (k(5) * (T::one() - k(2) * d.clone()));
    let first = (a.clone() + tm1.clone())
        * (k(4) * a.clone() + (k(7) + k(4) * d.clone() - k(20) * d.clone() * d.clone()) * tm1.clone())
        / den;
    Ok(pre.clone() * first - pre * (k(3) - k(4) * d.clone()) * tm1)
}

/// Closed form of `ζ_{c,δ}(−c/2)`, the maximum of `ζ_{c,δ}` on `[−c/2, ∞)`.
pub fn zeta_bound<T: Scalar>(c: &T, delta: &T) -> Result<T> {
    check_domain(c, delta)?;
    let k = T::from_i64;
    let d = delta.clone();
    let tail = (c.clone() - k(2)) * (c.clone() * (k(43) - k(54) * d.clone()) - k(22) - k(20) * d.clone())
        / (c.clone() * (k(7) - k(20) * d.clone() + k(20) * d.clone() * d.clone()) - k(4));
    Ok(c.clone() / k(20)
        * (k(8) * (c.clone() + k(2)) + k(4) * c.clone() / (T::one() - k(2) * d) + tail))
}

/// `c²(9 − 48δ + 108δ² − 80δ³) + c(9 − 20δ + 20δ²)(t − 1) + 2(t − 1)²`, whose
/// negation carries the sign of `ζ'`.
pub fn zeta_derivative_numerator<T: Scalar>(p: &ZetaParams<T>) -> T {
    let ZetaParams { c, delta: d, t } = p;
    let k = T::from_i64;
    let d2 = d.clone() * d.clone();
    let tm1 = t.clone() - T::one();
    c.clone() * c.clone() * (k(9) - k(48) * d.clone() + k(108) * d2.clone() - k(80) * d2.clone() * d.clone())
        + c.clone() * (k(9) - k(20) * d.clone() + k(20) * d2) * tm1.clone()
        + k(2) * tm1.clone() * tm1
}

/// `2 (t − (1 − c(3 − 4δ))) (t − (1 − c(3 − 12δ + 20δ²)/2))`, the factored
/// form of [`zeta_derivative_numerator`].
pub fn zeta_derivative_factored<T: Scalar>(p: &ZetaParams<T>) -> T {
    let ZetaParams { c, delta: d, t } = p;
    let k = T::from_i64;
    let root1 = T::one() - c.clone() * (k(3) - k(4) * d.clone());
    let root2 = T::one() - c.clone() * (k(3) - k(12) * d.clone() + k(20) * d.clone() * d.clone()) / k(2);
    k(2) * (t.clone() - root1) * (t.clone() - root2)
}

/// `ζ'_{c,δ}(t)` for `t > −c/2`.
pub fn zeta_derivative<T: Scalar>(p: &ZetaParams<T>) -> Result<T> {
    let ZetaParams { c, delta: d, t } = p;
    check_domain(c, d)?;
    if *t <= half_width(c) {
        return Err(Error::DomainError(format!("t = {t:?} <= -c/2")));
    }
    let k = T::from_i64;
    let den = denominator(c, d, t);
    Ok(-(k(2) * c.clone() * (T::one() - k(2) * d.clone()) * zeta_derivative_numerator(p)) / (den.clone() * den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, Rational};

    #[test]
    fn value_at_three_zero() {
        let p = ZetaParams::new(rat(3, 1), rat(0, 1), rat(-3, 2));
        assert_eq!(zeta(&p).unwrap(), rat(2973, 340));
        assert_eq!(zeta_bound(&rat(3, 1), &rat(0, 1)).unwrap(), rat(2973, 340));
    }

    #[test]
    fn derivative_negative_at_origin() {
        let p = ZetaParams::new(rat(3, 1), rat(0, 1), rat(0, 1));
        assert!(zeta_derivative(&p).unwrap() < rat(0, 1));
    }

    #[test]
    fn domain_errors() {
        let bad_c = ZetaParams::new(rat(2, 1), rat(0, 1), rat(0, 1));
        assert!(matches!(zeta(&bad_c), Err(Error::DomainError(_))));
        let bad_delta = ZetaParams::new(rat(3, 1), rat(1, 5), rat(0, 1));
        assert!(matches!(zeta(&bad_delta), Err(Error::DomainError(_))));
        let bad_t = ZetaParams::new(rat(3, 1), rat(0, 1), rat(-2, 1));
        assert!(matches!(zeta(&bad_t), Err(Error::DomainError(_))));
        let edge = ZetaParams::new(rat(3, 1), rat(0, 1), rat(-3, 2));
        assert!(zeta_derivative(&edge).is_err());
        assert!(zeta_bound(&rat(1, 1), &rat(0, 1)).is_err());
    }

    #[test]
    fn finite_differences_match_derivative() {
        let h = 1e-6;
        for &(c, d, t) in &[(3.0, 0.05, 0.3), (2.9, 0.0, -1.2), (4.5, 0.1, 2.0)] {
            let f = |t: f64| zeta(&ZetaParams::new(c, d, t)).unwrap();
            let fd = (f(t + h) - f(t - h)) / (2.0 * h);
            let exact = zeta_derivative(&ZetaParams::new(c, d, t)).unwrap();
            assert!((fd - exact).abs() < 1e-6 * (1.0 + exact.abs()), "{fd} vs {exact}");
        }
    }

    #[test]
    fn factorization_at_a_point() {
        let p = ZetaParams::new(rat(17, 5), rat(3, 100), rat(-7, 4));
        assert_eq!(zeta_derivative_numerator(&p), zeta_derivative_factored::<Rational>(&p));
    }
}
