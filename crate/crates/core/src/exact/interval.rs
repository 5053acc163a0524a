use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{format_rational, Rational};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::DomainError(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(q: Rational) -> Self {
        Self { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.lo <= *q && *q <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> Self {
        Self { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.contains_zero() {
            return Err(Error::DivisionByIntervalContainingZero);
        }
        let recip = Self { lo: other.hi.recip(), hi: other.lo.recip() };
        Ok(self.mul(&recip))
    }

    /// Enclosure of `{√x : x ∈ self}`.
    pub fn sqrt(&self, precision_bits: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        let lo = sqrt_enclosure(&self.lo, precision_bits)?.lo;
        let hi = sqrt_enclosure(&self.hi, precision_bits)?.hi;
        Ok(Self { lo, hi })
    }

    /// Rounds the endpoints outward onto a dyadic grid fine enough for
    /// `precision_bits` relative bits, bounding the size of the rationals.
    pub fn round_outward(&self, precision_bits: u32) -> Self {
        let magnitude = std::cmp::max(self.lo.abs(), self.hi.abs());
        if magnitude.is_zero() {
            return self.clone();
        }
        let exponent = magnitude.numer().bits() as i64 - magnitude.denom().bits() as i64;
        let k = (precision_bits as i64 + 8 - exponent.min(0)).max(0) as usize;
        let scale = BigInt::one() << k;
        let floor = |q: &Rational| (q.numer() * &scale).div_floor(q.denom());
        let ceil = |q: &Rational| -((-q.numer() * &scale).div_floor(q.denom()));
        let lo = Rational::new(floor(&self.lo), scale.clone());
        let hi = Rational::new(ceil(&self.hi), scale.clone());
        Self { lo, hi }
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.lo.to_f64().unwrap_or(f64::NAN), self.hi.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi))
    }
}

/// `[lo, hi]` with `lo² ≤ q ≤ hi²` and `hi − lo ≤ 2^(−precision_bits)`.
///
/// Exact squares give a point interval.
pub fn sqrt_enclosure(q: &Rational, precision_bits: u32) -> Result<Interval> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if precision_bits < 8 {
        return Err(Error::DomainError(format!("precision {precision_bits} < 8 bits")));
    }
    let k = precision_bits as usize + 1;
    let scale = BigInt::one() << k;
    // floor(q · 4^k), then its integer square root
    let scaled = (q.numer() << (2 * k)).div_floor(q.denom());
    let root = scaled.sqrt();
    let lo = Rational::new(root.clone(), scale.clone());
    if &lo * &lo == *q {
        return Ok(Interval::point(lo));
    }
    let hi = Rational::new(root + 1, scale);
    Ok(Interval { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn sqrt_of_perfect_square_is_exact() {
        let s = sqrt_enclosure(&rat(4, 1), 64).unwrap();
        assert_eq!(s, Interval::point(rat(2, 1)));
        assert_eq!(sqrt_enclosure(&rat(9, 16), 8).unwrap(), Interval::point(rat(3, 4)));
        assert_eq!(sqrt_enclosure(&rat(0, 1), 64).unwrap(), Interval::point(rat(0, 1)));
    }

    #[test]
    fn sqrt_two_brackets_and_is_narrow() {
        let two = rat(2, 1);
        let s = sqrt_enclosure(&two, 64).unwrap();
        assert!(s.lo() * s.lo() <= two && two <= s.hi() * s.hi());
        let bound = rat(1, 1) / Rational::from_integer(BigInt::one() << 64) * rat(2, 1);
        assert!(s.width() <= bound);
        let (lo, hi) = s.to_f64_bounds();
        assert!(lo <= std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 <= hi);
    }

    #[test]
    fn sqrt_errors() {
        assert_eq!(sqrt_enclosure(&rat(-1, 3), 64), Err(Error::NegativeRadicand));
        assert!(sqrt_enclosure(&rat(2, 1), 4).is_err());
    }

    #[test]
    fn division_by_zero_interval() {
        let a = Interval::point(rat(1, 1));
        let b = Interval::new(rat(-1, 1), rat(1, 1)).unwrap();
        assert_eq!(a.div(&b), Err(Error::DivisionByIntervalContainingZero));
    }

    #[test]
    fn outward_rounding_contains_original() {
        let x = Interval::new(rat(1, 3), rat(2, 7)).err();
        assert!(x.is_some());
        let x = Interval::new(rat(-1, 3), rat(5, 7)).unwrap();
        let r = x.round_outward(16);
        assert!(r.lo() <= x.lo() && x.hi() <= r.hi());
        let tiny = Interval::point(rat(53, 100_000_000));
        let r = tiny.round_outward(64);
        assert!(r.contains(&rat(53, 100_000_000)));
        assert!(r.width() * rat(100_000_000, 53) < rat(1, 1 << 40));
    }

    #[test]
    fn multiplication_handles_signs() {
        let a = Interval::new(rat(-2, 1), rat(3, 1)).unwrap();
        let b = Interval::new(rat(-5, 1), rat(1, 1)).unwrap();
        assert_eq!(a.mul(&b), Interval::new(rat(-15, 1), rat(10, 1)).unwrap());
        assert_eq!(a.sub(&b), Interval::new(rat(-3, 1), rat(8, 1)).unwrap());
    }
}
