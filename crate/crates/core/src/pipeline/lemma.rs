//! Quadrangles around the octagon: the corner cut and the two-line construction.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{line_intersection, AffineMap2, Line2, Point2};
use crate::minquad::Quadrilateral;
use crate::num::{Rational, Scalar};
use crate::pipeline::scene::ContactBox;
use crate::pipeline::zeta::{zeta, zeta_bound, ZetaParams};

/// Which construction produced the quadrangle.
///
/// The four corner-cut branches are one construction seen through the
/// symmetries of the box `[L, L + c] × [B, B + c]`, where `L = v1.x` and
/// `B = v2.y` after reflection normalization:
/// `UTop` fires when `w1.y < B + (1/2 − δ)c`, `UBottom` when
/// `w1.y > B + (1/2 + δ)c`, `ULeft` when `w2.x < L + (1/2 − δ)c` and
/// `URight` when `w2.x > L + (1/2 + δ)c`. Otherwise both right and top
/// contacts sit near the middle of their sides and `MidpointCase` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Branch {
    UTop,
    UBottom,
    ULeft,
    URight,
    MidpointCase,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Branch::UTop => "U_TOP",
            Branch::UBottom => "U_BOTTOM",
            Branch::ULeft => "U_LEFT",
            Branch::URight => "U_RIGHT",
            Branch::MidpointCase => "MIDPOINT_CASE",
        };
        f.write_str(name)
    }
}

/// Axis reflections `(x ↦ −x, y ↦ −y)` applied by [`reflection_normalize`].
pub type ReflectionFlags = (bool, bool);

fn reflect_x<T: Scalar>(p: &Point2<T>) -> Point2<T> {
    Point2::new(-p.x.clone(), p.y.clone())
}

fn reflect_y<T: Scalar>(p: &Point2<T>) -> Point2<T> {
    Point2::new(p.x.clone(), -p.y.clone())
}

/// Applies the given axis reflections to a contact box, relabelling contacts.
pub fn apply_reflections<T: Scalar>(b: &ContactBox<T>, flags: ReflectionFlags) -> ContactBox<T> {
    let mut out = b.clone();
    if flags.0 {
        out = ContactBox::from_contacts(reflect_x(&out.w1), reflect_x(&out.v2), reflect_x(&out.v1), reflect_x(&out.w2));
    }
    if flags.1 {
        out = ContactBox::from_contacts(reflect_y(&out.v1), reflect_y(&out.w2), reflect_y(&out.w1), reflect_y(&out.v2));
    }
    out
}

/// Reflects at the coordinate axes so that `−v1.x ≤ w1.x` and `−v2.y ≤ w2.y`.
pub fn reflection_normalize<T: Scalar>(b: &ContactBox<T>) -> (ContactBox<T>, ReflectionFlags) {
    let flags = (-b.v1.x.clone() > b.w1.x, -b.v2.y.clone() > b.w2.y);
    (apply_reflections(b, flags), flags)
}

/// A quadrangle containing the square and the four contacts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaQuad<T> {
    pub quad: Quadrilateral<T>,
    pub branch: Branch,
    /// The branch's closed-form area, equal to the shoelace area.
    pub closed_form_area: T,
    pub reflections: ReflectionFlags,
}

/// `max{c(c(1 + δ) + 2δ)/(1 + 2δ), ζ_{c,δ}(−c/2)}`, the area bound for every branch.
pub fn lemma_area_bound<T: Scalar>(c: &T, delta: &T) -> Result<T> {
    let two = T::from_i64(2);
    let corner = c.clone() * (c.clone() * (T::one() + delta.clone()) + two.clone() * delta.clone())
        / (T::one() + two * delta.clone());
    Ok(T::max_val(&corner, &zeta_bound(c, delta)?))
}

fn check_hypotheses<T: Scalar>(b: &ContactBox<T>, c: &T, delta: &T) -> Result<()> {
    let fail = |what: &str| Err(Error::HypothesisViolated(what.to_string()));
    if *c < T::ratio(14, 5) {
        return fail("c >= 14/5");
    }
    if *delta < T::zero() || *delta > T::ratio(1, 10) {
        return fail("delta in [0, 1/10]");
    }
    let unit = |v: &T| -T::one() <= *v && *v <= T::one();
    for (name, v) in [("v1.y", &b.v1.y), ("v2.x", &b.v2.x), ("w1.y", &b.w1.y), ("w2.x", &b.w2.x)] {
        if !unit(v) {
            return fail(&format!("{name} in [-1, 1]"));
        }
    }
    for (name, v) in [("-v1.x", -b.v1.x.clone()), ("-v2.y", -b.v2.y.clone()), ("w1.x", b.w1.x.clone()), ("w2.y", b.w2.y.clone())] {
        if v < T::one() {
            return fail(&format!("{name} >= 1"));
        }
    }
    if b.w1.x.clone() - b.v1.x.clone() > *c {
        return fail("w1.x - v1.x <= c");
    }
    if b.w2.y.clone() - b.v2.y.clone() > *c {
        return fail("w2.y - v2.y <= c");
    }
    Ok(())
}

/// Symmetry of the box taking a configuration to the canonical corner cut.
#[derive(Clone, Copy)]
enum Frame {
    Identity,
    Mirror,
    Swap,
    SwapMirror,
}

impl Frame {
    /// The map into the frame, for box corner `(l, b)` and side `c`.
    fn map<T: Scalar>(self, l: &T, b: &T, c: &T) -> AffineMap2<T> {
        let (z, o) = (T::zero, T::one);
        let two = T::from_i64(2);
        let m = match self {
            Frame::Identity => Ok(AffineMap2::identity()),
            Frame::Mirror => AffineMap2::new(o(), z(), z(), -o(), z(), two * b.clone() + c.clone()),
            Frame::Swap => AffineMap2::new(z(), o(), o(), z(), z(), z()),
            Frame::SwapMirror => AffineMap2::new(z(), o(), -o(), z(), z(), two * l.clone() + c.clone()),
        };
        m.expect("symmetries are invertible")
    }
}

/// Quadrangle `Q̃` with `conv(P ∪ contacts) ⊆ Q̃` and
/// `|Q̃| ≤ max{c(c(1+δ)+2δ)/(1+2δ), ζ_{c,δ}(−c/2)}`.
///
/// Contacts are reflection-normalized internally and the result is mapped
/// back, so any box satisfying the hypotheses is accepted.
pub fn lemma_octagon_quad<T: Scalar>(contacts: &ContactBox<T>, c: &T, delta: &T) -> Result<LemmaQuad<T>> {
    check_hypotheses(contacts, c, delta)?;
    let (n, flags) = reflection_normalize(contacts);
    let (l, b) = (n.v1.x.clone(), n.v2.y.clone());
    let k = T::from_i64;
    let half = T::ratio(1, 2);
    let low = half.clone() - delta.clone();
    let high = half.clone() + delta.clone();

    let corner_cases = [
        (Branch::UTop, Frame::Identity, n.w1.y.clone() < b.clone() + low.clone() * c.clone()),
        (Branch::UBottom, Frame::Mirror, n.w1.y.clone() > b.clone() + high.clone() * c.clone()),
        (Branch::ULeft, Frame::Swap, n.w2.x.clone() < l.clone() + low.clone() * c.clone()),
        (Branch::URight, Frame::SwapMirror, n.w2.x.clone() > l.clone() + high.clone() * c.clone()),
    ];
    let (branch, quad, area) = match corner_cases.iter().find(|(_, _, fires)| *fires) {
        Some(&(branch, frame, _)) => {
            let (fl, fb) = match frame {
                Frame::Identity | Frame::Mirror => (l.clone(), b.clone()),
                Frame::Swap | Frame::SwapMirror => (b.clone(), l.clone()),
            };
            let top = fb.clone() + c.clone();
            let canonical = Quadrilateral::new([
                Point2::new(T::one(), top.clone()),
                Point2::new(fl.clone(), top),
                Point2::new(fl.clone(), fb.clone()),
                Point2::new(T::one() + (fl.clone() + c.clone() - T::one()) / high.clone(), fb),
            ])?;
            let back = frame.map(&l, &b, c).inverse()?;
            let area = c.clone() * (c.clone() + k(2) * delta.clone() - k(2) * fl * delta.clone())
                / (T::one() + k(2) * delta.clone());
            (branch, canonical.apply_affine(&back)?, area)
        }
        None => {
            let base = Point2::new(T::one(), b.clone());
            let u_prime = Line2::through(&base, &Point2::new(l.clone() + c.clone(), b.clone() + low.clone() * c.clone()))?;
            let anchor = Point2::new(l.clone() + c.clone(), b.clone() + k(4) * c.clone() / k(5));
            let u_second = Line2::through(&anchor, &Point2::new(anchor.x.clone() - k(5) * low, anchor.y.clone() + T::one()))?;
            let u1 = line_intersection(&u_prime, &u_second)?;
            let u2 = u_second.at_x(l.clone())?;
            let quad = Quadrilateral::new([u1, u2, Point2::new(l.clone(), b.clone()), base])?;
            let area = zeta(&ZetaParams::new(c.clone(), delta.clone(), l))?;
            (Branch::MidpointCase, quad, area)
        }
    };

    let mut quad = quad;
    let one = T::one;
    if flags.1 {
        quad = quad.apply_affine(&AffineMap2::new(one(), T::zero(), T::zero(), -one(), T::zero(), T::zero())?)?;
    }
    if flags.0 {
        quad = quad.apply_affine(&AffineMap2::new(-one(), T::zero(), T::zero(), one(), T::zero(), T::zero())?)?;
    }
    Ok(LemmaQuad { quad, branch, closed_form_area: area, reflections: flags })
}

fn random_unit(rng: &mut impl Rng, den: i64) -> Rational {
    Rational::new(rng.gen_range(-den..=den).into(), den.into())
}

/// A random contact box satisfying the hypotheses of [`lemma_octagon_quad`]
/// for side `c`, with coordinates on the grid `1/den`.
pub fn random_contact_box(rng: &mut impl Rng, c: &Rational, den: i64) -> ContactBox<Rational> {
    let one = Rational::from_integer(1.into());
    let grid = |rng: &mut _, lo: &Rational, hi: &Rational| -> Rational {
        let lo_i = (lo * Rational::from_integer(den.into())).ceil().to_integer();
        let hi_i = (hi * Rational::from_integer(den.into())).floor().to_integer();
        let span: i64 = (&hi_i - &lo_i).try_into().expect("small span");
        let pick: i64 = Rng::gen_range(rng, 0..=span);
        Rational::new(lo_i + pick, den.into())
    };
    // widths in [2, c], lower bounds in [1 - width, -1]
    let side = |rng: &mut _| {
        let width = grid(rng, &Rational::from_integer(2.into()), c);
        let a = grid(rng, &(&one - &width), &-one.clone());
        (a.clone(), a + width)
    };
    let (a1, b1) = side(rng);
    let (a2, b2) = side(rng);
    ContactBox::from_contacts(
        Point2::new(a1, random_unit(rng, den)),
        Point2::new(random_unit(rng, den), a2),
        Point2::new(b1, random_unit(rng, den)),
        Point2::new(random_unit(rng, den), b2),
    )
}
