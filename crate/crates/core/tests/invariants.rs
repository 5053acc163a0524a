use circumquad_core::exact::{sqrt_enclosure, Expr};
use circumquad_core::geom::{
    contains_point, convex_hull, halfplane_clip, linf_distance_to_polygon, AffineMap2, ConvexPolygon, Line2,
    Point2, Side,
};
use circumquad_core::minquad::{midpoint_certificate, solve, varignon, SolverOptions};
use circumquad_core::num::{rat, Rational};
use proptest::prelude::*;

fn rational_point() -> impl Strategy<Value = Point2<Rational>> {
    (-40i64..=40, -40i64..=40, 1i64..=7).prop_map(|(x, y, d)| Point2::new(rat(x, d), rat(y, d)))
}

fn rational_body() -> impl Strategy<Value = ConvexPolygon<Rational>> {
    prop::collection::vec(rational_point(), 3..16).prop_filter_map("collinear", |pts| convex_hull(&pts).ok())
}

fn float_body() -> impl Strategy<Value = ConvexPolygon<f64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 3..24).prop_filter_map("degenerate", |pts| {
        let pts: Vec<_> = pts.into_iter().map(|(x, y)| Point2::new(x, y)).collect();
        convex_hull(&pts).ok().filter(|h| h.area() > 1e-3)
    })
}

fn rational_map() -> impl Strategy<Value = AffineMap2<Rational>> {
    prop::array::uniform6(-9i64..=9).prop_filter_map("singular", |m| {
        let r = |v: i64| rat(v, 3);
        AffineMap2::new(r(m[0]), r(m[1]), r(m[2]), r(m[3]), r(m[4]), r(m[5])).ok()
    })
}

proptest! {
    #[test]
    fn hull_is_idempotent(body in rational_body()) {
        let again = convex_hull(body.vertices()).unwrap();
        prop_assert_eq!(again.vertices(), body.vertices());
    }

    #[test]
    fn hull_contains_its_inputs(pts in prop::collection::vec(rational_point(), 3..16)) {
        if let Ok(hull) = convex_hull(&pts) {
            for p in &pts {
                prop_assert!(contains_point(&hull, p, &rat(0, 1)));
            }
        }
    }

    #[test]
    fn affine_area_scales_by_determinant(body in rational_body(), map in rational_map()) {
        let image = body.apply_affine(&map).unwrap();
        let det = map.det();
        let scale = if det < rat(0, 1) { -det } else { det };
        prop_assert_eq!(image.area(), body.area() * scale);
    }

    #[test]
    fn linf_distance_vanishes_exactly_inside(body in rational_body(), p in rational_point()) {
        let d = linf_distance_to_polygon(&p, &body);
        prop_assert!(d >= rat(0, 1));
        prop_assert_eq!(d == rat(0, 1), contains_point(&body, &p, &rat(0, 1)));
    }

    #[test]
    fn clipping_never_grows(body in rational_body(), a in -5i64..=5, b in -5i64..=5, c in -20i64..=20) {
        prop_assume!(a != 0 || b != 0);
        let line = Line2::new(rat(a, 1), rat(b, 1), rat(c, 4)).unwrap();
        let below = halfplane_clip(&body, &line, Side::Below);
        let above = halfplane_clip(&body, &line, Side::Above);
        let mut total = rat(0, 1);
        for part in [below, above].into_iter().flatten() {
            prop_assert!(part.area() <= body.area());
            total += part.area();
        }
        prop_assert_eq!(total, body.area());
    }

    #[test]
    fn sqrt_enclosure_is_sound(n in 0i64..1_000_000, d in 1i64..10_000, bits in 8u32..160) {
        let q = rat(n, d);
        let iv = sqrt_enclosure(&q, bits).unwrap();
        prop_assert!(iv.lo() * iv.lo() <= q);
        prop_assert!(iv.hi() * iv.hi() >= q);
    }

    #[test]
    fn expression_enclosures_contain_exact_values(a in -500i64..500, b in 1i64..500, c in -500i64..500) {
        let (qa, qb, qc) = (rat(a, 7), rat(b, 11), rat(c, 13));
        let exact = (qa.clone() * qb.clone() - qc.clone()) / qb.clone();
        let e = (Expr::constant(qa) * Expr::constant(qb.clone()) - Expr::constant(qc)) / Expr::constant(qb);
        for bits in [16, 64, 128] {
            prop_assert!(e.eval(bits).unwrap().contains(&exact));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_output_circumscribes_with_half_area_varignon(body in float_body()) {
        let s = solve(&body, &SolverOptions::default()).unwrap();
        let cert = midpoint_certificate(&body, &s.quad, &1e-9);
        prop_assert!(cert.contains_k);
        prop_assert!(s.certificate.area_ratio >= 1.0 - 1e-9);
        prop_assert!(s.certificate.area_ratio <= std::f64::consts::SQRT_2 + 1e-6);
        if !s.quad.is_degenerate() {
            let p = varignon(&s.quad).unwrap();
            prop_assert!((2.0 * p.area() - s.quad.area()).abs() <= 1e-9 * s.quad.area());
        }
    }

    #[test]
    fn solver_is_affine_equivariant(body in float_body(), shear in -1.5f64..1.5, stretch in 0.3f64..3.0) {
        let map = AffineMap2::new(stretch, shear, 0.0, 1.0 / stretch, 0.4, -0.2).unwrap();
        let image = body.apply_affine(&map).unwrap();
        let a = solve(&body, &SolverOptions::default()).unwrap().certificate.area_ratio;
        let b = solve(&image, &SolverOptions::default()).unwrap().certificate.area_ratio;
        prop_assert!((a - b).abs() < 1e-4, "{} vs {}", a, b);
    }
}
