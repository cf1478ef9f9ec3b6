use proptest::prelude::*;
use rcn::cli::format;
use rcn::counter::{count_crossings, Method};
use rcn::exactgeom::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..9).prop_map(|(p, q)| Rational::frac(p, q))
}

fn point() -> impl Strategy<Value = Point2> {
    (rational(), rational()).prop_map(|(x, y)| Point2::new(x, y))
}

fn general_position(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Drawing> {
    prop::collection::vec(point(), n)
        .prop_map(|pts| Drawing::new(pts, "random"))
        .prop_filter("general position", |d| validate_general_position(d).is_ok())
}

/// Brute force over all six orderings of a quadruple's three pairings.
fn pairings_crossing(p: [&Point2; 4]) -> usize {
    [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]
        .into_iter()
        .filter(|&(a, b, c, d)| segments_properly_intersect(p[a], p[b], p[c], p[d]).unwrap())
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn orientation_is_antisymmetric_and_cyclic(a in point(), b in point(), c in point()) {
        let o = orientation(&a, &b, &c);
        prop_assert_eq!(orientation(&b, &a, &c), o.reversed());
        prop_assert_eq!(orientation(&a, &c, &b), o.reversed());
        prop_assert_eq!(orientation(&b, &c, &a), o);
    }

    #[test]
    fn orientation_survives_translation_and_scaling(
        a in point(), b in point(), c in point(), dx in rational(), dy in rational(), s in 1i64..50
    ) {
        let s = Rational::frac(s, 7);
        let map = |p: &Point2| Point2::new(&p.x * &s + &dx, &p.y * &s + &dy);
        prop_assert_eq!(orientation(&map(&a), &map(&b), &map(&c)), orientation(&a, &b, &c));
    }

    #[test]
    fn segment_test_is_symmetric(d in general_position(4..=4)) {
        let p = &d.points;
        let base = segments_properly_intersect(&p[0], &p[1], &p[2], &p[3]).unwrap();
        prop_assert_eq!(segments_properly_intersect(&p[1], &p[0], &p[2], &p[3]).unwrap(), base);
        prop_assert_eq!(segments_properly_intersect(&p[2], &p[3], &p[0], &p[1]).unwrap(), base);
        prop_assert_eq!(segments_properly_intersect(&p[3], &p[2], &p[1], &p[0]).unwrap(), base);
    }

    #[test]
    fn convex_iff_exactly_one_pairing_crosses(d in general_position(4..=4)) {
        let p = &d.points;
        let convex = in_convex_position(&p[0], &p[1], &p[2], &p[3]).unwrap();
        let crossings = pairings_crossing([&p[0], &p[1], &p[2], &p[3]]);
        prop_assert!(crossings <= 1);
        prop_assert_eq!(convex, crossings == 1);
    }

    #[test]
    fn counts_are_affine_invariant(
        d in general_position(4..=9),
        m in prop::array::uniform4(-5i64..6),
        t in prop::array::uniform2(rational()),
    ) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let m: Vec<Rational> = m.iter().map(|&v| Rational::integer(v)).collect();
        let image = d.map_affine([[&m[0], &m[1]], [&m[2], &m[3]]], [&t[0], &t[1]]);
        prop_assert_eq!(
            count_crossings(&image, Method::Quads, 1).unwrap(),
            count_crossings(&d, Method::Quads, 1).unwrap()
        );
    }

    #[test]
    fn methods_agree(d in general_position(4..=10), jobs in 1usize..4) {
        prop_assert_eq!(
            count_crossings(&d, Method::Pairs, jobs).unwrap(),
            count_crossings(&d, Method::Quads, 1).unwrap()
        );
    }

    #[test]
    fn file_round_trip(pts in prop::collection::vec(point(), 0..20)) {
        let d = Drawing::new(pts, "rt");
        let back = format::parse(&format::to_string(&d), "rt").unwrap();
        prop_assert_eq!(back.points, d.points);
    }
}

#[test]
fn general_position_violations_are_reported() {
    let d = Drawing::new(
        vec![Point2::from_ints(0, 0), Point2::from_ints(3, 1), Point2::from_ints(1, 1), Point2::from_ints(2, 2)],
        "c",
    );
    let err = count_crossings(&d, Method::Pairs, 1).unwrap_err();
    assert_eq!(err.to_string(), rcn::counter::CountError::GeneralPosition(Violation::Collinear(0, 2, 3)).to_string());
}
