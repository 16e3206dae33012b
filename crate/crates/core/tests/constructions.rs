use circdepth::constructions::{
    halving_line_construction, random_colored, random_convex, random_general_position,
    recursive_seven_region, seven_region_size, two_colored_convex, turning_values, ClaimKind,
};
use circdepth::depth::{
    bichromatic_census_check, bichromatic_census_relation_check, bichromatic_maximin,
    maximin_pair, repeated_weight_stats, weights,
};
use circdepth::geom::{convex_hull, is_convex_position};
use circdepth::{orientation, Color, ColoredPoint, ConstructionError, DepthError, PointSet};
use circdepth_oracles as oracle;
use proptest::prelude::*;

#[test]
fn random_sets() {
    let one = random_general_position(1, 3, 10).unwrap();
    assert!(one.len() == 1 && one.is_certified());
    let five = random_general_position(5, 42, 1000).unwrap();
    assert!(five.is_certified());
    assert_eq!(
        random_general_position(12, 7, 1_000_000).unwrap().points(),
        random_general_position(12, 7, 1_000_000).unwrap().points()
    );
    assert!(matches!(
        random_general_position(10, 1, 399),
        Err(ConstructionError::InvalidParameter(_))
    ));
    let c = random_colored(3, 2, 5, 1000).unwrap();
    assert_eq!((c.count_color(Color::Red), c.count_color(Color::Blue)), (3, 2));
}

#[test]
fn convex_sets() {
    assert_eq!(random_convex(3, 4).unwrap().len(), 3);
    let hex = random_convex(6, 4).unwrap();
    assert_eq!(convex_hull(&hex).len(), 6);
    let nine = random_convex(9, 4).unwrap();
    assert!(maximin_pair(&nine).unwrap().1 >= 2);
    assert!(random_convex(2, 0).is_err());
}

/// Lengths of the maximal same-color runs along the hull.
fn color_runs(s: &PointSet) -> Vec<usize> {
    let hull = convex_hull(s);
    let colors: Vec<Color> = hull.iter().map(|&i| s.color(i)).collect();
    let start = (0..colors.len())
        .find(|&i| colors[i] != colors[(i + colors.len() - 1) % colors.len()])
        .unwrap();
    let mut runs = vec![];
    let mut len = 0;
    for k in 0..colors.len() {
        let i = (start + k) % colors.len();
        if k > 0 && colors[i] != colors[(i + colors.len() - 1) % colors.len()] {
            runs.push(len);
            len = 0;
        }
        len += 1;
    }
    runs.push(len);
    runs
}

#[test]
fn two_colored_layouts() {
    let two = two_colored_convex(2).unwrap();
    let s = &two.points;
    assert_eq!(s.len(), 4);
    assert_eq!((s.count_color(Color::Red), s.count_color(Color::Blue)), (2, 2));
    let pts = oracle::coords(s);
    for (p, q) in oracle::bichromatic_pairs(s) {
        assert!(*oracle::weights(&pts, p, q).iter().min().unwrap() <= 1);
    }

    let four = two_colored_convex(4).unwrap();
    let (_, k) = bichromatic_maximin(&four.points).unwrap();
    assert!(k <= 2);
    let pts = oracle::coords(&four.points);
    let (_, ko) = oracle::maximin(&pts, &oracle::bichromatic_pairs(&four.points)).unwrap();
    assert_eq!(k, ko);
    assert!(four.claims.iter().all(|c| c.required && c.holds));

    let seven = two_colored_convex(7).unwrap();
    assert_eq!(seven.points.len(), 14);
    assert!(is_convex_position(&seven.points));
    let mut runs = color_runs(&seven.points);
    runs.sort();
    assert_eq!(runs, vec![3, 3, 4, 4]);
    assert!(two_colored_convex(1).is_err());
}

#[test]
fn halving_small() {
    for n in 2..=4 {
        let out = halving_line_construction(n).unwrap();
        let s = &out.points;
        assert_eq!(s.len(), 2 * n);
        assert_eq!(out.designated_pairs.len(), n);
        for &(p, q) in &out.designated_pairs {
            let left = (0..2 * n)
                .filter(|&x| x != p && x != q && orientation(s.point(p), s.point(q), s.point(x)) > 0)
                .count();
            assert_eq!(left, n - 1);
            let w = weights(s, p, q).unwrap();
            assert!(w.iter().all(|&v| v + 2 >= n && v <= n), "{w:?}");
        }
    }
    assert!(halving_line_construction(1).is_err());
}

#[test]
fn seven_region_small() {
    let out = recursive_seven_region(3, 1).unwrap();
    assert_eq!(out.points.len(), 21);
    let w = weights(&out.points, 0, 1).unwrap();
    let ends = (w[0], w[w.len() - 1]);
    assert!(ends == (9, 10) || ends == (10, 9));
    assert!(out
        .claims
        .iter()
        .any(|c| matches!(c.kind, ClaimKind::CircumcircleCount { inside: 0, .. }) && c.holds));
    assert_eq!(seven_region_size(7, 2), 49 + 45);
    assert!(recursive_seven_region(2, 1).is_err());
}

#[test]
fn seven_region_weight_list() {
    let out = recursive_seven_region(7, 1).unwrap();
    let s = &out.points;
    assert_eq!(s.len(), 49);
    let w = weights(s, 0, 1).unwrap();
    let t = turning_values(&w);
    assert!(t == vec![21, 7, 11, 4, 26] || t == vec![26, 4, 11, 7, 21], "{t:?}");
    let mult = |v: usize| w.iter().filter(|&&x| x == v).count();
    // a turning value is visited once less than the values strictly inside the band
    assert_eq!((7..=11).map(mult).collect::<Vec<_>>(), vec![3, 4, 4, 4, 3]);
    let repeat = out
        .claims
        .iter()
        .find(|c| matches!(c.kind, ClaimKind::RepeatedValues { .. }))
        .unwrap();
    assert!(!repeat.required && !repeat.holds);

    let deeper = recursive_seven_region(7, 2).unwrap();
    let b1 = repeated_weight_stats(s).unwrap().nonzero_b();
    let b2 = repeated_weight_stats(&deeper.points).unwrap().nonzero_b();
    assert!(b1 >= 5 && b2 > b1, "{b1} {b2}");
}

#[test]
fn generators_are_deterministic() {
    let a = halving_line_construction(5).unwrap();
    let b = halving_line_construction(5).unwrap();
    assert_eq!(a.points.points(), b.points.points());
    let a = recursive_seven_region(4, 2).unwrap();
    let b = recursive_seven_region(4, 2).unwrap();
    assert_eq!(a.points.points(), b.points.points());
    assert_eq!(a.designated_pairs, b.designated_pairs);
    let a = two_colored_convex(5).unwrap();
    let b = two_colored_convex(5).unwrap();
    assert_eq!(a.points.points(), b.points.points());
    assert_eq!(random_convex(11, 3).unwrap().points(), random_convex(11, 3).unwrap().points());
}

#[test]
fn bichromatic_anchors() {
    let pair = PointSet::new(vec![
        ColoredPoint::new(circdepth::Point::from_ints(0, 0), Color::Red),
        ColoredPoint::new(circdepth::Point::from_ints(1, 0), Color::Blue),
    ])
    .certified()
    .unwrap();
    assert_eq!(bichromatic_maximin(&pair).unwrap(), ((0, 1), 0));
    assert!(bichromatic_census_check(&pair).unwrap().checks.is_empty());

    let colors = [Color::Red, Color::Blue, Color::Red, Color::Blue];
    let quad = PointSet::new(
        [(0, 0), (10, 0), (9, 9), (0, 10)]
            .iter()
            .zip(colors)
            .map(|(&(x, y), c)| ColoredPoint::new(circdepth::Point::from_ints(x, y), c))
            .collect(),
    )
    .certified()
    .unwrap();
    assert!(bichromatic_census_check(&quad).unwrap().passed());
    assert!(bichromatic_census_relation_check(&quad).unwrap().passed());

    let mono = random_general_position(4, 1, 100).unwrap();
    assert_eq!(bichromatic_maximin(&mono), Err(DepthError::MissingColor("red")));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bichromatic_matches_oracle(red in 1usize..=6, blue in 1usize..=6, seed in any::<u64>()) {
        let s = random_colored(red, blue, seed, 1000).unwrap();
        let pts = oracle::coords(&s);
        prop_assert_eq!(
            bichromatic_maximin(&s).unwrap(),
            oracle::maximin(&pts, &oracle::bichromatic_pairs(&s)).unwrap()
        );
        prop_assert!(bichromatic_census_relation_check(&s).unwrap().passed());
    }
}
