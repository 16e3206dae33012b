use circdepth::constructions::{halving_line_construction, random_convex, random_general_position};
use circdepth::depth::{
    census_relation_check, census_check, j_edge_counts, kset_counts, triple_bounds_check,
    leq_kset_bound_check, maximin_pair, minimax_pair, all_depths, repeated_weight_stats,
    segment_weight_census, triple_counts, triple_symmetry_check, unbounded_region_identity_check,
    census_equality_from,
};
use circdepth::{ColoredPoint, DepthError, Point, PointSet, Rational};
use circdepth_oracles as oracle;
use proptest::prelude::*;

fn triangle() -> PointSet {
    PointSet::from_ints(&[(0, 0), (4, 0), (0, 4)]).certified().unwrap()
}

fn quad() -> PointSet {
    PointSet::from_ints(&[(0, 0), (10, 0), (9, 9), (0, 10)]).certified().unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn triple_count_anchors() {
    assert_eq!(triple_counts(&triangle()).unwrap().c, vec![1]);
    assert_eq!(triple_counts(&quad()).unwrap().c, vec![2, 2]);
    let pent = random_convex(5, 1).unwrap();
    assert_eq!(triple_counts(&pent).unwrap().c[0], 3);
    assert!(matches!(
        triple_counts(&PointSet::from_ints(&[(0, 0), (1, 0)]).certified().unwrap()),
        Err(DepthError::TooFewPoints { need: 3, got: 2 })
    ));
}

#[test]
fn census_anchors() {
    assert_eq!(segment_weight_census(&triangle()).unwrap().hist, vec![3, 3]);
    assert!(census_check(&triangle()).unwrap().passed());

    // the two diagonals each contribute one segment of weight 1 beyond the
    // circle correspondence, so the k = 0 sum is 13 rather than 12
    let h = segment_weight_census(&quad()).unwrap();
    assert_eq!(h.hist, vec![5, 8, 5]);
    let eq = census_equality_from(&h, 4);
    assert_eq!((eq.checks[0].lhs, eq.checks[0].rhs), (13, 12));
    assert!(!eq.passed());
    assert!(census_relation_check(&quad()).unwrap().passed());
}

#[test]
fn edge_and_kset_anchors() {
    let e = j_edge_counts(&quad()).unwrap();
    assert_eq!(e.undirected_j, vec![4, 2]);
    assert_eq!(e.directed_j, vec![4, 4, 4]);
    assert_eq!(j_edge_counts(&triangle()).unwrap().undirected_j, vec![3]);

    assert_eq!(kset_counts(&quad()).unwrap().ksets, vec![0, 4, 4, 4]);
    for n in [3, 5, 8] {
        assert_eq!(kset_counts(&random_convex(n, 9).unwrap()).unwrap().ksets[1], n);
    }
    let hex = random_convex(6, 2).unwrap();
    let r = leq_kset_bound_check(&hex, 1).unwrap();
    assert_eq!((r.checks[0].lhs, r.checks[0].rhs), (6, 6));
    let r = leq_kset_bound_check(&hex, 2).unwrap();
    assert_eq!((r.checks[0].lhs, r.checks[0].rhs), (12, 12));
    assert!(matches!(leq_kset_bound_check(&hex, 3), Err(DepthError::OutOfRange { .. })));
    let s = random_general_position(10, 3, 1000).unwrap();
    let r = leq_kset_bound_check(&s, 3).unwrap();
    assert!(r.passed() && r.checks[0].rhs == 30);
}

#[test]
fn pentagon_identity() {
    let pent = random_convex(5, 1).unwrap();
    assert_eq!(kset_counts(&pent).unwrap().ksets[1], 5);
    let r = unbounded_region_identity_check(&pent, 2).unwrap();
    assert_eq!((r.checks[0].lhs, r.checks[0].rhs), (5, 5));
    let r = unbounded_region_identity_check(&pent, 1).unwrap();
    assert_eq!((r.checks[0].lhs, r.checks[0].rhs), (0, 0));
    assert!(unbounded_region_identity_check(&pent, 5).is_err());
    let l = triple_bounds_check(&pent).unwrap();
    assert!(l.passed());
    assert_eq!((l.checks[0].lhs, l.checks[0].rhs), (3, 3));
    let four = triple_bounds_check(&quad()).unwrap();
    assert_eq!(four.checks.len(), 2);
    assert!(four.passed());
}

#[test]
fn repeats() {
    let t = repeated_weight_stats(&triangle()).unwrap();
    assert_eq!(t.nonzero_b(), 0);
    let h = halving_line_construction(3).unwrap();
    let r = repeated_weight_stats(&h.points).unwrap();
    assert!(r.max_collinear[&3] >= 3);
}

fn random_set(lo: usize, hi: usize) -> impl Strategy<Value = PointSet> {
    (lo..=hi, any::<u64>()).prop_map(|(n, seed)| random_general_position(n, seed, 1000).unwrap())
}

fn transform(s: &PointSet, f: impl Fn(&Point) -> Point) -> PointSet {
    PointSet::new(s.points().iter().map(|p| ColoredPoint::new(f(&p.point), p.color())).collect())
        .certified()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn triple_counts_match_oracle(s in random_set(3, 11)) {
        let n = s.len();
        let t = triple_counts(&s).unwrap();
        prop_assert_eq!(&t.c, &oracle::triple_counts(&oracle::coords(&s)));
        prop_assert_eq!(t.c.iter().sum::<usize>(), binom(n, 3));
        prop_assert!(triple_symmetry_check(&s).unwrap().passed());
    }

    #[test]
    fn census_relation_and_bound(s in random_set(3, 10)) {
        let n = s.len();
        let h = segment_weight_census(&s).unwrap();
        prop_assert_eq!(h.hist.iter().sum::<usize>(), binom(n, 2) * (n - 1));
        let pairs = oracle::all_pairs(n);
        prop_assert_eq!(&h.hist, &oracle::census(&oracle::coords(&s), &pairs));
        prop_assert!(census_relation_check(&s).unwrap().passed());
    }

    #[test]
    fn edges_and_ksets_match_oracle(s in random_set(3, 9)) {
        let n = s.len();
        let pts = oracle::coords(&s);
        let e = j_edge_counts(&s).unwrap();
        prop_assert_eq!(&e.directed_j, &oracle::directed_left_counts(&pts));
        prop_assert_eq!(e.directed_j.iter().sum::<usize>(), n * (n - 1));
        prop_assert_eq!(e.undirected_j.iter().sum::<usize>(), binom(n, 2));
        for j in 0..=n - 2 {
            prop_assert_eq!(e.directed_j[j], e.directed_j[n - 2 - j]);
        }
        let ks = kset_counts(&s).unwrap();
        prop_assert_eq!(&ks.ksets, &oracle::kset_counts(&pts));
        for k in 1..n {
            prop_assert_eq!(ks.ksets[k], ks.ksets[n - k]);
        }
        for k in (1..n).filter(|k| 2 * k < n) {
            prop_assert!(leq_kset_bound_check(&s, k).unwrap().passed());
        }
    }

    #[test]
    fn triple_bounds_and_identity(s in random_set(4, 9)) {
        let n = s.len();
        prop_assert!(triple_bounds_check(&s).unwrap().passed());
        let pts = oracle::coords(&s);
        let ks = oracle::kset_counts(&pts);
        let c = oracle::triple_counts(&pts);
        for k in 1..n {
            let r = unbounded_region_identity_check(&s, k).unwrap();
            let lhs: usize = (1..=k).map(|i| if i == 1 { 0 } else { ks[i - 1] }).sum();
            let ck = if k >= 2 { c[k - 2] as i64 } else { 0 };
            let rhs = (k as i64 - 1) * (2 * n as i64 - k as i64) - ck;
            prop_assert_eq!((r.checks[0].lhs, r.checks[0].rhs), (lhs as i64, rhs));
            prop_assert!(r.passed());
        }
    }

    #[test]
    fn counts_survive_rigid_maps(s in random_set(4, 9), dx in -50i64..50, dy in -50i64..50) {
        let shift = |p: &Point| Point::new(p.x.clone() + Rational::from_integer(dx.into()), p.y.clone() + Rational::from_integer(dy.into()));
        let mirror = |p: &Point| Point::new(-p.x.clone(), p.y.clone());
        for t in [transform(&s, shift), transform(&s, mirror)] {
            prop_assert_eq!(triple_counts(&t).unwrap(), triple_counts(&s).unwrap());
            prop_assert_eq!(segment_weight_census(&t).unwrap(), segment_weight_census(&s).unwrap());
            prop_assert_eq!(repeated_weight_stats(&t).unwrap(), repeated_weight_stats(&s).unwrap());
            let key = |s: &PointSet| {
                let mut d: Vec<(usize, usize, usize, usize)> = all_depths(s)
                    .unwrap()
                    .iter()
                    .map(|d| (d.pair.0, d.pair.1, d.min_weight, d.max_weight))
                    .collect();
                d.sort();
                d
            };
            prop_assert_eq!(key(&t), key(&s));
        }
    }

    #[test]
    fn extremal_values_ignore_order(s in random_set(3, 9), rot in 0usize..9) {
        let mut pts = s.points().to_vec();
        pts.reverse();
        let r = rot % pts.len();
        pts.rotate_left(r);
        let t = PointSet::new(pts).certified().unwrap();
        prop_assert_eq!(maximin_pair(&t).unwrap().1, maximin_pair(&s).unwrap().1);
        prop_assert_eq!(minimax_pair(&t).unwrap().1, minimax_pair(&s).unwrap().1);
        prop_assert_eq!(triple_counts(&t).unwrap(), triple_counts(&s).unwrap());
    }
}
