use circdepth::constructions::{halving_line_construction, random_general_position};
use circdepth::depth::{
    all_pairs, maximin_pair, minimax_pair, oracle_weights, pair_depth, weight_sequence, weights,
};
use circdepth::{orientation, DepthError, PointSet, Rational};
use circdepth_oracles as oracle;
use proptest::prelude::*;

fn triangle() -> PointSet {
    PointSet::from_ints(&[(0, 0), (4, 0), (0, 4)]).certified().unwrap()
}

fn quad() -> PointSet {
    PointSet::from_ints(&[(0, 0), (10, 0), (9, 9), (0, 10)]).certified().unwrap()
}

#[test]
fn triangle_profile() {
    let s = triangle();
    let prof = weight_sequence(&s, 0, 1).unwrap();
    assert_eq!(prof.weights, vec![0, 1]);
    assert_eq!(prof.events.len(), 1);
    let c = circdepth::circumcenter(s.point(0), s.point(1), s.point(2)).unwrap();
    let f = &prof.frame;
    let s0 = prof.events[0].s.clone();
    assert_eq!(f.midpoint.x.clone() + s0.clone() * f.direction.x.clone(), c.x);
    assert_eq!(f.midpoint.y.clone() + s0 * f.direction.y.clone(), c.y);
    assert_eq!(oracle_weights(&s, 0, 1).unwrap(), vec![0, 1]);
    let d = pair_depth(&s, 0, 1).unwrap();
    assert_eq!((d.min_weight, d.max_weight), (0, 1));
}

#[test]
fn quad_profiles() {
    let s = quad();
    let diag = weight_sequence(&s, 0, 2).unwrap();
    assert_eq!(diag.weights, vec![1, 0, 1]);
    // centers (4, 5) and (5, 4), d = (-9, 9)
    let r = Rational::new(1.into(), 18.into());
    let params: Vec<Rational> = diag.events.iter().map(|e| e.s.clone()).collect();
    assert_eq!(params, vec![-r.clone(), r]);
    assert_eq!(oracle_weights(&s, 0, 2).unwrap(), vec![1, 0, 1]);

    let edge = weights(&s, 0, 1).unwrap();
    assert!(edge == vec![0, 1, 2] || edge == vec![2, 1, 0]);
    assert_eq!(edge, oracle_weights(&s, 0, 1).unwrap());

    let d = pair_depth(&s, 0, 2).unwrap();
    assert_eq!((d.min_weight, d.max_weight), (0, 1));
    let d = pair_depth(&s, 0, 1).unwrap();
    assert_eq!((d.min_weight, d.max_weight), (0, 2));
}

#[test]
fn extremal_pairs() {
    assert_eq!(maximin_pair(&triangle()).unwrap().1, 0);
    assert_eq!(minimax_pair(&triangle()).unwrap(), ((0, 1), 1));
    // each circle through (10, 0), (0, 10) and one of the others encloses the last
    assert_eq!(weights(&quad(), 1, 3).unwrap(), vec![1, 2, 1]);
    assert_eq!(oracle::weights(&oracle::coords(&quad()), 1, 3), vec![1, 2, 1]);
    assert_eq!(maximin_pair(&quad()).unwrap(), ((1, 3), 1));
    assert_eq!(minimax_pair(&quad()).unwrap(), ((0, 2), 1));
    let h = halving_line_construction(4).unwrap();
    assert!(maximin_pair(&h.points).unwrap().1 >= 2);
}

#[test]
fn errors() {
    let s = quad();
    assert_eq!(weights(&s, 1, 1), Err(DepthError::SamePoint(1)));
    assert_eq!(weights(&s, 0, 4), Err(DepthError::BadIndex { index: 4, len: 4 }));
    let raw = PointSet::from_ints(&[(0, 0), (10, 0), (9, 9)]);
    assert_eq!(weights(&raw, 0, 1), Err(DepthError::NotCertified));
    let one = PointSet::from_ints(&[(0, 0)]).certified().unwrap();
    assert!(matches!(maximin_pair(&one), Err(DepthError::TooFewPoints { .. })));
}

#[test]
fn large_coordinates_take_the_wide_path() {
    let s = random_general_position(9, 5, 1 << 40).unwrap();
    for (p, q) in all_pairs(9) {
        assert_eq!(weights(&s, p, q).unwrap(), oracle_weights(&s, p, q).unwrap());
    }
}

fn random_set() -> impl Strategy<Value = PointSet> {
    (3usize..=10, any::<u64>()).prop_map(|(n, seed)| random_general_position(n, seed, 1000).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sweep_matches_both_oracles(s in random_set()) {
        let pts = oracle::coords(&s);
        for (p, q) in all_pairs(s.len()) {
            let w = weights(&s, p, q).unwrap();
            prop_assert_eq!(&w, &oracle_weights(&s, p, q).unwrap());
            prop_assert_eq!(&w, &oracle::weights(&pts, p, q));
        }
    }

    #[test]
    fn profile_shape(s in random_set()) {
        let n = s.len();
        for (p, q) in all_pairs(n) {
            let prof = weight_sequence(&s, p, q).unwrap();
            let w = &prof.weights;
            prop_assert_eq!(w.len(), n - 1);
            prop_assert_eq!(prof.events.len(), n - 2);
            prop_assert!(prof.events.windows(2).all(|e| e[0].s < e[1].s));
            prop_assert!(w.windows(2).all(|x| x[0].abs_diff(x[1]) == 1));
            let left = (0..n)
                .filter(|&x| x != p && x != q && orientation(s.point(p), s.point(q), s.point(x)) > 0)
                .count();
            let right = n - 2 - left;
            prop_assert_eq!((w[0], w[n - 2]), (right, left));
            let (lo, hi) = (*w.iter().min().unwrap(), *w.iter().max().unwrap());
            for v in lo..=hi {
                prop_assert!(w.contains(&v));
            }
            for v in left.min(right)..=left.max(right) {
                prop_assert!(w.contains(&v));
            }
            for e in &prof.events {
                let side = orientation(s.point(p), s.point(q), s.point(e.index)) > 0;
                prop_assert_eq!(e.covers_positive, side);
            }
        }
    }

    #[test]
    fn minimax_bound(n in 3usize..=30, seed in any::<u64>()) {
        let s = random_general_position(n, seed, 10_000).unwrap();
        let (_, k) = minimax_pair(&s).unwrap();
        prop_assert!(k <= (2 * n - 3) / 3);
    }
}
