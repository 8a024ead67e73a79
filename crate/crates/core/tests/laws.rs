//! Algebraic and structural laws over seeded random relations.

mod common;

use common::{dyadic_interval, expanding_map, random_relation, rng, some_chain, Shape};
use num::Zero;
use proptest::prelude::*;
use rand::Rng;
use svdyn::dynamics::{find_cycles, iterate_image, Cycle};
use svdyn::format::{parse, serialize};
use svdyn::mahavier::{build_truncation, shift};
use svdyn::piece::Point;
use svdyn::properties::{events, nonfissile_closure};
use svdyn::rational::{rat, zero};
use svdyn::relation::normalize;
use svdyn::{classify, Interval, IntervalSet, PLRelation, Piece, Rational};

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, ..ProptestConfig::default() }
}

fn mixed(seed: u64) -> PLRelation {
    random_relation(&mut rng(seed), Shape::MIXED)
}

fn y_levels(r: &PLRelation) -> Vec<Rational> {
    let mut ys: Vec<Rational> = r.pieces().iter().flat_map(|p| p.vertices()).map(|v| v.y).collect();
    ys.sort();
    ys.dedup();
    ys
}

fn in_product(r: &PLRelation, x: &[Rational]) -> bool {
    x.windows(2).all(|w| r.contains(&Point::new(w[1].clone(), w[0].clone())))
}

/// A proper closed subgraph with full domain, found by deleting the
/// relative interior of one piece over one gap between events.
fn reducing_subgraph(r: &PLRelation) -> Option<PLRelation> {
    let ev = events(r);
    for (i, p) in r.pieces().iter().enumerate() {
        let others = r.pieces().iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone());
        let mut candidates: Vec<Vec<Piece>> = Vec::new();
        match p {
            Piece::Point(_) => candidates.push(vec![]),
            Piece::Rect(lo, hi) => candidates.push(vec![Piece::seg(lo.x.clone(), lo.y.clone(), hi.x.clone(), lo.y.clone())]),
            _ if p.is_vertical() => candidates.push(p.vertices().into_iter().map(Piece::Point).collect()),
            _ => {
                let ext = p.x_extent();
                for w in ev.windows(2).filter(|w| ext.lo <= w[0] && w[1] <= ext.hi) {
                    let left = Interval::new(ext.lo.clone(), w[0].clone());
                    let right = Interval::new(w[1].clone(), ext.hi.clone());
                    candidates.push([left, right].iter().filter_map(|iv| p.clip(Some(iv), None)).collect());
                }
            }
        }
        for kept in candidates {
            let h = normalize(others.clone().chain(kept)).unwrap();
            if h != *r && h.domain_is_full() {
                return Some(h);
            }
        }
    }
    None
}

/// Every exact-period-`p` cycle of a single-valued map, found by solving
/// `f^p(x) = x` on the affine pieces of `f^p`.
fn brute_cycles(f: &PLRelation, p: usize) -> Vec<Cycle> {
    let eval = |x: &Rational| f.slice(x).min().unwrap().clone();
    let mut cuts: Vec<Rational> = y_levels(&f.transpose());
    let base = cuts.clone();
    for _ in 1..p {
        let pre = f.preimage(&IntervalSet::from_intervals(cuts.iter().map(|c| Interval::point(c.clone()))));
        cuts = base.iter().cloned().chain(pre.components().iter().map(|iv| iv.lo.clone())).collect();
        cuts.sort();
        cuts.dedup();
    }
    let fp = |x: &Rational| (0..p).fold(x.clone(), |acc, _| eval(&acc));
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (ga, gb) = (fp(&w[0]) - &w[0], fp(&w[1]) - &w[1]);
        if ga.is_zero() {
            roots.push(w[0].clone());
        }
        if gb.is_zero() {
            roots.push(w[1].clone());
        }
        if (ga < zero()) != (gb < zero()) && !ga.is_zero() && !gb.is_zero() {
            roots.push(&w[0] + (&w[1] - &w[0]) * &ga / (&ga - &gb));
        }
    }
    let mut out: Vec<Cycle> = roots
        .into_iter()
        .filter_map(|x| {
            let orbit: Vec<Rational> = (0..p).scan(x, |acc, _| {
                let cur = acc.clone();
                *acc = eval(acc);
                Some(cur)
            }).collect();
            Cycle::new(f, orbit).ok().map(|c| c.canonical())
        })
        .collect();
    out.sort_by(|a, b| a.points().cmp(b.points()));
    out.dedup();
    out
}

proptest! {
    #![proptest_config(cases(200))]

    #[test]
    fn image_of_composite_is_iterated_image(f in any::<u64>(), g in any::<u64>(), i in any::<u64>()) {
        let (f, g) = (mixed(f), mixed(g));
        let iv = dyadic_interval(&mut rng(i));
        prop_assert_eq!(f.compose(&g).image(&iv), g.image(&f.image(&iv)));
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>()) {
        let r = mixed(seed);
        prop_assert_eq!(parse(&serialize(&r)).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(cases(100))]

    #[test]
    fn transpose_is_an_involution_and_computes_preimages(seed in any::<u64>(), y in 0i64..=16) {
        let r = mixed(seed);
        prop_assert_eq!(r.transpose().transpose(), r.clone());
        let y = rat(y, 16);
        prop_assert_eq!(r.transpose().slice(&y), r.preimage(&IntervalSet::point(y)));
    }

    #[test]
    fn normalization_is_idempotent(raw in prop::collection::vec((0u8..3, [0i64..=8, 0i64..=8, 0i64..=8, 0i64..=8]), 1..8)) {
        let pieces: Vec<Piece> = raw
            .iter()
            .map(|(kind, c)| {
                let v: Vec<Rational> = c.iter().map(|&n| rat(n, 8)).collect();
                match kind {
                    0 => Piece::point(v[0].clone(), v[1].clone()),
                    1 => Piece::seg(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()),
                    _ => Piece::rect(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()),
                }
            })
            .collect();
        let once = normalize(pieces.clone()).unwrap();
        prop_assert_eq!(normalize(once.pieces().to_vec()).unwrap(), once.clone());
        // Order of the input pieces does not matter.
        prop_assert_eq!(normalize(pieces.into_iter().rev()).unwrap(), once);
    }

    #[test]
    fn composing_with_the_diagonal_is_neutral(seed in any::<u64>()) {
        let r = mixed(seed);
        prop_assert_eq!(r.compose(&PLRelation::identity()), r.clone());
        prop_assert_eq!(PLRelation::identity().compose(&r), r);
    }

    #[test]
    fn iterated_images_add(seed in any::<u64>(), m in 0usize..=3, n in 0usize..=3) {
        let r = mixed(seed);
        let iv = dyadic_interval(&mut rng(seed ^ 0x5eed));
        prop_assert_eq!(
            iterate_image(&r, &iv, m + n),
            iterate_image(&r, &iterate_image(&r, &iv, m), n)
        );
    }

    #[test]
    fn light_iff_preimages_of_levels_have_empty_interior(seed in any::<u64>()) {
        let r = mixed(seed);
        let flat_level = y_levels(&r).into_iter().any(|y| {
            r.preimage(&IntervalSet::point(y)).components().iter().any(|c| !c.is_point())
        });
        prop_assert_eq!(classify(&r).light, !flat_level);
    }

    #[test]
    fn ivp_implies_weak_ivp(seed in any::<u64>()) {
        let p = classify(&mixed(seed));
        prop_assert!(!p.ivp || p.weak_ivp);
    }

    #[test]
    fn composition_preserves_ivp(f in any::<u64>(), g in any::<u64>()) {
        let f = random_relation(&mut rng(f), Shape::CONTINUOUS);
        let g = random_relation(&mut rng(g), Shape::CONTINUOUS);
        prop_assert!(classify(&f).ivp && classify(&g).ivp);
        prop_assert!(classify(&f.compose(&g)).ivp);
    }

    #[test]
    fn almost_nonfissile_iff_irreducible_over_the_domain(seed in any::<u64>(), function in any::<bool>()) {
        let shape = if function { Shape::FUNCTION } else { Shape::MIXED };
        let r = random_relation(&mut rng(seed), shape);
        let anf = classify(&r).almost_nonfissile;
        prop_assert_eq!(anf, reducing_subgraph(&r).is_none(), "{}", serialize(&r));
        if anf {
            prop_assert_eq!(nonfissile_closure(&r), r);
        }
    }
}

proptest! {
    #![proptest_config(cases(25))]

    #[test]
    fn truncation_membership_matches_the_product(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = random_relation(&mut g, Shape::MIXED);
        let depth = g.gen_range(1..=3);
        let c = build_truncation(&r, depth).unwrap();
        for k in 0..40 {
            let x: Vec<Rational> = if k % 2 == 0 {
                some_chain(&r, &mut g, depth)
            } else {
                (0..=depth).map(|_| rat(g.gen_range(0..=8), 8)).collect()
            };
            prop_assert_eq!(c.contains(&x), in_product(&r, &x), "{:?}", x);
        }
    }

    #[test]
    fn shifting_drops_the_first_coordinate(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = random_relation(&mut g, Shape::MIXED);
        let depth = g.gen_range(2..=3);
        let shifted = shift(&build_truncation(&r, depth).unwrap(), &r).unwrap();
        let shallower = build_truncation(&r, depth - 1).unwrap();
        for i in 0..depth {
            for j in 0..depth {
                prop_assert_eq!(shifted.project_pair(i, j), shallower.project_pair(i, j));
            }
        }
        for _ in 0..20 {
            let x = some_chain(&r, &mut g, depth - 1);
            prop_assert!(shifted.contains(&x));
        }
    }

    #[test]
    fn cycle_search_finds_every_periodic_orbit(seed in any::<u64>(), p in 1usize..=4) {
        let (_, f) = expanding_map(&mut rng(seed));
        let search = find_cycles(&f, p, 1_000_000);
        prop_assert!(search.complete);
        let mut found: Vec<Cycle> = search.cycles.into_iter().collect();
        found.sort_by(|a, b| a.points().cmp(b.points()));
        prop_assert_eq!(found, brute_cycles(&f, p));
    }
}
