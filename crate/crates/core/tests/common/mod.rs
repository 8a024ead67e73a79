//! Seeded random relations shared by the integration and acceptance suites.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use svdyn::rational::rat;
use svdyn::{Interval, IntervalSet, PLRelation, Piece, Rational};

/// Knobs for [`random_relation`].
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    /// Probability that a strip starts where the previous one ended.
    pub join: f64,
    /// Probability that a jump between pieces gets a vertical connector.
    pub bridge: f64,
    pub rect: f64,
    /// Probability of one stray point or segment anywhere in the square.
    pub stray: f64,
    /// Probability of a second branch spanning the whole domain.
    pub branch: f64,
    /// Probability of returning a full-width rectangle instead.
    pub slab: f64,
}

impl Shape {
    pub const MIXED: Shape = Shape { join: 0.5, bridge: 0.6, rect: 0.12, stray: 0.25, branch: 0.12, slab: 0.03 };
    /// Continuous polylines or full-width slabs, which have the
    /// intermediate value property by construction.
    pub const CONTINUOUS: Shape = Shape { join: 1.0, bridge: 0.0, rect: 0.0, stray: 0.0, branch: 0.0, slab: 0.15 };
    /// Single-valued away from finitely many jumps.
    pub const FUNCTION: Shape = Shape { join: 0.5, bridge: 0.0, rect: 0.0, stray: 0.0, branch: 0.0, slab: 0.0 };
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn grid(rng: &mut ChaCha8Rng, d: i64) -> Rational {
    rat(rng.gen_range(0..=d), d)
}

/// A relation with full domain on a `1/d` grid, `d ∈ {4, 6, 8}`.
pub fn random_relation(rng: &mut ChaCha8Rng, shape: Shape) -> PLRelation {
    let d = *[4i64, 6, 8].choose(rng).unwrap();
    if rng.gen_bool(shape.slab) {
        let iv = Interval::new(grid(rng, d), grid(rng, d));
        return PLRelation::new([Piece::rect(rat(0, 1), iv.lo, rat(1, 1), iv.hi)]).unwrap();
    }
    let mut xs: Vec<i64> = (1..d).filter(|_| rng.gen_bool(0.4)).collect();
    xs.insert(0, 0);
    xs.push(d);
    let mut pieces = Vec::new();
    // The slice at the right end of the previous strip.
    let mut prev: Option<Interval> = None;
    for w in xs.windows(2) {
        let (a, b) = (rat(w[0], d), rat(w[1], d));
        let (start, end, piece) = if rng.gen_bool(shape.rect) {
            let (y1, y2) = (grid(rng, d), grid(rng, d));
            let iv = Interval::new(y1, y2);
            (iv.clone(), iv.clone(), Piece::rect(a.clone(), iv.lo, b.clone(), iv.hi))
        } else {
            let ya = match &prev {
                Some(p) if rng.gen_bool(shape.join) => p.lo.clone(),
                _ => grid(rng, d),
            };
            let yb = grid(rng, d);
            (Interval::point(ya.clone()), Interval::point(yb.clone()), Piece::seg(a.clone(), ya, b.clone(), yb))
        };
        pieces.push(piece);
        if let Some(p) = prev.take() {
            if p.intersect(&start).is_none() && rng.gen_bool(shape.bridge) {
                let (lo, hi) = if p.hi < start.lo { (p.hi, start.lo) } else { (start.hi, p.lo) };
                pieces.push(Piece::seg(a.clone(), lo, a.clone(), hi));
            }
        }
        prev = Some(end);
    }
    if rng.gen_bool(shape.branch) {
        pieces.push(Piece::seg(rat(0, 1), grid(rng, d), rat(1, 1), grid(rng, d)));
    }
    if rng.gen_bool(shape.stray) {
        let (x1, y1) = (grid(rng, d), grid(rng, d));
        if rng.gen_bool(0.5) {
            pieces.push(Piece::point(x1, y1));
        } else {
            pieces.push(Piece::seg(x1, y1, grid(rng, d), grid(rng, d)));
        }
    }
    PLRelation::new(pieces).expect("grid coordinates lie in the unit square")
}

/// A single-valued map on `d` equal steps whose slopes are `0` or of
/// absolute value at least `2`, so no iterate has slope `1` anywhere.
pub fn expanding_map(rng: &mut ChaCha8Rng) -> (Vec<Rational>, PLRelation) {
    let d = rng.gen_range(2..=4i64);
    let mut ys = vec![rng.gen_range(0..=d)];
    for _ in 0..d {
        let last = *ys.last().unwrap();
        let choices: Vec<i64> = (0..=d).filter(|y| (y - last).abs() != 1).collect();
        ys.push(*choices.choose(rng).unwrap());
    }
    let ys: Vec<Rational> = ys.into_iter().map(|y| rat(y, d)).collect();
    let pieces = (0..d as usize).map(|i| {
        Piece::seg(rat(i as i64, d), ys[i].clone(), rat(i as i64 + 1, d), ys[i + 1].clone())
    });
    (ys.clone(), PLRelation::new(pieces).unwrap())
}

pub fn dyadic_interval(rng: &mut ChaCha8Rng) -> IntervalSet {
    let (a, b) = (rng.gen_range(0..=16), rng.gen_range(0..=16));
    IntervalSet::closed(rat(a.min(b), 16), rat(a.max(b), 16))
}

pub fn relations(seed: u64, count: usize, shape: Shape) -> Vec<PLRelation> {
    let mut r = rng(seed);
    (0..count).map(|_| random_relation(&mut r, shape)).collect()
}

fn pick(set: &IntervalSet, rng: &mut impl Rng) -> Rational {
    let comp = &set.components()[rng.gen_range(0..set.components().len())];
    match rng.gen_range(0..3) {
        0 => comp.lo.clone(),
        1 => comp.hi.clone(),
        _ => comp.mid(),
    }
}

/// A tuple `(x_0, …, x_n)` with `x_i ∈ f(x_{i+1})`, built by following the
/// graph backward from `x_0`. `None` when a preimage runs out.
pub fn backward_chain(r: &PLRelation, rng: &mut impl Rng, n: usize) -> Option<Vec<Rational>> {
    let start = if rng.gen_bool(0.5) { rat(rng.gen_range(0..=12), 12) } else { pick(&r.range(), rng) };
    let mut chain = vec![start];
    for _ in 0..n {
        let pre = r.preimage(&IntervalSet::point(chain.last().unwrap().clone()));
        if pre.is_empty() {
            return None;
        }
        chain.push(pick(&pre, rng));
    }
    Some(chain)
}

/// The same kind of tuple built forward from a random `x_n`, which never
/// gets stuck when the domain is full.
pub fn forward_chain(r: &PLRelation, rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let mut chain = vec![rat(rng.gen_range(0..=12), 12)];
    for _ in 0..n {
        let next = pick(&r.slice(chain.last().unwrap()), rng);
        chain.push(next);
    }
    chain.reverse();
    chain
}

pub fn some_chain(r: &PLRelation, rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..10).find_map(|_| backward_chain(r, rng, n)).unwrap_or_else(|| forward_chain(r, rng, n))
}
