//! Exact solution sets of chained pair constraints.
//!
//! A chain system has variables `v_0, …, v_m` and constraints
//! `(v_k, v_{k+1}) ∈ P_k` where each `P_k` is a [`Piece`], plus optional
//! interval bounds per variable. A box piece `xs × ys` splits into two
//! independent bounds. A slanted segment ties `v_{k+1} = m·v_k + c` with
//! `v_k` in its x-extent. So the variables fall into blocks linked by
//! slanted constraints, each block is an affine curve in one parameter, and
//! the solution set is the product of those curves. This makes feasibility,
//! exact projections onto one or two coordinates, and membership all
//! straightforward interval arithmetic.
//!
//! Cyclic systems (`(v_{p-1}, v_0) ∈ P_{p-1}` as well) are handled by
//! rotating a box constraint to the closing position, or, when every
//! constraint is slanted, by solving the one fixed-point equation of the
//! composite affine map.

use num::Zero;

use crate::interval::Interval;
use crate::piece::{Piece, Point};
use crate::rational::{one, zero, Rational};

/// `t ↦ a·t + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub a: Rational,
    pub b: Rational,
}

impl Affine {
    pub fn identity() -> Self {
        Affine { a: one(), b: zero() }
    }

    pub fn at(&self, t: &Rational) -> Rational {
        &self.a * t + &self.b
    }

    /// `self` followed by `v ↦ m·v + c`.
    fn then(&self, m: &Rational, c: &Rational) -> Affine {
        Affine { a: m * &self.a, b: m * &self.b + c }
    }

    /// Parameters `t` with `self(t) ∈ iv`. `a` is never zero here.
    fn pullback(&self, iv: &Interval) -> Interval {
        Interval::new((&iv.lo - &self.b) / &self.a, (&iv.hi - &self.b) / &self.a)
    }

    fn push(&self, iv: &Interval) -> Interval {
        Interval::new(self.at(&iv.lo), self.at(&iv.hi))
    }
}

/// Variables sharing one free parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vars: Vec<usize>,
    pub param: Interval,
    pub maps: Vec<Affine>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSolution {
    pub blocks: Vec<Block>,
    owner: Vec<(usize, usize)>,
}

impl ChainSolution {
    pub fn len(&self) -> usize {
        self.owner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }

    /// Block index and affine map of variable `i`.
    pub fn var(&self, i: usize) -> (usize, &Affine) {
        let (b, off) = self.owner[i];
        (b, &self.blocks[b].maps[off])
    }

    /// Exact set of realized values of `v_i`.
    pub fn projection(&self, i: usize) -> Interval {
        let (b, map) = self.var(i);
        map.push(&self.blocks[b].param)
    }

    /// Exact projection onto `(v_i, v_j)`: a segment when both share a
    /// block, a box otherwise.
    pub fn pair_projection(&self, i: usize, j: usize) -> Piece {
        let (bi, mi) = self.var(i);
        let (bj, mj) = self.var(j);
        if bi == bj {
            let param = &self.blocks[bi].param;
            Piece::segment(
                Point::new(mi.at(&param.lo), mj.at(&param.lo)),
                Point::new(mi.at(&param.hi), mj.at(&param.hi)),
            )
        } else {
            Piece::from_box(&self.projection(i), &self.projection(j))
        }
    }

    /// The point with the given per-block parameter values.
    pub fn point_at(&self, params: &[Rational]) -> Vec<Rational> {
        (0..self.len())
            .map(|i| {
                let (b, map) = self.var(i);
                map.at(&params[b])
            })
            .collect()
    }

    /// Every block parameter at its midpoint.
    pub fn sample(&self) -> Vec<Rational> {
        self.point_at(&self.blocks.iter().map(|b| b.param.mid()).collect::<Vec<_>>())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.len()
            && self.blocks.iter().all(|blk| {
                // The first map of each block is the identity on its first variable.
                let t = &v[blk.vars[0]];
                blk.param.contains(t)
                    && blk.vars.iter().zip(&blk.maps).all(|(&i, m)| m.at(t) == v[i])
            })
    }

    /// Number of blocks with a nondegenerate parameter range.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().filter(|b| !b.param.is_point()).count()
    }
}

/// Restricts `param` to `t` with `map(t) ∈ iv`; `None` when empty.
fn restrict(param: Interval, map: &Affine, iv: &Interval) -> Option<Interval> {
    param.intersect(&map.pullback(iv))
}

/// Builds blocks for the variables in `order` where `links[k]` is the
/// constraint between `order[k]` and `order[k+1]`.
fn solve_ordered(
    order: &[usize],
    links: &[&Piece],
    bounds: &[Option<Interval>],
) -> Option<Vec<Block>> {
    let mut blocks = Vec::new();
    let mut cur = Block { vars: vec![order[0]], param: Interval::unit(), maps: vec![Affine::identity()] };
    for (k, &next) in order.iter().enumerate().skip(1) {
        let link = links[k - 1];
        match link.as_box() {
            Some((xs, ys)) => {
                let last = cur.maps.last().unwrap().clone();
                cur.param = restrict(cur.param, &last, &xs)?;
                blocks.push(std::mem::replace(
                    &mut cur,
                    Block { vars: vec![next], param: ys, maps: vec![Affine::identity()] },
                ));
            }
            None => {
                let (m, c) = link.slope_intercept().expect("non-box pieces are slanted segments");
                let last = cur.maps.last().unwrap().clone();
                cur.param = restrict(cur.param, &last, &link.x_extent())?;
                cur.vars.push(next);
                cur.maps.push(last.then(&m, &c));
            }
        }
    }
    blocks.push(cur);
    for blk in &mut blocks {
        for (&i, m) in blk.vars.iter().zip(&blk.maps) {
            if let Some(b) = &bounds[i] {
                blk.param = restrict(blk.param.clone(), m, b)?;
            }
        }
    }
    Some(blocks)
}

fn finish(blocks: Vec<Block>, n: usize) -> ChainSolution {
    let mut owner = vec![(0, 0); n];
    for (b, blk) in blocks.iter().enumerate() {
        for (off, &i) in blk.vars.iter().enumerate() {
            owner[i] = (b, off);
        }
    }
    ChainSolution { blocks, owner }
}

/// Solves `(v_k, v_{k+1}) ∈ constraints[k]` for `k < m` with `v_i ∈ bounds[i]`.
/// `bounds` must have `constraints.len() + 1` entries.
pub fn solve_chain(constraints: &[Piece], bounds: &[Option<Interval>]) -> Option<ChainSolution> {
    assert_eq!(bounds.len(), constraints.len() + 1, "one bound slot per variable");
    let order: Vec<usize> = (0..bounds.len()).collect();
    let links: Vec<&Piece> = constraints.iter().collect();
    solve_ordered(&order, &links, bounds).map(|b| finish(b, bounds.len()))
}

/// Solves `(v_k, v_{(k+1) mod p}) ∈ constraints[k]` for all `k < p`.
pub fn solve_cycle(constraints: &[Piece]) -> Option<ChainSolution> {
    let p = constraints.len();
    assert!(p > 0, "a cycle needs at least one constraint");
    match constraints.iter().position(|c| c.as_box().is_some()) {
        Some(r) => {
            // Close the cycle with the box constraint `r`: variables run
            // v_{r+1}, …, v_r and the box bounds both ends.
            let (xs, ys) = constraints[r].as_box().unwrap();
            let order: Vec<usize> = (1..=p).map(|k| (r + k) % p).collect();
            let links: Vec<&Piece> = (1..p).map(|k| &constraints[(r + k) % p]).collect();
            let mut bounds = vec![None; p];
            bounds[r] = Some(xs);
            bounds[(r + 1) % p] = Some(match &bounds[(r + 1) % p] {
                Some(b) => ys.intersect(b)?,
                None => ys,
            });
            solve_ordered(&order, &links, &bounds).map(|b| finish(b, p))
        }
        None => {
            let order: Vec<usize> = (0..p).collect();
            let links: Vec<&Piece> = constraints[..p - 1].iter().collect();
            let mut blocks = solve_ordered(&order, &links, &vec![None; p])?;
            let blk = &mut blocks[0];
            let last = constraints[p - 1].clone();
            let tail = blk.maps.last().unwrap().clone();
            blk.param = restrict(blk.param.clone(), &tail, &last.x_extent())?;
            let (m, c) = last.slope_intercept().unwrap();
            let full = tail.then(&m, &c);
            // Fixed points of t ↦ full(t).
            let slope = &full.a - one();
            if slope.is_zero() {
                if !full.b.is_zero() {
                    return None;
                }
            } else {
                let t = -&full.b / &slope;
                if !blk.param.contains(&t) {
                    return None;
                }
                blk.param = Interval::point(t);
            }
            Some(finish(blocks, p))
        }
    }
}

/// `true` when `v_i - v_j` is identically zero on the solution set.
pub fn always_equal(sol: &ChainSolution, i: usize, j: usize) -> bool {
    let (bi, mi) = sol.var(i);
    let (bj, mj) = sol.var(j);
    let fixed = |b: usize| sol.blocks[b].param.is_point();
    if bi == bj {
        let p = &sol.blocks[bi].param;
        return mi.at(&p.lo) == mj.at(&p.lo) && mi.at(&p.hi) == mj.at(&p.hi);
    }
    // Different blocks: both sides must be constant and equal.
    let const_i = fixed(bi) || mi.a.is_zero();
    let const_j = fixed(bj) || mj.a.is_zero();
    const_i && const_j && sol.projection(i).lo == sol.projection(j).lo
}

/// Parameter vectors along the curve `t_b = lo_b + len_b·s^(b+1)` for
/// `s = 1/2, 1/3, 2/3, 1/4, 3/4, …`. Any nonzero affine function of the
/// parameters vanishes at only finitely many of them.
pub fn generic_parameters(sol: &ChainSolution) -> impl Iterator<Item = Vec<Rational>> + '_ {
    let fractions = (2i64..).flat_map(|d| {
        (1..d).filter(move |n| num::integer::gcd(*n, d) == 1).map(move |n| Rational::new(n.into(), d.into()))
    });
    fractions.map(move |s| {
        let mut pow = s.clone();
        sol.blocks
            .iter()
            .map(|blk| {
                let v = &blk.param.lo + blk.param.len() * &pow;
                pow = &pow * &s;
                v
            })
            .collect()
    })
}
