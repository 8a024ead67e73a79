//! Exact-period cycles.
//!
//! A cycle `(x_0, …, x_{p-1})` with `x_{i+1 mod p} ∈ f(x_i)` uses one piece
//! per step. The search enumerates piece sequences, pruning by forward
//! interval reachability, and solves each sequence's cyclic constraint
//! system exactly with the chain solver. Only the rotation starting at its
//! lowest-index piece is enumerated.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::chain::{always_equal, generic_parameters, solve_cycle, ChainSolution};
use crate::interval::Interval;
use crate::piece::{Piece, Point};
use crate::rational::Rational;
use crate::relation::PLRelation;

pub const DEFAULT_CYCLE_BUDGET: usize = 1_000_000;

/// Generic parameter choices tried before giving up on a representative.
const GENERIC_TRIES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least one point")]
    Empty,
    #[error("point {index} of the cycle maps outside the relation: {to} is not in f({from})")]
    NotInRelation { index: usize, from: Rational, to: Rational },
    #[error("points repeat with period {0}, shorter than the cycle length")]
    NotExactPeriod(usize),
}

/// A validated cycle with exact period equal to its length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    points: Vec<Rational>,
}

/// Smallest `q` dividing `len` with `v[i + q] = v[i]` for all `i`.
pub fn minimal_period(v: &[Rational]) -> usize {
    let p = v.len();
    (1..=p).find(|q| p.is_multiple_of(*q) && (0..p).all(|i| v[(i + q) % p] == v[i])).unwrap_or(p)
}

impl Cycle {
    pub fn new(r: &PLRelation, points: Vec<Rational>) -> Result<Cycle, CycleError> {
        let p = points.len();
        if p == 0 {
            return Err(CycleError::Empty);
        }
        for i in 0..p {
            let (from, to) = (&points[i], &points[(i + 1) % p]);
            if !r.contains(&Point::new(from.clone(), to.clone())) {
                return Err(CycleError::NotInRelation { index: i, from: from.clone(), to: to.clone() });
            }
        }
        let q = minimal_period(&points);
        if q != p {
            return Err(CycleError::NotExactPeriod(q));
        }
        Ok(Cycle { points })
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn period(&self) -> usize {
        self.points.len()
    }

    /// The lexicographically least rotation.
    pub fn canonical(&self) -> Cycle {
        let p = self.points.len();
        let best = (0..p)
            .map(|k| self.points[k..].iter().chain(&self.points[..k]).cloned().collect::<Vec<_>>())
            .min()
            .expect("nonempty");
        Cycle { points: best }
    }

    /// Graph pairs `(x_i, x_{i+1})`.
    pub fn pairs(&self) -> Vec<Point> {
        let p = self.points.len();
        (0..p).map(|i| Point::new(self.points[i].clone(), self.points[(i + 1) % p].clone())).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSearch {
    /// Canonical rotations, sorted.
    pub cycles: Vec<Cycle>,
    /// `true` when every piece sequence was examined.
    pub complete: bool,
    /// Search-tree nodes visited.
    pub explored: usize,
}

/// A point of `sol` with exact period `p`, if one exists.
fn representative(sol: &ChainSolution, p: usize) -> Option<Vec<Rational>> {
    let divisors: Vec<usize> = (1..p).filter(|q| p.is_multiple_of(*q)).collect();
    let collapses = |q: usize| (0..p).all(|i| always_equal(sol, i, (i + q) % p));
    if divisors.iter().any(|&q| collapses(q)) {
        return None;
    }
    let mid = sol.sample();
    if minimal_period(&mid) == p {
        return Some(mid);
    }
    generic_parameters(sol)
        .take(GENERIC_TRIES)
        .map(|params| sol.point_at(&params))
        .find(|pt| minimal_period(pt) == p)
}

struct Search<'a> {
    pieces: &'a [Piece],
    period: usize,
    budget: usize,
    explored: usize,
    seq: Vec<usize>,
    found: BTreeSet<Cycle>,
    relation: &'a PLRelation,
}

impl Search<'_> {
    /// Extends `seq`, where `reach` over-approximates the current point.
    /// Returns `false` once the budget is exhausted.
    fn extend(&mut self, reach: &Interval) -> bool {
        if self.explored >= self.budget {
            return false;
        }
        self.explored += 1;
        let first = self.seq[0];
        if self.seq.len() == self.period {
            if reach.intersect(&self.pieces[first].x_extent()).is_some() {
                self.solve();
            }
            return true;
        }
        for idx in first..self.pieces.len() {
            let piece = &self.pieces[idx];
            let Some(dom) = reach.intersect(&piece.x_extent()) else { continue };
            let Some(next) = piece.image(&dom) else { continue };
            self.seq.push(idx);
            let ok = self.extend(&next);
            self.seq.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    fn solve(&mut self) {
        let constraints: Vec<Piece> = self.seq.iter().map(|&i| self.pieces[i].clone()).collect();
        let Some(sol) = solve_cycle(&constraints) else { return };
        if let Some(pt) = representative(&sol, self.period) {
            let cycle = Cycle::new(self.relation, pt).expect("solutions lie on the chosen pieces");
            self.found.insert(cycle.canonical());
        }
    }
}

/// All exact-period-`p` cycles, one representative per solvable piece
/// sequence, deduplicated up to rotation.
pub fn find_cycles(r: &PLRelation, p: usize, budget: usize) -> CycleSearch {
    assert!(p >= 1, "period must be positive");
    let mut search = Search {
        pieces: r.pieces(),
        period: p,
        budget,
        explored: 0,
        seq: Vec::with_capacity(p),
        found: BTreeSet::new(),
        relation: r,
    };
    let mut complete = true;
    for first in 0..r.pieces().len() {
        search.seq.push(first);
        let piece = &r.pieces()[first];
        let next = piece.image(&piece.x_extent()).expect("a piece meets its own extent");
        let ok = search.extend(&next);
        search.seq.pop();
        if !ok {
            complete = false;
            break;
        }
    }
    CycleSearch { cycles: search.found.into_iter().collect(), complete, explored: search.explored }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::corpus;
    use crate::rational::{rat, zero};

    fn tent() -> PLRelation {
        corpus("tent").unwrap()
    }

    #[test]
    fn tent_period_three() {
        let s = find_cycles(&tent(), 3, DEFAULT_CYCLE_BUDGET);
        assert!(s.complete);
        let want = Cycle::new(&tent(), vec![rat(2, 9), rat(4, 9), rat(8, 9)]).unwrap();
        assert!(s.cycles.contains(&want));
        for c in &s.cycles {
            assert_eq!(Cycle::new(&tent(), c.points().to_vec()).as_ref(), Ok(c));
        }
    }

    #[test]
    fn tent_fixed_points() {
        let s = find_cycles(&tent(), 1, DEFAULT_CYCLE_BUDGET);
        let pts: Vec<Vec<Rational>> = s.cycles.iter().map(|c| c.points().to_vec()).collect();
        assert_eq!(pts, vec![vec![zero()], vec![rat(2, 3)]]);
    }

    #[test]
    fn diagonal_has_no_two_cycle() {
        let s = find_cycles(&PLRelation::identity(), 2, DEFAULT_CYCLE_BUDGET);
        assert!(s.complete && s.cycles.is_empty());
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let s = find_cycles(&tent(), 6, 5);
        assert!(!s.complete);
        assert_eq!(s.explored, 5);
    }

    #[test]
    fn cycle_validation() {
        let t = tent();
        assert_eq!(
            Cycle::new(&t, vec![zero(), zero()]),
            Err(CycleError::NotExactPeriod(1))
        );
        assert!(matches!(
            Cycle::new(&t, vec![rat(1, 3), rat(1, 3)]),
            Err(CycleError::NotInRelation { index: 0, .. })
        ));
        let c = Cycle::new(&t, vec![rat(8, 9), rat(2, 9), rat(4, 9)]).unwrap();
        assert_eq!(c.canonical().points(), &[rat(2, 9), rat(4, 9), rat(8, 9)]);
    }

    #[test]
    fn square_has_all_periods() {
        let sq = corpus("square").unwrap();
        for p in 1..=5 {
            let s = find_cycles(&sq, p, DEFAULT_CYCLE_BUDGET);
            assert_eq!(s.cycles.len(), 1, "period {p}");
        }
    }
}
