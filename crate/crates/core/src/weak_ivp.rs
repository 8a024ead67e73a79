//! Exact decision of the weak intermediate value property.
//!
//! `f` has the weak property when for all `x₁ ≠ x₂` and `y₁ ∈ f(x₁)` there is
//! `y₂ ∈ f(x₂)` with `[y₁ ∧ y₂, y₁ ∨ y₂] ⊆ f[[x₁ ∧ x₂, x₁ ∨ x₂]]`. Writing `T`
//! for that image, the condition fails at `(x₁, x₂)` exactly when some
//! component of `T` meets `f(x₁)` but misses `f(x₂)`.
//!
//! For fixed `(x₁, x₂)` this is a finite interval computation. The answer
//! only changes across a finite arrangement in the `(x₁, x₂)` square:
//!
//! * vertical and horizontal lines at events and at preimages of vertex
//!   levels under slanted pieces (the shape of `f(x)` and of `T`);
//! * lines `s(x₂) = s'(x₁)` for slanted pieces `s`, `s'` (an endpoint of a
//!   component of `T` or of `f(x₁)` coinciding with one of `f(x₂)`).
//!
//! Sampling every vertex of that arrangement plus midpoints between
//! consecutive candidates on each axis visits every cell, so the search is
//! exhaustive.

use std::collections::BTreeSet;

use num::Zero;

use crate::interval::Interval;
use crate::piece::Piece;
use crate::properties::events;
use crate::rational::{midpoint, Rational};
use crate::relation::PLRelation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakIvpWitness {
    pub x1: Rational,
    pub y1: Rational,
    pub x2: Rational,
}

/// The least `y₁ ∈ f(x₁)` that has no admissible partner in `f(x₂)`.
pub fn failure_at(r: &PLRelation, x1: &Rational, x2: &Rational) -> Option<Rational> {
    if x1 == x2 {
        return None;
    }
    let f1 = r.slice(x1);
    let f2 = r.slice(x2);
    let t = r.image_interval(&Interval::new(x1.clone(), x2.clone()));
    t.components().iter().find_map(|comp| {
        let hit = f1.intersect_interval(comp);
        (!hit.is_empty() && f2.intersect_interval(comp).is_empty()).then(|| hit.min().unwrap().clone())
    })
}

/// True when `(x₁, y₁, x₂)` violates the weak property.
pub fn is_counterexample(r: &PLRelation, x1: &Rational, y1: &Rational, x2: &Rational) -> bool {
    if x1 == x2 || !r.slice(x1).contains(y1) {
        return false;
    }
    let t = r.image_interval(&Interval::new(x1.clone(), x2.clone()));
    match t.component_of(y1) {
        Some(comp) => r.slice(x2).intersect_interval(comp).is_empty(),
        None => false,
    }
}

struct Line {
    m: Rational,
    c: Rational,
    ext: Interval,
}

impl Line {
    fn at(&self, x: &Rational) -> Rational {
        &self.m * x + &self.c
    }

    /// `x` with `self(x) = y`, if it lies on the piece.
    fn solve(&self, y: &Rational) -> Option<Rational> {
        let x = (y - &self.c) / &self.m;
        self.ext.contains(&x).then_some(x)
    }
}

fn slanted(r: &PLRelation) -> Vec<Line> {
    r.pieces()
        .iter()
        .filter(|p| p.is_slanted())
        .map(|p| {
            let (m, c) = p.slope_intercept().expect("slanted segment");
            Line { m, c, ext: p.x_extent() }
        })
        .collect()
}

fn with_midpoints(set: BTreeSet<Rational>) -> Vec<Rational> {
    let v: Vec<Rational> = set.into_iter().collect();
    let mut out = v.clone();
    out.extend(v.windows(2).map(|w| midpoint(&w[0], &w[1])));
    out.sort();
    out
}

/// Base coordinates shared by both axes.
fn base_coordinates(r: &PLRelation, lines: &[Line]) -> BTreeSet<Rational> {
    let mut c0: BTreeSet<Rational> = events(r).into_iter().collect();
    let levels: BTreeSet<Rational> =
        r.pieces().iter().flat_map(Piece::vertices).map(|p| p.y).collect();
    for l in lines {
        for v in &levels {
            c0.extend(l.solve(v));
        }
    }
    c0
}

/// The lexicographically least failing `(x₁, x₂)` among the arrangement
/// samples, or `None` if the relation has the weak property.
pub fn find_counterexample(r: &PLRelation) -> Option<WeakIvpWitness> {
    let lines = slanted(r);
    let c0 = base_coordinates(r, &lines);

    let mut x1s = c0.clone();
    for (i, s) in lines.iter().enumerate() {
        for (j, s1) in lines.iter().enumerate() {
            if i == j {
                continue;
            }
            // s(x₂) = s'(x₁) crossing the horizontal line x₂ = c.
            for c in &c0 {
                if s.ext.contains(c) {
                    x1s.extend(s1.solve(&s.at(c)));
                }
            }
            // Crossings with every other line of the same family.
            for (k, t) in lines.iter().enumerate() {
                for (l, t1) in lines.iter().enumerate() {
                    if k == l || (k, l) <= (i, j) {
                        continue;
                    }
                    x1s.extend(crossing(s, s1, t, t1));
                }
            }
        }
    }

    for x1 in with_midpoints(x1s) {
        let mut x2s = c0.clone();
        x2s.insert(x1.clone());
        for s1 in lines.iter().filter(|l| l.ext.contains(&x1)) {
            let y = s1.at(&x1);
            for s in &lines {
                x2s.extend(s.solve(&y));
            }
        }
        for x2 in with_midpoints(x2s) {
            if let Some(y1) = failure_at(r, &x1, &x2) {
                return Some(WeakIvpWitness { x1, y1, x2 });
            }
        }
    }
    None
}

/// The `x₁` where `s(x₂) = s'(x₁)` and `t(x₂) = t'(x₁)` meet inside the
/// pieces' extents.
fn crossing(s: &Line, s1: &Line, t: &Line, t1: &Line) -> Option<Rational> {
    // m_s x₂ - m_s' x₁ = c_s' - c_s, and likewise for t.
    let det = &s1.m * &t.m - &s.m * &t1.m;
    if det.is_zero() {
        return None;
    }
    let rs = &s1.c - &s.c;
    let rt = &t1.c - &t.c;
    let x1 = (&s.m * &rt - &t.m * &rs) / &det;
    let x2 = (&s1.m * &rt - &t1.m * &rs) / &det;
    let ok = s.ext.contains(&x2) && t.ext.contains(&x2) && s1.ext.contains(&x1) && t1.ext.contains(&x1);
    ok.then_some(x1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{one, rat, zero};

    fn ex2_11() -> PLRelation {
        PLRelation::new([
            Piece::seg(zero(), zero(), one(), rat(1, 3)),
            Piece::seg(rat(1, 2), zero(), one(), one()),
        ])
        .unwrap()
    }

    #[test]
    fn crossing_solves_both_equations() {
        let s = Line { m: rat(2, 1), c: zero(), ext: Interval::unit() };
        let s1 = Line { m: one(), c: rat(1, 4), ext: Interval::unit() };
        let t = Line { m: one(), c: zero(), ext: Interval::unit() };
        let t1 = Line { m: rat(1, 3), c: rat(1, 4), ext: Interval::unit() };
        let x1 = crossing(&s, &s1, &t, &t1).unwrap();
        assert_eq!(x1, rat(3, 4));
        // Recover x₂ from the first equation and check the second.
        let x2 = (s1.at(&x1) - &s.c) / &s.m;
        assert_eq!(s.at(&x2), s1.at(&x1));
        assert_eq!(t.at(&x2), t1.at(&x1));
    }

    #[test]
    fn identity_has_weak_property() {
        assert_eq!(find_counterexample(&PLRelation::identity()), None);
    }

    #[test]
    fn two_branch_example_fails() {
        let r = ex2_11();
        let w = find_counterexample(&r).expect("fails");
        assert!(is_counterexample(&r, &w.x1, &w.y1, &w.x2));
        assert_eq!(w, WeakIvpWitness { x1: rat(1, 2), y1: zero(), x2: rat(1, 4) });
    }
}
