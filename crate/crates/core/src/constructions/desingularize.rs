//! Replacing the two-dimensional parts of a graph by a light single-valued
//! path that keeps a given cycle.
//!
//! Inside each component `O` of the x-projection of the rectangles, the
//! output is a polyline through a sorted list of mandatory points: the cycle
//! pairs over `O`, one point attaining `max f[cl O]`, one attaining
//! `min f[cl O]`, and a designated value at each end of `cl O`. Horizontal
//! joins get an extra zigzag vertex. Outside the components the relation is
//! kept as is. The result is checked against every postcondition before it
//! is returned.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::dynamics::{Cycle, CycleError};
use crate::interval::{Interval, IntervalSet};
use crate::piece::{Piece, Point};
use crate::properties::{classify, left_limit, right_limit};
use crate::rational::{midpoint, one, rat, zero, Rational};
use crate::relation::{normalize, PLRelation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesingularizeError {
    #[error("invalid cycle: {0}")]
    Cycle(#[from] CycleError),
    #[error("cycle visits x = {x} twice with different successors")]
    RepeatedPoint { x: Rational },
    #[error("relation does not have the intermediate value property")]
    NotIvp,
    #[error("relation is not surjective")]
    NotSurjective,
    #[error("no routed path satisfies the postconditions: {0}")]
    RoutingFailed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesingularizationPlan {
    /// Closures of the components of the rectangles' x-projection.
    pub components: Vec<Interval>,
    /// Per component: the max and min anchors.
    pub anchors: Vec<(Point, Point)>,
    /// Per component: polyline vertices, sorted by x.
    pub routes: Vec<Vec<Point>>,
}

/// Maximal closed intervals covered by rectangle x-extents.
fn components(r: &PLRelation) -> Vec<Interval> {
    let set = IntervalSet::from_intervals(r.pieces().iter().filter(|p| p.is_rect()).map(Piece::x_extent));
    set.components().to_vec()
}

fn contained_in(r: &PLRelation, pieces: &[Piece]) -> bool {
    normalize(r.pieces().iter().cloned().chain(pieces.iter().cloned())).ok().as_ref() == Some(r)
}

/// Candidate x-values inside `(lo, hi)`, nicest first.
fn interior_candidates(lo: Rational, hi: Rational) -> impl Iterator<Item = Rational> {
    let len = &hi - &lo;
    (2i64..).flat_map(move |d| {
        let (lo, len) = (lo.clone(), len.clone());
        (1..d).filter(move |n| num::integer::gcd(*n, d) == 1).map(move |n| &lo + &len * rat(n, d))
    })
}

/// An x in the interior of `ext ∩ comp` that is not yet used.
fn fresh_x(ext: &Interval, comp: &Interval, used: &BTreeMap<Rational, Rational>) -> Rational {
    let iv = ext.intersect(comp).expect("rect lies inside its component");
    interior_candidates(iv.lo, iv.hi).find(|x| !used.contains_key(x)).expect("infinitely many candidates")
}

/// The rectangle attaining the extreme value, leftmost first.
fn extreme_rect<'a>(rects: &[&'a Piece], top: bool) -> &'a Piece {
    let key = |p: &&Piece| if top { p.y_extent().hi } else { -p.y_extent().lo };
    let best = rects.iter().map(key).max().expect("component has a rect");
    rects.iter().find(|p| key(p) == best).copied().unwrap()
}

/// Value at a component end that is not fixed by the cycle.
fn boundary_value(r: &PLRelation, outside: &PLRelation, x: &Rational, left_end: bool) -> Rational {
    let lim = if left_end { left_limit(outside, x) } else { right_limit(outside, x) };
    let pick = if lim.is_empty() { r.slice(x) } else { lim };
    pick.min().expect("domain is full").clone()
}

/// A vertex between two points at the same height, inside the relation.
fn zigzag(r: &PLRelation, a: &Point, b: &Point) -> Point {
    let x = midpoint(&a.x, &b.x);
    let s = r.slice(&x);
    let comp = s.component_of(&a.y).expect("the join lies in the graph").clone();
    let y = if &comp.hi - &a.y >= &a.y - &comp.lo { midpoint(&a.y, &comp.hi) } else { midpoint(&comp.lo, &a.y) };
    Point::new(x, y)
}

fn route(r: &PLRelation, mandatory: &BTreeMap<Rational, Rational>) -> Vec<Point> {
    let pts: Vec<Point> = mandatory.iter().map(|(x, y)| Point::new(x.clone(), y.clone())).collect();
    let mut out = vec![pts[0].clone()];
    for w in pts.windows(2) {
        if w[0].y == w[1].y {
            out.push(zigzag(r, &w[0], &w[1]));
        }
        out.push(w[1].clone());
    }
    out
}

fn polyline(vertices: &[Point]) -> Vec<Piece> {
    if vertices.len() == 1 {
        return vec![Piece::Point(vertices[0].clone())];
    }
    vertices.windows(2).map(|w| Piece::segment(w[0].clone(), w[1].clone())).collect()
}

/// Runs the construction and returns the output together with its plan.
/// Relations without rectangles come back unchanged with no plan.
pub fn desingularize_with_plan(
    r: &PLRelation,
    cycle: &[Rational],
) -> Result<(PLRelation, Option<DesingularizationPlan>), DesingularizeError> {
    let cycle = Cycle::new(r, cycle.to_vec())?;
    let mut successor: BTreeMap<Rational, Rational> = BTreeMap::new();
    for pair in cycle.pairs() {
        if let Some(prev) = successor.insert(pair.x.clone(), pair.y.clone()) {
            if prev != pair.y {
                return Err(DesingularizeError::RepeatedPoint { x: pair.x });
            }
        }
    }
    if !r.has_rect() {
        return Ok((r.clone(), None));
    }
    let report = classify(r);
    if !report.ivp {
        return Err(DesingularizeError::NotIvp);
    }
    if !report.surjective {
        return Err(DesingularizeError::NotSurjective);
    }

    let comps = components(r);
    let inside = |x: &Rational| comps.iter().any(|c| c.lo < *x && *x < c.hi);
    // Keep non-rect pieces on the complement of the open components.
    let mut kept = Vec::new();
    let mut cuts: Vec<Rational> = vec![zero(), one()];
    cuts.extend(comps.iter().flat_map(|c| [c.lo.clone(), c.hi.clone()]));
    cuts.sort();
    cuts.dedup();
    for w in cuts.windows(2) {
        if inside(&midpoint(&w[0], &w[1])) {
            continue;
        }
        let strip = Interval::new(w[0].clone(), w[1].clone());
        kept.extend(r.pieces().iter().filter(|p| !p.is_rect()).filter_map(|p| p.clip(Some(&strip), None)));
    }
    for x in &cuts {
        if !inside(x) {
            kept.extend(r.pieces().iter().filter(|p| !p.is_rect()).filter_map(|p| {
                p.clip(Some(&Interval::point(x.clone())), None)
            }));
        }
    }
    let outside = normalize(kept.clone()).expect("subset of the input");

    let mut plan = DesingularizationPlan { components: comps.clone(), anchors: Vec::new(), routes: Vec::new() };
    let mut pieces = kept;
    for comp in &comps {
        let rects: Vec<&Piece> =
            r.pieces().iter().filter(|p| p.is_rect() && comp.contains_interval(&p.x_extent())).collect();
        let mut mandatory: BTreeMap<Rational, Rational> =
            successor.iter().filter(|(x, _)| comp.contains(x)).map(|(x, y)| (x.clone(), y.clone())).collect();
        let hi_rect = extreme_rect(&rects, true);
        let top = Point::new(fresh_x(&hi_rect.x_extent(), comp, &mandatory), hi_rect.y_extent().hi);
        mandatory.insert(top.x.clone(), top.y.clone());
        let lo_rect = extreme_rect(&rects, false);
        let bottom = Point::new(fresh_x(&lo_rect.x_extent(), comp, &mandatory), lo_rect.y_extent().lo);
        mandatory.insert(bottom.x.clone(), bottom.y.clone());
        for (x, left_end) in [(&comp.lo, true), (&comp.hi, false)] {
            if !mandatory.contains_key(x) {
                let y = boundary_value(r, &outside, x, left_end);
                mandatory.insert(x.clone(), y);
            }
        }
        let path = route(r, &mandatory);
        pieces.extend(polyline(&path));
        plan.anchors.push((top, bottom));
        plan.routes.push(path);
    }

    let g = normalize(pieces).expect("routed points lie in the unit square");
    verify(r, &g, &cycle)?;
    Ok((g, Some(plan)))
}

pub fn desingularize(r: &PLRelation, cycle: &[Rational]) -> Result<PLRelation, DesingularizeError> {
    desingularize_with_plan(r, cycle).map(|(g, _)| g)
}

fn verify(r: &PLRelation, g: &PLRelation, cycle: &Cycle) -> Result<(), DesingularizeError> {
    let fail = |what: &str| Err(DesingularizeError::RoutingFailed(what.to_string()));
    if !contained_in(r, g.pieces()) {
        return fail("output leaves the input graph");
    }
    let rep = classify(g);
    for (ok, what) in [
        (rep.ivp, "intermediate value property"),
        (rep.light, "lightness"),
        (rep.almost_nonfissile, "almost nonfissile"),
        (rep.interior_empty, "empty interior"),
        (rep.surjective, "surjectivity"),
    ] {
        if !ok {
            return fail(what);
        }
    }
    if Cycle::new(g, cycle.points().to_vec()).is_err() {
        return fail("cycle lost");
    }
    Ok(())
}
