//! Piecewise-linear closed relations on the unit square.
//!
//! A [`PLRelation`] is the graph `G(f)` of an upper semicontinuous set-valued
//! map `f : [0,1] → 2^[0,1]`, stored as a canonical finite union of pieces.
//! Two relations with the same point set have identical piece lists, so
//! structural equality is set equality.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};
use thiserror::Error;

use crate::interval::{Interval, IntervalSet};
use crate::piece::{coordinate_ok, Piece, Point};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("coordinate ({x}, {y}) lies outside the unit square")]
    OutOfRange { x: Rational, y: Rational },
    #[error("restriction leaves an empty value set at x = {x}")]
    EmptySlice { x: Rational },
    #[error("cannot rescale a restriction onto a degenerate interval")]
    DegenerateRescale,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLRelation {
    pieces: Vec<Piece>,
}

impl PLRelation {
    /// Validates coordinates and normalizes. See [`normalize`].
    pub fn new<I: IntoIterator<Item = Piece>>(pieces: I) -> Result<Self, RelationError> {
        normalize(pieces)
    }

    pub fn empty() -> Self {
        PLRelation { pieces: Vec::new() }
    }

    /// The diagonal `{(x, x)}`.
    pub fn identity() -> Self {
        let p = Piece::seg(Rational::zero(), Rational::zero(), Rational::one(), Rational::one());
        PLRelation { pieces: vec![p] }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn has_rect(&self) -> bool {
        self.pieces.iter().any(Piece::is_rect)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.pieces.iter().any(|q| q.contains(p))
    }

    /// `f(x)`.
    pub fn slice(&self, x: &Rational) -> IntervalSet {
        self.image_interval(&Interval::point(x.clone()))
    }

    pub fn image_interval(&self, xs: &Interval) -> IntervalSet {
        IntervalSet::from_intervals(self.pieces.iter().filter_map(|p| p.image(xs)))
    }

    /// `f[I] = {y : ∃x ∈ I, (x, y) ∈ G}`.
    pub fn image(&self, xs: &IntervalSet) -> IntervalSet {
        IntervalSet::from_intervals(
            xs.components()
                .iter()
                .flat_map(|iv| self.pieces.iter().filter_map(move |p| p.image(iv))),
        )
    }

    /// `{x : f(x) ∩ Y ≠ ∅}`; the image under the transpose.
    pub fn preimage(&self, ys: &IntervalSet) -> IntervalSet {
        IntervalSet::from_intervals(ys.components().iter().flat_map(|iv| {
            self.pieces
                .iter()
                .filter_map(move |p| p.clip(None, Some(iv)).map(|c| c.x_extent()))
        }))
    }

    pub fn domain(&self) -> IntervalSet {
        IntervalSet::from_intervals(self.pieces.iter().map(Piece::x_extent))
    }

    pub fn range(&self) -> IntervalSet {
        IntervalSet::from_intervals(self.pieces.iter().map(Piece::y_extent))
    }

    /// Every `x ∈ [0,1]` has a nonempty value set.
    pub fn domain_is_full(&self) -> bool {
        self.domain() == IntervalSet::unit()
    }

    pub fn is_surjective(&self) -> bool {
        self.range() == IntervalSet::unit()
    }

    /// `{(y, x) : (x, y) ∈ G}`.
    pub fn transpose(&self) -> PLRelation {
        normalize(self.pieces.iter().map(Piece::transpose)).expect("transpose stays in the unit square")
    }

    /// Apply `self` then `then`: `{(x, z) : ∃y, (x, y) ∈ self, (y, z) ∈ then}`.
    pub fn compose(&self, then: &PLRelation) -> PLRelation {
        let mut out = Vec::new();
        for p in &self.pieces {
            for q in &then.pieces {
                if p.y_extent().intersect(&q.x_extent()).is_none() {
                    continue;
                }
                if let Some(c) = compose_pieces(p, q) {
                    out.push(c);
                }
            }
        }
        normalize(out).expect("composition stays in the unit square")
    }

    /// `G ∩ (I × J)`, provided every `x ∈ I` keeps a value in `J`.
    pub fn restrict(&self, xs: &Interval, ys: &Interval) -> Result<PLRelation, RelationError> {
        let kept = self.preimage(&IntervalSet::from_interval(ys.clone()));
        let need = IntervalSet::from_interval(xs.clone());
        if let Some(x) = need.point_outside(&kept) {
            return Err(RelationError::EmptySlice { x });
        }
        normalize(self.pieces.iter().filter_map(|p| p.clip(Some(xs), Some(ys))))
    }

    /// [`restrict`](Self::restrict), then rescale `I × J` affinely onto the unit square.
    pub fn restrict_rescaled(&self, xs: &Interval, ys: &Interval) -> Result<PLRelation, RelationError> {
        if xs.is_point() || ys.is_point() {
            return Err(RelationError::DegenerateRescale);
        }
        let r = self.restrict(xs, ys)?;
        let map = |p: &Point| Point::new((&p.x - &xs.lo) / xs.len(), (&p.y - &ys.lo) / ys.len());
        normalize(r.pieces.iter().map(|piece| match piece {
            Piece::Point(a) => Piece::Point(map(a)),
            Piece::Segment(a, b) => Piece::segment(map(a), map(b)),
            Piece::Rect(a, b) => Piece::Rect(map(a), map(b)),
        }))
    }
}

fn compose_pieces(p: &Piece, q: &Piece) -> Option<Piece> {
    if let Some((px, py)) = p.as_box() {
        let z = q.image(&py)?;
        return Some(Piece::from_box(&px, &z));
    }
    if let Some((qy, qz)) = q.as_box() {
        let x = p.clip(None, Some(&qy))?.x_extent();
        return Some(Piece::from_box(&x, &qz));
    }
    let clipped = p.clip(None, Some(&q.x_extent()))?;
    let (m, c) = q.slope_intercept()?;
    let lift = |a: &Point| Point::new(a.x.clone(), &m * &a.y + &c);
    Some(match clipped {
        Piece::Point(a) => Piece::Point(lift(&a)),
        Piece::Segment(a, b) => Piece::segment(lift(&a), lift(&b)),
        Piece::Rect(..) => unreachable!("clipping a segment yields a segment or point"),
    })
}

/// Parameter range `t ∈ [0,1]` for which `a + t(b - a)` lies in the box.
fn param_range_in_box(a: &Point, b: &Point, xs: &Interval, ys: &Interval) -> Option<Interval> {
    let mut t = Interval::unit();
    for (p0, p1, bound) in [(&a.x, &b.x, xs), (&a.y, &b.y, ys)] {
        let d = p1 - p0;
        if d.is_zero() {
            if !bound.contains(p0) {
                return None;
            }
        } else {
            t = t.intersect(&Interval::new((&bound.lo - p0) / &d, (&bound.hi - p0) / &d))?;
        }
    }
    Some(t)
}

/// Canonical form of a finite union of pieces.
///
/// Rectangles are rebuilt from maximal vertical slabs with constant slice,
/// segment portions covered by rectangles are removed, collinear segments are
/// merged into maximal runs, and points covered by anything else are dropped.
/// The result is idempotent and depends only on the point set.
pub fn normalize<I: IntoIterator<Item = Piece>>(pieces: I) -> Result<PLRelation, RelationError> {
    let mut rects = Vec::new();
    let mut segments = Vec::new();
    let mut points = Vec::new();
    for p in pieces {
        for v in p.vertices() {
            if !coordinate_ok(&v.x) || !coordinate_ok(&v.y) {
                return Err(RelationError::OutOfRange { x: v.x, y: v.y });
            }
        }
        match p {
            Piece::Rect(..) => rects.push(p),
            Piece::Segment(a, b) => segments.push((a, b)),
            Piece::Point(a) => points.push(a),
        }
    }

    let rects = canonical_rects(&rects);
    let boxes: Vec<(Interval, Interval)> = rects.iter().filter_map(Piece::as_box).collect();

    let mut lines: BTreeMap<(bool, Rational, Rational), Vec<Interval>> = BTreeMap::new();
    for (a, b) in &segments {
        let covered = IntervalSet::from_intervals(
            boxes.iter().filter_map(|(xs, ys)| param_range_in_box(a, b, xs, ys)),
        );
        for t in complement_in_unit(&covered) {
            let at = |s: &Rational| {
                Point::new(&a.x + (&b.x - &a.x) * s, &a.y + (&b.y - &a.y) * s)
            };
            let (u, v) = (at(&t.lo), at(&t.hi));
            if a.x == b.x {
                lines.entry((true, a.x.clone(), Rational::zero())).or_default().push(Interval::new(u.y, v.y));
            } else {
                let m = (&b.y - &a.y) / (&b.x - &a.x);
                let c = &a.y - &m * &a.x;
                lines.entry((false, m, c)).or_default().push(Interval::new(u.x, v.x));
            }
        }
    }
    let mut merged = Vec::new();
    for ((vertical, k1, k2), spans) in lines {
        for iv in IntervalSet::from_intervals(spans).components() {
            let piece = if vertical {
                Piece::seg(k1.clone(), iv.lo.clone(), k1.clone(), iv.hi.clone())
            } else {
                Piece::seg(
                    iv.lo.clone(),
                    &k1 * &iv.lo + &k2,
                    iv.hi.clone(),
                    &k1 * &iv.hi + &k2,
                )
            };
            merged.push(piece);
        }
    }

    let mut out: BTreeSet<Piece> = BTreeSet::new();
    for p in points {
        if !rects.iter().chain(merged.iter()).any(|q| q.contains(&p)) {
            out.insert(Piece::Point(p));
        }
    }
    out.extend(rects);
    out.extend(merged);
    Ok(PLRelation { pieces: out.into_iter().collect() })
}

fn canonical_rects(rects: &[Piece]) -> Vec<Piece> {
    if rects.is_empty() {
        return Vec::new();
    }
    let boxes: Vec<(Interval, Interval)> = rects.iter().filter_map(Piece::as_box).collect();
    let xs: BTreeSet<Rational> =
        boxes.iter().flat_map(|(x, _)| [x.lo.clone(), x.hi.clone()]).collect();
    let xs: Vec<Rational> = xs.into_iter().collect();
    let mut out = Vec::new();
    let mut run: Option<(Rational, Rational, IntervalSet)> = None;
    for w in xs.windows(2) {
        let slab = IntervalSet::from_intervals(
            boxes
                .iter()
                .filter(|(bx, _)| bx.lo <= w[0] && bx.hi >= w[1])
                .map(|(_, by)| by.clone()),
        );
        match &mut run {
            Some((_, hi, ys)) if *ys == slab && *hi == w[0] => *hi = w[1].clone(),
            _ => {
                if let Some(done) = run.take() {
                    flush_run(done, &mut out);
                }
                if !slab.is_empty() {
                    run = Some((w[0].clone(), w[1].clone(), slab));
                }
            }
        }
    }
    if let Some(done) = run {
        flush_run(done, &mut out);
    }
    out
}

fn flush_run((lo, hi, ys): (Rational, Rational, IntervalSet), out: &mut Vec<Piece>) {
    let xs = Interval::new(lo, hi);
    for y in ys.components() {
        out.push(Piece::from_box(&xs, y));
    }
}

/// Closures of the gaps of `covered` inside `[0, 1]`.
fn complement_in_unit(covered: &IntervalSet) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut cur = Rational::zero();
    for iv in covered.components() {
        if iv.lo > cur {
            out.push(Interval::new(cur.clone(), iv.lo.clone()));
        }
        if iv.hi > cur {
            cur = iv.hi.clone();
        }
    }
    if cur < Rational::one() {
        out.push(Interval::new(cur, Rational::one()));
    }
    out
}
