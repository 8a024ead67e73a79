//! Decision procedures for the intermediate value property and its relatives.
//!
//! Every predicate is decided exactly by sweeping a finite event set: the
//! x-coordinates of all piece endpoints and of all pairwise piece
//! intersections, together with `0` and `1`. Between consecutive events the
//! slice `f(x)` moves affinely and keeps its combinatorial shape, so checking
//! each event and one interior sample per gap is exhaustive for this class.
//!
//! The intermediate value property is decided twice, by independent routes:
//!
//! * **criterion**: weak continuity plus connected slices;
//! * **strips**: for every `a < b`, `G ∩ ([a,b] × [0,1])` is connected and
//!   equals the closure of `G ∩ ((a,b) × [0,1])`.
//!
//! [`classify`] panics if the two disagree.
//!
//! Weak continuity is also required one-sidedly at the domain endpoints
//! (from the right at `0`, from the left at `1`). Without that, a graph such
//! as `[0,1) × {0} ∪ {1} × [0,1]` would pass the criterion while failing the
//! intermediate value property at `x₁ = 1`.

use std::fmt;
use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;

use crate::interval::{Interval, IntervalSet};
use crate::piece::{Piece, Point};
use crate::rational::{midpoint, one, rat, zero, Rational};
use crate::relation::{normalize, PLRelation};
use crate::weak_ivp::{self, WeakIvpWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A graph point `(x, y)` that is not a one-sided limit of graph points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discontinuity {
    pub x: Rational,
    pub y: Rational,
    pub side: Side,
}

/// One connected region of the fissile x-set `{x : |f(x)| > 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FissileRegion {
    Point(Rational),
    /// The open interval `(a, b)`.
    Open(Rational, Rational),
}

impl fmt::Display for FissileRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FissileRegion::Point(x) => write!(f, "{{{x}}}"),
            FissileRegion::Open(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FissileSet {
    pub regions: Vec<FissileRegion>,
}

impl FissileSet {
    pub fn contains(&self, x: &Rational) -> bool {
        self.regions.iter().any(|r| match r {
            FissileRegion::Point(p) => p == x,
            FissileRegion::Open(a, b) => a < x && x < b,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witnesses {
    pub domain_gap: Option<Rational>,
    pub graph_components: usize,
    pub disconnected_slice: Option<Rational>,
    pub discontinuity: Option<Discontinuity>,
    pub strip_failure: Option<(Rational, Rational)>,
    pub weak_ivp_failure: Option<WeakIvpWitness>,
    /// A level `y` whose preimage has interior.
    pub non_light_level: Option<Rational>,
    /// A graph point outside the closure of the nonfissile graph points.
    pub fissile_graph_point: Option<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub domain_full: bool,
    pub surjective: bool,
    pub graph_connected: bool,
    pub interior_empty: bool,
    pub slices_connected: bool,
    pub weakly_continuous: bool,
    pub ivp: bool,
    pub weak_ivp: bool,
    pub light: bool,
    pub almost_nonfissile: bool,
    pub fissile_set: FissileSet,
    pub witnesses: Witnesses,
}

/// Event x-coordinates, sorted: `0`, `1`, piece endpoints, and endpoints of
/// pairwise piece intersections.
pub fn events(r: &PLRelation) -> Vec<Rational> {
    let mut set: BTreeSet<Rational> = [zero(), one()].into_iter().collect();
    let pieces = r.pieces();
    for p in pieces {
        let e = p.x_extent();
        set.insert(e.lo);
        set.insert(e.hi);
    }
    for (i, p) in pieces.iter().enumerate() {
        for q in &pieces[i + 1..] {
            if let Some(c) = p.intersect(q) {
                let e = c.x_extent();
                set.insert(e.lo);
                set.insert(e.hi);
            }
        }
    }
    set.into_iter().collect()
}

fn midpoints(sorted: &[Rational]) -> Vec<Rational> {
    sorted.windows(2).map(|w| midpoint(&w[0], &w[1])).collect()
}

/// Closure of `G ∩ {x' < x}` sliced at `x`.
pub fn left_limit(r: &PLRelation, x: &Rational) -> IntervalSet {
    IntervalSet::from_intervals(r.pieces().iter().filter_map(|p| {
        let e = p.x_extent();
        (e.lo < *x && *x <= e.hi).then(|| p.slice(x)).flatten()
    }))
}

/// Closure of `G ∩ {x' > x}` sliced at `x`.
pub fn right_limit(r: &PLRelation, x: &Rational) -> IntervalSet {
    IntervalSet::from_intervals(r.pieces().iter().filter_map(|p| {
        let e = p.x_extent();
        (e.lo <= *x && *x < e.hi).then(|| p.slice(x)).flatten()
    }))
}

/// Union of the pieces is connected (pieces are convex, so this is
/// connectivity of the piece intersection graph).
pub fn pieces_connected(pieces: &[Piece]) -> bool {
    component_count(pieces) <= 1
}

pub fn component_count(pieces: &[Piece]) -> usize {
    let mut uf = UnionFind::<usize>::new(pieces.len());
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            if pieces[i].intersects(&pieces[j]) {
                uf.union(i, j);
            }
        }
    }
    let labels: BTreeSet<usize> = uf.into_labeling().into_iter().collect();
    labels.len()
}

/// First event or gap sample with a disconnected slice.
pub fn disconnected_slice(r: &PLRelation) -> Option<Rational> {
    let ev = events(r);
    let mut xs = ev.clone();
    xs.extend(midpoints(&ev));
    xs.sort();
    xs.into_iter().find(|x| !r.slice(x).is_connected())
}

/// First failure of weak continuity, scanning events left to right.
pub fn discontinuity(r: &PLRelation) -> Option<Discontinuity> {
    for x in events(r) {
        let f = r.slice(&x);
        if x > zero() {
            if let Some(y) = f.point_outside(&left_limit(r, &x)) {
                return Some(Discontinuity { x, y, side: Side::Left });
            }
        }
        if x < one() {
            if let Some(y) = f.point_outside(&right_limit(r, &x)) {
                return Some(Discontinuity { x, y, side: Side::Right });
            }
        }
    }
    None
}

/// The intermediate value property via weak continuity and connected slices.
pub fn ivp_by_criterion(r: &PLRelation) -> bool {
    r.domain_is_full() && disconnected_slice(r).is_none() && discontinuity(r).is_none()
}

/// Closure of `G ∩ ((a,b) × [0,1])`.
fn open_strip_closure(r: &PLRelation, a: &Rational, b: &Rational) -> Vec<Piece> {
    let strip = Interval::new(a.clone(), b.clone());
    r.pieces()
        .iter()
        .filter_map(|p| {
            let e = p.x_extent();
            if e.is_point() {
                (*a < e.lo && e.lo < *b).then(|| p.clone())
            } else {
                let overlap = e.intersect(&strip)?;
                (!overlap.is_point()).then(|| p.clip(Some(&strip), None)).flatten()
            }
        })
        .collect()
}

/// The first strip `[a, b]` that is disconnected or not the closure of its
/// open part, or `None` if every strip passes.
pub fn strip_failure(r: &PLRelation) -> Option<(Rational, Rational)> {
    let ev = events(r);
    let mut cands: BTreeSet<Rational> = ev.iter().cloned().collect();
    for w in ev.windows(2) {
        let third = (&w[1] - &w[0]) * rat(1, 3);
        cands.insert(&w[0] + &third);
        cands.insert(&w[1] - &third);
    }
    let cands: Vec<Rational> = cands.into_iter().collect();
    for (i, a) in cands.iter().enumerate() {
        for b in &cands[i + 1..] {
            let strip = Interval::new(a.clone(), b.clone());
            let closed: Vec<Piece> =
                r.pieces().iter().filter_map(|p| p.clip(Some(&strip), None)).collect();
            if !pieces_connected(&closed) {
                return Some((a.clone(), b.clone()));
            }
            let open = open_strip_closure(r, a, b);
            let lhs = normalize(closed).expect("clipped pieces stay in range");
            let rhs = normalize(open).expect("clipped pieces stay in range");
            if lhs != rhs {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// The intermediate value property via connected strips.
pub fn ivp_by_strips(r: &PLRelation) -> bool {
    r.domain_is_full() && strip_failure(r).is_none()
}

/// The fissile x-set, as event points and open gaps.
pub fn fissile_set(r: &PLRelation) -> FissileSet {
    let ev = events(r);
    let mut regions = Vec::new();
    for (i, x) in ev.iter().enumerate() {
        if !r.slice(x).is_single_point() {
            regions.push(FissileRegion::Point(x.clone()));
        }
        if let Some(next) = ev.get(i + 1) {
            if !r.slice(&midpoint(x, next)).is_single_point() {
                regions.push(FissileRegion::Open(x.clone(), next.clone()));
            }
        }
    }
    FissileSet { regions }
}

/// Closure of the set of nonfissile graph points.
pub fn nonfissile_closure(r: &PLRelation) -> PLRelation {
    let ev = events(r);
    let mut pieces = Vec::new();
    for (i, x) in ev.iter().enumerate() {
        let s = r.slice(x);
        if s.is_single_point() {
            pieces.push(Piece::point(x.clone(), s.min().unwrap().clone()));
        }
        if let Some(next) = ev.get(i + 1) {
            if r.slice(&midpoint(x, next)).is_single_point() {
                let gap = Interval::new(x.clone(), next.clone());
                for p in r.pieces() {
                    let e = p.x_extent();
                    if e.lo <= *x && *next <= e.hi {
                        pieces.extend(p.clip(Some(&gap), None));
                    }
                }
            }
        }
    }
    normalize(pieces).expect("subset of a valid relation")
}

fn piece_center(p: &Piece) -> Point {
    match p {
        Piece::Point(a) => a.clone(),
        Piece::Segment(a, b) | Piece::Rect(a, b) => {
            Point::new(midpoint(&a.x, &b.x), midpoint(&a.y, &b.y))
        }
    }
}

fn non_light_level(r: &PLRelation) -> Option<Rational> {
    r.pieces().iter().find_map(|p| match p {
        Piece::Rect(lo, _) => Some(lo.y.clone()),
        Piece::Segment(a, b) if a.y == b.y => Some(a.y.clone()),
        _ => None,
    })
}

/// Fills every field of a [`PropertyReport`].
///
/// Panics if the two independent decisions of the intermediate value property
/// disagree; that can only mean an internal bug.
pub fn classify(r: &PLRelation) -> PropertyReport {
    let domain_full = r.domain_is_full();
    let components = component_count(r.pieces());
    let interior_empty = !r.has_rect();
    let non_light = non_light_level(r);
    let mut witnesses = Witnesses {
        graph_components: components,
        non_light_level: non_light.clone(),
        ..Witnesses::default()
    };
    let mut report = PropertyReport {
        domain_full,
        surjective: r.is_surjective(),
        graph_connected: components <= 1,
        interior_empty,
        slices_connected: false,
        weakly_continuous: false,
        ivp: false,
        weak_ivp: false,
        light: non_light.is_none(),
        almost_nonfissile: false,
        fissile_set: FissileSet::default(),
        witnesses: Witnesses::default(),
    };
    if !domain_full {
        witnesses.domain_gap = IntervalSet::unit().point_outside(&r.domain());
        report.witnesses = witnesses;
        return report;
    }

    witnesses.disconnected_slice = disconnected_slice(r);
    witnesses.discontinuity = discontinuity(r);
    report.slices_connected = witnesses.disconnected_slice.is_none();
    report.weakly_continuous = witnesses.discontinuity.is_none();
    report.ivp = report.slices_connected && report.weakly_continuous;

    witnesses.strip_failure = strip_failure(r);
    let strip_ivp = witnesses.strip_failure.is_none();
    if strip_ivp != report.ivp {
        panic!(
            "internal invariant violated: criterion IVP = {} but strip IVP = {}\n\
             relation pieces: {:?}\nwitnesses: {:?}",
            report.ivp, strip_ivp, r.pieces(), witnesses
        );
    }

    if report.ivp {
        report.weak_ivp = true;
    } else {
        witnesses.weak_ivp_failure = weak_ivp::find_counterexample(r);
        report.weak_ivp = witnesses.weak_ivp_failure.is_none();
    }

    report.fissile_set = fissile_set(r);
    let closure = nonfissile_closure(r);
    report.almost_nonfissile = closure == *r;
    if !report.almost_nonfissile {
        witnesses.fissile_graph_point = r.pieces().iter().find_map(|p| {
            let mut cands = p.vertices();
            cands.push(piece_center(p));
            cands.into_iter().find(|q| !closure.contains(q))
        });
    }
    report.witnesses = witnesses;
    report
}
