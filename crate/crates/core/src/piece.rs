//! Points, segments and axis-aligned rectangles in the unit square.
//!
//! These three shapes are the building blocks of every relation. The class is
//! closed under intersection, clipping to boxes, transposition and relational
//! composition, which is what lets every operation in the crate stay exact.

use std::fmt;

use num::{Signed, Zero};

use crate::interval::Interval;
use crate::rational::{to_pq, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn transpose(&self) -> Point {
        Point { x: self.y.clone(), y: self.x.clone() }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A closed convex piece of a relation's graph.
///
/// Constructors canonicalize: segment endpoints are distinct and ordered, and
/// rectangles have strictly positive width and height (degenerate ones become
/// segments or points).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    Point(Point),
    Segment(Point, Point),
    Rect(Point, Point),
}

fn cross(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Rational {
    ax * by - ay * bx
}

impl Piece {
    pub fn point(x: Rational, y: Rational) -> Piece {
        Piece::Point(Point::new(x, y))
    }

    pub fn segment(a: Point, b: Point) -> Piece {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Piece::Point(a),
            std::cmp::Ordering::Less => Piece::Segment(a, b),
            std::cmp::Ordering::Greater => Piece::Segment(b, a),
        }
    }

    pub fn seg(x1: Rational, y1: Rational, x2: Rational, y2: Rational) -> Piece {
        Piece::segment(Point::new(x1, y1), Point::new(x2, y2))
    }

    pub fn rect(x1: Rational, y1: Rational, x2: Rational, y2: Rational) -> Piece {
        Piece::from_box(&Interval::new(x1, x2), &Interval::new(y1, y2))
    }

    /// The piece occupying exactly the box `xs × ys`.
    pub fn from_box(xs: &Interval, ys: &Interval) -> Piece {
        match (xs.is_point(), ys.is_point()) {
            (true, true) => Piece::point(xs.lo.clone(), ys.lo.clone()),
            (true, false) | (false, true) => Piece::seg(
                xs.lo.clone(),
                ys.lo.clone(),
                xs.hi.clone(),
                ys.hi.clone(),
            ),
            (false, false) => Piece::Rect(
                Point::new(xs.lo.clone(), ys.lo.clone()),
                Point::new(xs.hi.clone(), ys.hi.clone()),
            ),
        }
    }

    pub fn vertices(&self) -> Vec<Point> {
        match self {
            Piece::Point(p) => vec![p.clone()],
            Piece::Segment(a, b) => vec![a.clone(), b.clone()],
            Piece::Rect(lo, hi) => vec![
                lo.clone(),
                Point::new(hi.x.clone(), lo.y.clone()),
                Point::new(lo.x.clone(), hi.y.clone()),
                hi.clone(),
            ],
        }
    }

    pub fn x_extent(&self) -> Interval {
        match self {
            Piece::Point(p) => Interval::point(p.x.clone()),
            Piece::Segment(a, b) | Piece::Rect(a, b) => Interval::new(a.x.clone(), b.x.clone()),
        }
    }

    pub fn y_extent(&self) -> Interval {
        match self {
            Piece::Point(p) => Interval::point(p.y.clone()),
            Piece::Segment(a, b) | Piece::Rect(a, b) => Interval::new(a.y.clone(), b.y.clone()),
        }
    }

    /// The piece as a product `xs × ys`, if it is one (points, axis-parallel
    /// segments, rectangles).
    pub fn as_box(&self) -> Option<(Interval, Interval)> {
        match self {
            Piece::Segment(a, b) if a.x != b.x && a.y != b.y => None,
            _ => Some((self.x_extent(), self.y_extent())),
        }
    }

    /// A segment that is neither horizontal nor vertical.
    pub fn is_slanted(&self) -> bool {
        matches!(self, Piece::Segment(a, b) if a.x != b.x && a.y != b.y)
    }

    pub fn is_rect(&self) -> bool {
        matches!(self, Piece::Rect(..))
    }

    pub fn is_horizontal(&self) -> bool {
        matches!(self, Piece::Segment(a, b) if a.y == b.y)
    }

    pub fn is_vertical(&self) -> bool {
        matches!(self, Piece::Segment(a, b) if a.x == b.x)
    }

    /// Slope and intercept of a slanted segment's line `y = m x + c`.
    pub fn slope_intercept(&self) -> Option<(Rational, Rational)> {
        match self {
            Piece::Segment(a, b) if a.x != b.x => {
                let m = (&b.y - &a.y) / (&b.x - &a.x);
                let c = &a.y - &m * &a.x;
                Some((m, c))
            }
            _ => None,
        }
    }

    pub fn transpose(&self) -> Piece {
        match self {
            Piece::Point(p) => Piece::Point(p.transpose()),
            Piece::Segment(a, b) => Piece::segment(a.transpose(), b.transpose()),
            Piece::Rect(lo, hi) => Piece::Rect(lo.transpose(), hi.transpose()),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self.as_box() {
            Some((xs, ys)) => xs.contains(&p.x) && ys.contains(&p.y),
            None => {
                let Piece::Segment(a, b) = self else { unreachable!() };
                let c = cross(&(&b.x - &a.x), &(&b.y - &a.y), &(&p.x - &a.x), &(&p.y - &a.y));
                c.is_zero() && self.x_extent().contains(&p.x)
            }
        }
    }

    /// `self ∩ (xs × ys)`; `None` bounds are unrestricted.
    pub fn clip(&self, xs: Option<&Interval>, ys: Option<&Interval>) -> Option<Piece> {
        match self.as_box() {
            Some((px, py)) => {
                let nx = match xs {
                    Some(b) => px.intersect(b)?,
                    None => px,
                };
                let ny = match ys {
                    Some(b) => py.intersect(b)?,
                    None => py,
                };
                Some(Piece::from_box(&nx, &ny))
            }
            None => {
                let Piece::Segment(a, b) = self else { unreachable!() };
                let mut t = Interval::new(Rational::zero(), Rational::from_integer(1.into()));
                let dx = &b.x - &a.x;
                let dy = &b.y - &a.y;
                if let Some(bx) = xs {
                    let t1 = (&bx.lo - &a.x) / &dx;
                    let t2 = (&bx.hi - &a.x) / &dx;
                    t = t.intersect(&Interval::new(t1, t2))?;
                }
                if let Some(by) = ys {
                    let t1 = (&by.lo - &a.y) / &dy;
                    let t2 = (&by.hi - &a.y) / &dy;
                    t = t.intersect(&Interval::new(t1, t2))?;
                }
                let at = |s: &Rational| Point::new(&a.x + &dx * s, &a.y + &dy * s);
                Some(Piece::segment(at(&t.lo), at(&t.hi)))
            }
        }
    }

    /// `{y : (x, y) ∈ self, x ∈ xs}`.
    pub fn image(&self, xs: &Interval) -> Option<Interval> {
        self.clip(Some(xs), None).map(|p| p.y_extent())
    }

    /// `{y : (x, y) ∈ self}` at a single `x`.
    pub fn slice(&self, x: &Rational) -> Option<Interval> {
        self.image(&Interval::point(x.clone()))
    }

    pub fn intersect(&self, other: &Piece) -> Option<Piece> {
        match (self.as_box(), other.as_box()) {
            (Some((ax, ay)), Some((bx, by))) => {
                Some(Piece::from_box(&ax.intersect(&bx)?, &ay.intersect(&by)?))
            }
            (Some((bx, by)), None) => other.clip(Some(&bx), Some(&by)),
            (None, Some((bx, by))) => self.clip(Some(&bx), Some(&by)),
            (None, None) => segment_intersection(self, other),
        }
    }

    pub fn intersects(&self, other: &Piece) -> bool {
        // Cheap bounding-box rejection first.
        self.x_extent().intersect(&other.x_extent()).is_some()
            && self.y_extent().intersect(&other.y_extent()).is_some()
            && self.intersect(other).is_some()
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Piece::Point(_) => "pt",
            Piece::Segment(..) => "seg",
            Piece::Rect(..) => "rect",
        }
    }
}

fn segment_intersection(s: &Piece, t: &Piece) -> Option<Piece> {
    let (Piece::Segment(a1, b1), Piece::Segment(a2, b2)) = (s, t) else {
        return s.intersect(t);
    };
    let d1 = (&b1.x - &a1.x, &b1.y - &a1.y);
    let d2 = (&b2.x - &a2.x, &b2.y - &a2.y);
    let w = (&a2.x - &a1.x, &a2.y - &a1.y);
    let den = cross(&d1.0, &d1.1, &d2.0, &d2.1);
    if !den.is_zero() {
        let t = cross(&w.0, &w.1, &d2.0, &d2.1) / &den;
        let u = cross(&w.0, &w.1, &d1.0, &d1.1) / &den;
        let unit = Interval::unit();
        if unit.contains(&t) && unit.contains(&u) {
            return Some(Piece::point(&a1.x + &d1.0 * &t, &a1.y + &d1.1 * &t));
        }
        return None;
    }
    if !cross(&w.0, &w.1, &d1.0, &d1.1).is_zero() {
        return None;
    }
    // Collinear: project the second segment onto the first's parameter.
    let norm = &d1.0 * &d1.0 + &d1.1 * &d1.1;
    let param = |p: &Point| ((&p.x - &a1.x) * &d1.0 + (&p.y - &a1.y) * &d1.1) / &norm;
    let span = Interval::new(param(a2), param(b2)).intersect(&Interval::unit())?;
    let at = |s: &Rational| Point::new(&a1.x + &d1.0 * s, &a1.y + &d1.1 * s);
    Some(Piece::segment(at(&span.lo), at(&span.hi)))
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Point(p) => write!(f, "pt {} {}", to_pq(&p.x), to_pq(&p.y)),
            Piece::Segment(a, b) | Piece::Rect(a, b) => write!(
                f,
                "{} {} {} {} {}",
                self.kind(),
                to_pq(&a.x),
                to_pq(&a.y),
                to_pq(&b.x),
                to_pq(&b.y)
            ),
        }
    }
}

/// True when `v` lies in the closed unit interval; used for input validation.
pub(crate) fn coordinate_ok(v: &Rational) -> bool {
    !v.is_negative() && *v <= Rational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::new(rat(x.0, x.1), rat(y.0, y.1))
    }

    #[test]
    fn degenerate_rect_becomes_segment() {
        let r = Piece::rect(int(0), rat(1, 2), int(1), rat(1, 2));
        assert_eq!(r, Piece::seg(int(0), rat(1, 2), int(1), rat(1, 2)));
        let q = Piece::rect(rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 3));
        assert_eq!(q, Piece::point(rat(1, 3), rat(1, 3)));
    }

    #[test]
    fn crossing_diagonals_meet_at_center() {
        let d = Piece::segment(p((0, 1), (0, 1)), p((1, 1), (1, 1)));
        let a = Piece::segment(p((0, 1), (1, 1)), p((1, 1), (0, 1)));
        assert_eq!(d.intersect(&a), Some(Piece::point(rat(1, 2), rat(1, 2))));
    }

    #[test]
    fn collinear_overlap() {
        let s = Piece::segment(p((0, 1), (0, 1)), p((1, 2), (1, 2)));
        let t = Piece::segment(p((1, 4), (1, 4)), p((1, 1), (1, 1)));
        assert_eq!(s.intersect(&t), Some(Piece::segment(p((1, 4), (1, 4)), p((1, 2), (1, 2)))));
        let u = Piece::segment(p((0, 1), (1, 4)), p((1, 1), (5, 4)));
        assert_eq!(s.intersect(&u), None);
    }

    #[test]
    fn clip_slanted_segment() {
        let tent_left = Piece::segment(p((0, 1), (0, 1)), p((1, 2), (1, 1)));
        let c = tent_left.clip(Some(&Interval::new(rat(1, 8), int(1))), Some(&Interval::new(int(0), rat(1, 2))));
        assert_eq!(c, Some(Piece::segment(p((1, 8), (1, 4)), p((1, 4), (1, 2)))));
        assert_eq!(tent_left.slice(&rat(1, 4)), Some(Interval::point(rat(1, 2))));
        assert_eq!(tent_left.slice(&rat(3, 4)), None);
    }

    #[test]
    fn transpose_swaps_coordinates() {
        let h = Piece::seg(int(0), int(0), int(1), int(0));
        assert_eq!(h.transpose(), Piece::seg(int(0), int(0), int(0), int(1)));
        let r = Piece::rect(int(0), rat(1, 2), rat(1, 4), int(1));
        assert_eq!(r.transpose(), Piece::rect(rat(1, 2), int(0), int(1), rat(1, 4)));
    }

    #[test]
    fn contains_points_on_slanted_segment() {
        let s = Piece::segment(p((1, 2), (0, 1)), p((1, 1), (1, 1)));
        assert!(s.contains(&p((3, 4), (1, 2))));
        assert!(!s.contains(&p((3, 4), (1, 3))));
        assert!(!s.contains(&p((1, 4), (-1, 2))));
    }
}
