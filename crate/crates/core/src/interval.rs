//! Closed rational intervals and finite unions of them.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::rational::{midpoint, one, to_pq, zero, Rational};

/// Closed interval `[lo, hi]` with `lo <= hi`. Degenerate intervals are points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    /// Orders the endpoints.
    pub fn new(a: Rational, b: Rational) -> Self {
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn unit() -> Self {
        Interval { lo: zero(), hi: one() }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        (lo <= hi).then(|| Interval { lo: lo.clone(), hi: hi.clone() })
    }

    pub fn mid(&self) -> Rational {
        midpoint(&self.lo, &self.hi)
    }

    pub fn len(&self) -> Rational {
        &self.hi - &self.lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// A finite union of pairwise disjoint closed intervals, sorted, with touching
/// intervals merged. Each stored interval is a connected component.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    pub fn unit() -> Self {
        Self::from_interval(Interval::unit())
    }

    pub fn point(x: Rational) -> Self {
        Self::from_interval(Interval::point(x))
    }

    pub fn from_interval(iv: Interval) -> Self {
        IntervalSet { parts: vec![iv] }
    }

    pub fn closed(a: Rational, b: Rational) -> Self {
        Self::from_interval(Interval::new(a, b))
    }

    pub fn from_intervals<I: IntoIterator<Item = Interval>>(items: I) -> Self {
        let mut v: Vec<Interval> = items.into_iter().collect();
        v.sort();
        let mut parts: Vec<Interval> = Vec::with_capacity(v.len());
        for iv in v {
            match parts.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => parts.push(iv),
            }
        }
        IntervalSet { parts }
    }

    pub fn components(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Exactly one component.
    pub fn is_connected(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_single_point(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].is_point()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.parts.first().map(|iv| &iv.lo)
    }

    pub fn max(&self) -> Option<&Rational> {
        self.parts.last().map(|iv| &iv.hi)
    }

    pub fn hull(&self) -> Option<Interval> {
        Some(Interval { lo: self.min()?.clone(), hi: self.max()?.clone() })
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.component_of(x).is_some()
    }

    pub fn component_of(&self, x: &Rational) -> Option<&Interval> {
        let idx = self.parts.partition_point(|iv| iv.hi < *x);
        self.parts.get(idx).filter(|iv| iv.contains(x))
    }

    pub fn contains_interval(&self, iv: &Interval) -> bool {
        self.component_of(&iv.lo).is_some_and(|c| c.contains(&iv.hi))
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.parts.iter().all(|iv| other.contains_interval(iv))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        Self::from_intervals(self.parts.iter().chain(other.parts.iter()).cloned())
    }

    pub fn insert(&mut self, iv: Interval) {
        let mut v = std::mem::take(&mut self.parts);
        v.push(iv);
        *self = Self::from_intervals(v);
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            let (a, b) = (&self.parts[i], &other.parts[j]);
            if let Some(c) = a.intersect(b) {
                out.push(c);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { parts: out }
    }

    pub fn intersect_interval(&self, iv: &Interval) -> IntervalSet {
        self.intersection(&Self::from_interval(iv.clone()))
    }

    pub fn intersects(&self, other: &IntervalSet) -> bool {
        !self.intersection(other).is_empty()
    }

    /// Some point of `self` that is not in `other`, if one exists.
    pub fn point_outside(&self, other: &IntervalSet) -> Option<Rational> {
        for iv in &self.parts {
            for c in [&iv.lo, &iv.hi] {
                if !other.contains(c) {
                    return Some(c.clone());
                }
            }
            // Both endpoints covered; look for a gap of `other` strictly inside.
            for w in other.parts.windows(2) {
                let gap_lo = &w[0].hi;
                let gap_hi = &w[1].lo;
                if *gap_lo >= iv.lo && *gap_hi <= iv.hi {
                    return Some(midpoint(gap_lo, gap_hi));
                }
            }
        }
        None
    }

    /// Some point of `self` strictly inside `(lo, hi)`.
    pub fn point_in_open(&self, lo: &Rational, hi: &Rational) -> Option<Rational> {
        for iv in &self.parts {
            let a = if iv.lo > *lo { iv.lo.clone() } else { lo.clone() };
            let b = if iv.hi < *hi { iv.hi.clone() } else { hi.clone() };
            if a < b {
                return Some(midpoint(&a, &b));
            }
            if a == b && a > *lo && a < *hi {
                return Some(a);
            }
        }
        None
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        for (i, iv) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<[String; 2]> =
            self.parts.iter().map(|iv| [to_pq(&iv.lo), to_pq(&iv.hi)]).collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn touching_intervals_merge() {
        let s = IntervalSet::from_intervals([iv((0, 1), (1, 2)), iv((1, 2), (1, 1))]);
        assert_eq!(s, IntervalSet::unit());
        let t = IntervalSet::from_intervals([iv((0, 1), (1, 4)), iv((1, 2), (1, 1))]);
        assert_eq!(t.components().len(), 2);
        assert!(!t.is_connected());
    }

    #[test]
    fn intersection_and_subset() {
        let a = IntervalSet::from_intervals([iv((0, 1), (1, 4)), iv((1, 2), (3, 4))]);
        let b = IntervalSet::closed(rat(1, 8), rat(5, 8));
        let c = a.intersection(&b);
        assert_eq!(c, IntervalSet::from_intervals([iv((1, 8), (1, 4)), iv((1, 2), (5, 8))]));
        assert!(c.is_subset(&a));
        assert!(!a.is_subset(&c));
    }

    #[test]
    fn point_outside_finds_gap() {
        let a = IntervalSet::unit();
        let b = IntervalSet::from_intervals([iv((0, 1), (1, 4)), iv((1, 2), (1, 1))]);
        assert_eq!(a.point_outside(&b), Some(rat(3, 8)));
        assert_eq!(b.point_outside(&a), None);
    }

    #[test]
    fn point_in_open_interval() {
        let s = IntervalSet::from_intervals([Interval::point(rat(0, 1)), Interval::point(rat(1, 1))]);
        assert_eq!(s.point_in_open(&zero(), &one()), None);
        let t = IntervalSet::unit();
        assert_eq!(t.point_in_open(&zero(), &one()), Some(rat(1, 2)));
        let u = IntervalSet::point(rat(1, 2));
        assert_eq!(u.point_in_open(&zero(), &one()), Some(rat(1, 2)));
    }
}
