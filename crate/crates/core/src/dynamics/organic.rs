//! A sufficient condition for organicity: interior points `p`, `q` with
//! `0 ∈ f^r(p)` and `1 ∈ f^s(q)`.

use crate::dynamics::DynamicsError;
use crate::interval::IntervalSet;
use crate::properties::ivp_by_criterion;
use crate::rational::{one, zero, Rational};
use crate::relation::PLRelation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Organic {
    Sufficient { p: Rational, r: usize, q: Rational, s: usize },
    /// The condition was not met within the depth bound. This says nothing
    /// about organicity itself.
    Unknown,
}

/// Least `k ≤ max_depth` and a point of `f^{-k}(target)` inside `(0,1)`.
fn interior_preimage(rel: &PLRelation, target: Rational, max_depth: usize) -> Option<(Rational, usize)> {
    let mut level = IntervalSet::point(target);
    for k in 0..=max_depth {
        if let Some(p) = level.point_in_open(&zero(), &one()) {
            return Some((p, k));
        }
        let next = rel.preimage(&level);
        if next == level {
            return None;
        }
        level = next;
    }
    None
}

pub fn organic_sufficient(rel: &PLRelation, max_depth: usize) -> Result<Organic, DynamicsError> {
    if !rel.domain_is_full() {
        return Err(DynamicsError::PartialDomain);
    }
    if !ivp_by_criterion(rel) {
        return Err(DynamicsError::NotIvp);
    }
    if !rel.is_surjective() {
        return Err(DynamicsError::NotSurjective);
    }
    let found = interior_preimage(rel, zero(), max_depth)
        .zip(interior_preimage(rel, one(), max_depth));
    Ok(match found {
        Some(((p, r), (q, s))) => Organic::Sufficient { p, r, q, s },
        None => Organic::Unknown,
    })
}
