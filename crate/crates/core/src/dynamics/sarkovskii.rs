//! The Sarkovskii order and a finite check of period forcing.

use crate::dynamics::cycles::{find_cycles, Cycle};
use crate::dynamics::DynamicsError;
use crate::properties::ivp_by_criterion;
use crate::relation::PLRelation;

/// Sort key: odd parts above one come first by power of two then odd part;
/// pure powers of two come last, descending.
fn key(m: u64) -> (u8, i64, u64) {
    assert!(m >= 1, "the order is defined on positive integers");
    let a = m.trailing_zeros() as i64;
    let odd = m >> a;
    if odd > 1 {
        (0, a, odd)
    } else {
        (1, -a, 1)
    }
}

/// `m ≺ n`: `3 ≺ 5 ≺ 7 ≺ … ≺ 2·3 ≺ 2·5 ≺ … ≺ 4 ≺ 2 ≺ 1`.
pub fn sarkovskii_precedes(m: u64, n: u64) -> bool {
    key(m) < key(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanOutcome {
    Found(Cycle),
    NotFoundWithinBudget,
    /// The search finished without a cycle of a forced period.
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub period: usize,
    pub witness: Cycle,
    pub entries: Vec<(usize, SpanOutcome)>,
}

impl SpanReport {
    pub fn has_violation(&self) -> bool {
        self.entries.iter().any(|(_, o)| *o == SpanOutcome::Violation)
    }

    pub fn all_found(&self) -> bool {
        self.entries.iter().all(|(_, o)| matches!(o, SpanOutcome::Found(_)))
    }
}

/// For each `m ≤ max_m` with `n ≺ m`, searches for a cycle of period `m`.
pub fn verify_sarkovskii_span(
    r: &PLRelation,
    n: usize,
    max_m: usize,
    budget: usize,
) -> Result<SpanReport, DynamicsError> {
    if !r.domain_is_full() {
        return Err(DynamicsError::PartialDomain);
    }
    if !ivp_by_criterion(r) {
        return Err(DynamicsError::NotIvp);
    }
    let base = find_cycles(r, n, budget);
    let witness = base.cycles.into_iter().next().ok_or(DynamicsError::NoCycle(n))?;
    let entries = (1..=max_m)
        .filter(|&m| sarkovskii_precedes(n as u64, m as u64))
        .map(|m| {
            let search = find_cycles(r, m, budget);
            let outcome = match search.cycles.into_iter().next() {
                Some(c) => SpanOutcome::Found(c),
                None if search.complete => SpanOutcome::Violation,
                None => SpanOutcome::NotFoundWithinBudget,
            };
            (m, outcome)
        })
        .collect();
    Ok(SpanReport { period: n, witness, entries })
}
