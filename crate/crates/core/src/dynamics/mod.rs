//! Set-valued dynamics: iterated images, exact-period cycles, the Sarkovskii
//! order, interval towers over backward trajectories, and a sufficient
//! condition for organicity.

pub mod cycles;
pub mod organic;
pub mod sarkovskii;
pub mod tower;

use thiserror::Error;

use crate::rational::Rational;

pub use cycles::{find_cycles, Cycle, CycleError, CycleSearch, DEFAULT_CYCLE_BUDGET};
pub use organic::{organic_sufficient, Organic};
pub use sarkovskii::{sarkovskii_precedes, verify_sarkovskii_span, SpanOutcome, SpanReport};
pub use tower::{iterate_image, j_tower, IntervalTower};

/// Precondition failures of the dynamics operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error("relation does not have the intermediate value property")]
    NotIvp,
    #[error("relation is not surjective")]
    NotSurjective,
    #[error("relation is not defined on all of [0,1]")]
    PartialDomain,
    #[error("no cycle of period {0} found")]
    NoCycle(usize),
    #[error("{which} trajectory breaks at index {index}: {value} is not in f({next})")]
    Trajectory { which: &'static str, index: usize, value: Rational, next: Rational },
    #[error("trajectories must both have length {expected}, got {got}")]
    TrajectoryLength { expected: usize, got: usize },
}
