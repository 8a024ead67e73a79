//! Iterated images and interval towers over backward trajectories.

use crate::dynamics::DynamicsError;
use crate::interval::{Interval, IntervalSet};
use crate::piece::Point;
use crate::rational::Rational;
use crate::relation::PLRelation;

/// `f^n[I]`, by `n` successive images.
pub fn iterate_image(r: &PLRelation, set: &IntervalSet, n: usize) -> IntervalSet {
    (0..n).fold(set.clone(), |acc, _| r.image(&acc))
}

/// Levels `J_0, …, J_N` built from two backward trajectories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalTower {
    pub depth: usize,
    pub levels: Vec<IntervalSet>,
    /// `nested[k]` is `f[J_{k+1}] ⊇ J_k`.
    pub nested: Vec<bool>,
    pub reaches_unit: bool,
}

fn check_trajectory(
    r: &PLRelation,
    which: &'static str,
    traj: &[Rational],
) -> Result<(), DynamicsError> {
    for i in 0..traj.len().saturating_sub(1) {
        if !r.contains(&Point::new(traj[i + 1].clone(), traj[i].clone())) {
            return Err(DynamicsError::Trajectory {
                which,
                index: i,
                value: traj[i].clone(),
                next: traj[i + 1].clone(),
            });
        }
    }
    Ok(())
}

/// `J_k = ⋃_{k ≤ n ≤ N} f^{n-k}[conv(x_n, y_n)]`.
///
/// Both trajectories run backward: `x_i ∈ f(x_{i+1})` for `i < N`.
pub fn j_tower(
    r: &PLRelation,
    xtraj: &[Rational],
    ytraj: &[Rational],
    depth: usize,
) -> Result<IntervalTower, DynamicsError> {
    for t in [xtraj, ytraj] {
        if t.len() != depth + 1 {
            return Err(DynamicsError::TrajectoryLength { expected: depth + 1, got: t.len() });
        }
    }
    check_trajectory(r, "x", xtraj)?;
    check_trajectory(r, "y", ytraj)?;

    // Walking k downward, J_k = conv(x_k, y_k) ∪ f[J_{k+1}].
    let mut levels = vec![IntervalSet::empty(); depth + 1];
    let mut above = IntervalSet::empty();
    for k in (0..=depth).rev() {
        let hull = IntervalSet::from_interval(Interval::new(xtraj[k].clone(), ytraj[k].clone()));
        let level = hull.union(&r.image(&above));
        above = level.clone();
        levels[k] = level;
    }
    let nested = (0..depth).map(|k| levels[k].is_subset(&r.image(&levels[k + 1]))).collect();
    let reaches_unit = levels[0] == IntervalSet::unit();
    Ok(IntervalTower { depth, levels, nested, reaches_unit })
}
