//! Exact computation with piecewise-linear upper semicontinuous set-valued
//! maps of `[0, 1]`.
//!
//! The graph of a map is a [`PLRelation`]: a canonical union of points,
//! segments and axis-aligned rectangles with rational coordinates. On top of
//! that representation the crate decides the intermediate value property and
//! its relatives ([`properties`]), computes set-valued dynamics
//! ([`dynamics`]), builds finite truncations of generalized inverse limits
//! ([`mahavier`]), and runs the light, almost nonfissile desingularization of
//! graphs with interior ([`constructions`]).
//!
//! No floating point is used outside of plot emission.

// Errors carry exact rational witnesses, which makes them large.
#![allow(clippy::result_large_err)]

pub mod chain;
pub mod cli;
pub mod constructions;
pub mod dynamics;
pub mod format;
pub mod interval;
pub mod mahavier;
pub mod piece;
pub mod plot;
pub mod properties;
pub mod rational;
pub mod relation;
pub mod report;
pub mod weak_ivp;

pub use interval::{Interval, IntervalSet};
pub use piece::{Piece, Point};
pub use rational::Rational;
pub use properties::{classify, PropertyReport};
pub use relation::{normalize, PLRelation, RelationError};
