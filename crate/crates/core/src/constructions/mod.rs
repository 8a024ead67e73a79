//! The named example corpus and the desingularization construction.

pub mod corpus;
pub mod desingularize;

pub use corpus::{corpus, UnknownName, NAMES};
pub use desingularize::{desingularize, desingularize_with_plan, DesingularizationPlan, DesingularizeError};
