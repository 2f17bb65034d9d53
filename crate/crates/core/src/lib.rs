//! Exact-arithmetic Minkowskian branching structures.
//!
//! Scenarios are complete copies of Minkowski space-time `R^d`. Two scenarios
//! are glued together wherever a point is not strictly above any of their
//! splitting points; the quotient of `scenarios x R^d` under that gluing,
//! ordered by the induced causal order, is a branching space-time model.
//!
//! Every predicate is decided with exact rationals ([`Rational`]), so
//! lightlike boundary cases are never misclassified.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line driver live in the companion `mbs-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod rational;

pub mod counterexample;
pub mod histories;
pub mod minkowski;
pub mod model;
pub mod oracle;
pub mod quotient;
pub mod sampling;

pub use error::{Error, Result};
pub use rational::{ceil_sqrt, rational, Rational};

pub use counterexample::{BinaryRowModel, ZeroSetScenario};
pub use histories::{ChainSample, History};
pub use minkowski::{CausalRelation, Point};
pub use model::{Branching, FamilyEntry, ModelSpec, ScenarioId, SplittingFamily};
pub use quotient::{EventClass, LabeledPoint};
