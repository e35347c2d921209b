//! Multiobjective ranking and selection driven by stochastic kriging.
//!
//! Given a finite candidate set whose objective outcomes can only be observed
//! through noisy replications, the allocators in this crate decide where to
//! spend additional replications so that the identified Pareto set converges
//! to the true one. The SK-MORS allocator fits one stochastic-kriging
//! metamodel per objective and samples designs on the Pareto front of two
//! criteria: the expected hypervolume difference between sample means and
//! predictions, and the uncertainty-inflated posterior distance between them.
//! EQUAL and MOCBA baselines, the WFG3/WFG4/DTLZ7 test instances and an
//! experiment harness with macroreplication reporting are included.
//!
//! Objectives are always minimized.

pub mod allocators;
pub mod criteria;
pub mod dominance;
mod error;
pub mod exec;
pub mod harness;
pub mod hypervolume;
pub mod kriging;
pub mod metrics;
pub mod problems;
pub mod samples;
pub mod screening;

pub use error::{Error, Result};
