//! Independent checks used by the test suites: classification of normal
//! forms, an IPC decision procedure with Kripke countermodels, and random
//! generation of well-typed terms.

mod classify;
mod generate;
mod kripke;
mod prover;

pub use classify::{classify, ClassReport, ClassifyError, NeutralHead};
pub use generate::{generate_typed, shrink, ContextShape, GenConfig, GenError, Generator, GoalShape, Sample};
pub use kripke::{find_countermodel, KripkeModel};
pub use prover::{ipc_provable, ipc_provable_with, prove, OracleError, ProverConfig, Verdict};

#[cfg(test)]
mod tests;
