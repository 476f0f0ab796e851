//! Solver selection, instance generation, corpus verification and benchmarking.

mod dispatch;
mod generate;
mod verify;

pub use dispatch::{dispatch, run_solver, DispatchPolicy, SolverId, SolverKind};
pub use generate::{generate, generate_with, GeneratorConfig};
pub use verify::{bench, compare, corpus_files, verify, verify_instance, BenchRow, Outcome, VerifyEntry, VerifyReport};
