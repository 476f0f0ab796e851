//! Exact winner determination for approval-based committee rules.
//!
//! Supports minimax approval voting ([`Rule::Mav`]), Chamberlin–Courant
//! approval voting ([`Rule::Ccav`]) and proportional approval voting
//! ([`Rule::Pav`]). Every solver answers the same question: given an
//! election, a committee size `k` and a threshold `d`, is there a
//! `k`-committee whose score is at most `d` (MAV) or at least `d` (CCAV, PAV)?
//!
//! [`portfolio::dispatch`] picks a solver from the instance's structure.
//! [`oracle::brute_force`] enumerates every committee and is the reference
//! all other solvers are tested against.

pub mod classes;
pub mod election;
pub mod error;
pub mod format;
pub mod fpt;
pub mod graph;
pub mod oracle;
pub mod params;
pub mod poly;
pub mod portfolio;
pub mod rational;
pub mod reductions;
pub mod result;
pub mod treewidth;

pub use classes::{class_partition, CandidateClass, ClassPartition};
pub use election::{hamming, score, Committee, Election, Instance, Rule};
pub use error::{Error, Result};
pub use params::{compute_params, Params};
pub use rational::{HarmonicScale, Rational};
pub use result::{SolveResult, Stats};
