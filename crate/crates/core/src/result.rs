//! Solver outputs.

use std::fmt;

use crate::election::{score, Committee, Instance};
use crate::rational::Rational;

/// Search statistics. Counters a solver does not use stay zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Branch nodes visited (branching solvers) or decomposition nodes processed (DPs).
    pub nodes: u64,
    /// Table entries or memo states created.
    pub entries: u64,
    pub max_entries_per_node: u64,
    /// Largest branching factor seen at any node.
    pub max_branch: u64,
    /// Independent subinstances solved.
    pub subinstances: u64,
}

impl Stats {
    pub fn absorb(&mut self, other: &Stats) {
        self.nodes += other.nodes;
        self.entries += other.entries;
        self.subinstances += other.subinstances;
        self.max_entries_per_node = self.max_entries_per_node.max(other.max_entries_per_node);
        self.max_branch = self.max_branch.max(other.max_branch);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: bool,
    /// The optimal score, for solvers that compute one.
    pub opt_score: Option<Rational>,
    /// Present whenever `decision` is true.
    pub witness: Option<Committee>,
    pub algorithm: String,
    pub stats: Stats,
}

impl SolveResult {
    pub fn yes(algorithm: &str, witness: Committee) -> Self {
        SolveResult {
            decision: true,
            opt_score: None,
            witness: Some(witness),
            algorithm: algorithm.to_string(),
            stats: Stats::default(),
        }
    }

    pub fn no(algorithm: &str) -> Self {
        SolveResult {
            decision: false,
            opt_score: None,
            witness: None,
            algorithm: algorithm.to_string(),
            stats: Stats::default(),
        }
    }

    /// Result for a solver that found an optimal committee `best` with score `opt`.
    pub fn from_optimum(inst: &Instance, algorithm: &str, opt: Rational, best: Committee) -> Self {
        let decision = inst.meets(opt);
        SolveResult {
            decision,
            opt_score: Some(opt),
            witness: decision.then_some(best),
            algorithm: algorithm.to_string(),
            stats: Stats::default(),
        }
    }

    /// Result for a heuristic-free constructive solver: decide by scoring `w`.
    pub fn from_committee(inst: &Instance, algorithm: &str, w: Committee) -> Self {
        let s = score(&inst.election, inst.rule, &w);
        if inst.meets(s) {
            SolveResult::yes(algorithm, w)
        } else {
            SolveResult::no(algorithm)
        }
    }

    pub fn with_stats(mut self, stats: Stats) -> Self {
        self.stats = stats;
        self
    }

    pub fn with_opt(mut self, opt: Rational) -> Self {
        self.opt_score = Some(opt);
        self
    }

    /// Checks the result invariant: a yes carries a `k`-committee meeting the threshold.
    pub fn is_consistent(&self, inst: &Instance) -> bool {
        match (&self.witness, self.decision) {
            (Some(w), true) => {
                w.len() == inst.k
                    && w.members().iter().all(|&c| c < inst.election.m())
                    && inst.meets(score(&inst.election, inst.rule, w))
            }
            (None, false) => true,
            _ => false,
        }
    }
}

impl fmt::Display for SolveResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.decision { "yes" } else { "no" })?;
        if let Some(s) = self.opt_score {
            write!(f, " opt={s}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        write!(f, " algo={}", self.algorithm)
    }
}
