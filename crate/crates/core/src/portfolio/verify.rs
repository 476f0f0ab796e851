use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use super::dispatch::{dispatch, run_solver, DispatchPolicy, SolverId};
use crate::election::{Instance, Rule};
use crate::error::{Error, Result};
use crate::format::{read_file, write_instance};
use crate::oracle::brute_force_with_limit;
use crate::params::{compute_params, Params};
use crate::result::SolveResult;

/// Describes how `got` departs from the oracle answer `truth`, if at all:
/// a different decision, a different optimum, or an invalid witness.
pub fn compare(inst: &Instance, truth: &SolveResult, got: &SolveResult) -> Option<String> {
    if got.decision != truth.decision {
        return Some(format!("{} answers {} but the oracle answers {}", got.algorithm, got.decision, truth.decision));
    }
    if let (Some(a), Some(b)) = (got.opt_score, truth.opt_score) {
        if a != b {
            return Some(format!("{} reports optimum {a} but the oracle finds {b}", got.algorithm));
        }
    }
    if !got.is_consistent(inst) {
        return Some(format!("{} returned an invalid witness", got.algorithm));
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Every listed solver agreed with the oracle.
    Agreed {
        solvers: Vec<String>,
    },
    Disagreed {
        messages: Vec<String>,
        dump: String,
    },
    /// The oracle could not run within the budget.
    Skipped(String),
    ParseError(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyEntry {
    pub id: String,
    pub outcome: Outcome,
}

/// Per-file verification results, sorted by file name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn disagreements(&self) -> usize {
        self.entries.iter().filter(|e| matches!(e.outcome, Outcome::Disagreed { .. })).count()
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.outcome {
                Outcome::Agreed { solvers } => writeln!(f, "{}: ok ({})", e.id, solvers.join(", "))?,
                Outcome::Skipped(why) => writeln!(f, "{}: skipped: {why}", e.id)?,
                Outcome::ParseError(why) => writeln!(f, "{}: parse error: {why}", e.id)?,
                Outcome::Disagreed { messages, dump } => {
                    writeln!(f, "{}: DISAGREEMENT", e.id)?;
                    for m in messages {
                        writeln!(f, "  {m}")?;
                    }
                    for line in dump.lines() {
                        writeln!(f, "  | {line}")?;
                    }
                }
            }
        }
        writeln!(f, "{} instances, {} disagreements", self.entries.len(), self.disagreements())
    }
}

/// The `.appr` files of `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "appr") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn file_id(path: &Path) -> String {
    path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Runs every applicable solver and [`dispatch`] against the oracle.
/// `budget` is the oracle's candidate limit.
pub fn verify_instance(inst: &Instance, budget: usize, policy: &DispatchPolicy) -> Outcome {
    let truth = match brute_force_with_limit(inst, budget) {
        Ok(t) => t,
        Err(e) => return Outcome::Skipped(e.to_string()),
    };
    let p = compute_params(inst);
    let mut solvers = Vec::new();
    let mut messages = Vec::new();
    let mut check = |name: String, r: Result<SolveResult>| match r {
        Ok(got) => match compare(inst, &truth, &got) {
            Some(msg) => messages.push(msg),
            None => solvers.push(name),
        },
        Err(Error::BudgetExceeded(_)) => {}
        Err(e) => messages.push(format!("{name} failed: {e}")),
    };
    for id in SolverId::ALL {
        if id != SolverId::Brute && id.applies(inst, &p) && id.cost(inst, &p) <= policy.max_cost {
            check(id.name().to_string(), run_solver(id, inst));
        }
    }
    check("dispatch".to_string(), dispatch(inst, policy));
    if messages.is_empty() {
        Outcome::Agreed { solvers }
    } else {
        Outcome::Disagreed { messages, dump: write_instance(inst) }
    }
}

/// Verifies every `.appr` file in `dir` in parallel.
pub fn verify(dir: &Path, budget: usize) -> Result<VerifyReport> {
    let policy = DispatchPolicy::default();
    let files = corpus_files(dir)?;
    let mut entries: Vec<VerifyEntry> = files
        .par_iter()
        .map(|path| {
            let outcome = match read_file(path).and_then(|f| f.into_instance()) {
                Ok(inst) => verify_instance(&inst, budget, &policy),
                Err(e) => Outcome::ParseError(e.to_string()),
            };
            VerifyEntry { id: file_id(path), outcome }
        })
        .collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(VerifyReport { entries })
}

/// One solver run on one corpus instance.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub id: String,
    pub rule: Rule,
    pub params: Params,
    pub solver: String,
    /// `yes`, `no`, or the error message.
    pub outcome: String,
    pub nodes: u64,
    pub entries: u64,
    pub micros: u128,
}

impl BenchRow {
    pub const HEADER: [&'static str; 15] = [
        "id", "rule", "m", "n", "k", "kbar", "delta_v", "delta_c", "tw_upper", "alpha", "solver", "outcome", "nodes",
        "entries", "micros",
    ];

    /// Fields in [`BenchRow::HEADER`] order.
    pub fn record(&self) -> Vec<String> {
        let p = &self.params;
        let mut out = vec![self.id.clone(), self.rule.to_string()];
        out.extend([p.m, p.n, p.k, p.kbar, p.delta_v, p.delta_c, p.tw_upper, p.alpha].map(|x| x.to_string()));
        out.extend([self.solver.clone(), self.outcome.clone(), self.nodes.to_string(), self.entries.to_string()]);
        out.push(self.micros.to_string());
        out
    }
}

/// Times every applicable solver within `policy.max_cost`, plus dispatch,
/// on every `.appr` file in `dir`. Files that fail to parse are skipped.
pub fn bench(dir: &Path, policy: &DispatchPolicy) -> Result<Vec<BenchRow>> {
    let files = corpus_files(dir)?;
    let mut rows: Vec<BenchRow> = files
        .par_iter()
        .filter_map(|path| {
            let inst = read_file(path).and_then(|f| f.into_instance()).ok()?;
            Some(bench_instance(&file_id(path), &inst, policy))
        })
        .flatten()
        .collect();
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(rows)
}

type Run<'a> = Box<dyn Fn() -> Result<SolveResult> + 'a>;

fn bench_instance(id: &str, inst: &Instance, policy: &DispatchPolicy) -> Vec<BenchRow> {
    let p = compute_params(inst);
    let mut runs: Vec<(String, Run<'_>)> = Vec::new();
    for sid in SolverId::ALL {
        if sid.applies(inst, &p) && (sid == SolverId::Brute || sid.cost(inst, &p) <= policy.max_cost) {
            runs.push((sid.name().to_string(), Box::new(move || run_solver(sid, inst))));
        }
    }
    runs.push(("dispatch".to_string(), Box::new(|| dispatch(inst, policy))));
    runs.into_iter()
        .map(|(solver, run)| {
            let start = Instant::now();
            let r = run();
            let micros = start.elapsed().as_micros();
            let (outcome, nodes, entries) = match r {
                Ok(r) => ((if r.decision { "yes" } else { "no" }).to_string(), r.stats.nodes, r.stats.entries),
                Err(e) => (e.to_string(), 0, 0),
            };
            BenchRow { id: id.to_string(), rule: inst.rule, params: p, solver, outcome, nodes, entries, micros }
        })
        .collect()
}
