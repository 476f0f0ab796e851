use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::election::{Instance, Rule};
use crate::error::{precondition, Error, Result};
use crate::fpt::{
    ccav_bb_dual, mav_by_classes, mav_by_matching, mav_dual_grsp, mav_k_deltaC, pav_bb_dv, pav_by_matching,
    ANNOTATED_VOTE_LIMIT, CLASS_VOTE_LIMIT,
};
use crate::graph::DecompositionMode;
use crate::oracle::{brute_force_with_limit, DEFAULT_CANDIDATE_LIMIT};
use crate::params::{compute_params, Params};
use crate::poly::{av_solve, ccav_deg2, mav_deg2, pav_deg1, pav_deg22};
use crate::result::SolveResult;
use crate::treewidth::{ccav_tw_dp, incidence_decomposition, mav_tw_dp, pav_tw_dp};

/// Every solver the portfolio can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverId {
    Av,
    MavDeg2,
    CcavDeg2,
    PavDeg1,
    PavDeg22,
    MavClasses,
    MavKDeltaC,
    MavGrsp,
    Matching,
    CcavBb,
    PavBb,
    CcavTw,
    PavTw,
    MavTw,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverKind {
    Poly,
    Fpt,
    Oracle,
}

impl SolverId {
    pub const ALL: [SolverId; 15] = [
        SolverId::Av,
        SolverId::MavDeg2,
        SolverId::CcavDeg2,
        SolverId::PavDeg1,
        SolverId::PavDeg22,
        SolverId::MavClasses,
        SolverId::MavKDeltaC,
        SolverId::MavGrsp,
        SolverId::Matching,
        SolverId::CcavBb,
        SolverId::PavBb,
        SolverId::CcavTw,
        SolverId::PavTw,
        SolverId::MavTw,
        SolverId::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverId::Av => "av",
            SolverId::MavDeg2 => "mav-deg2",
            SolverId::CcavDeg2 => "ccav-deg2",
            SolverId::PavDeg1 => "pav-deg1",
            SolverId::PavDeg22 => "pav-deg22",
            SolverId::MavClasses => "mav-classes",
            SolverId::MavKDeltaC => "mav-k-delta-c",
            SolverId::MavGrsp => "mav-grsp",
            SolverId::Matching => "matching",
            SolverId::CcavBb => "ccav-bb",
            SolverId::PavBb => "pav-bb",
            SolverId::CcavTw => "ccav-tw",
            SolverId::PavTw => "pav-tw",
            SolverId::MavTw => "mav-tw",
            SolverId::Brute => "brute",
        }
    }

    pub fn kind(self) -> SolverKind {
        match self {
            SolverId::Av | SolverId::MavDeg2 | SolverId::CcavDeg2 | SolverId::PavDeg1 | SolverId::PavDeg22 => {
                SolverKind::Poly
            }
            SolverId::Brute => SolverKind::Oracle,
            _ => SolverKind::Fpt,
        }
    }

    /// Whether the solver accepts the instance at all.
    pub fn applies(self, inst: &Instance, p: &Params) -> bool {
        let rule = inst.rule;
        match self {
            SolverId::Av => p.delta_v <= 1,
            SolverId::MavDeg2 => rule == Rule::Mav && p.delta_c <= 2,
            SolverId::CcavDeg2 => rule == Rule::Ccav && p.delta_c <= 2,
            SolverId::PavDeg1 => rule == Rule::Pav && p.delta_c <= 1,
            SolverId::PavDeg22 => rule == Rule::Pav && p.delta_v <= 2 && p.delta_c <= 2,
            SolverId::MavClasses => rule == Rule::Mav && p.n <= CLASS_VOTE_LIMIT,
            SolverId::MavKDeltaC => rule == Rule::Mav && p.n.min(p.k * p.delta_c + 1) <= CLASS_VOTE_LIMIT,
            SolverId::MavGrsp => rule == Rule::Mav,
            SolverId::Matching => match rule {
                Rule::Mav => p.alpha <= CLASS_VOTE_LIMIT,
                Rule::Pav => p.alpha <= ANNOTATED_VOTE_LIMIT,
                Rule::Ccav => false,
            },
            SolverId::CcavBb | SolverId::CcavTw => rule == Rule::Ccav,
            SolverId::PavBb | SolverId::PavTw => rule == Rule::Pav,
            SolverId::MavTw => rule == Rule::Mav,
            SolverId::Brute => true,
        }
    }

    /// Rough operation count, used only to rank solvers.
    pub fn cost(self, inst: &Instance, p: &Params) -> f64 {
        let size = (p.m + p.n + 1) as f64;
        let w1 = (p.tw_upper + 1) as i32;
        let k1 = (p.k + 1) as f64;
        match self.kind() {
            SolverKind::Poly => size * size,
            _ => match self {
                SolverId::MavClasses => 2f64.powi(p.n as i32) * size,
                SolverId::MavKDeltaC => 2f64.powi(p.n.min(p.k * p.delta_c + 1) as i32) * size,
                SolverId::MavGrsp => binomial(p.m, p.kbar) * size,
                SolverId::Matching => 4f64.powi(p.alpha as i32) * size,
                SolverId::CcavBb => ((p.delta_c * p.kbar).max(1) as f64).powi(p.kbar as i32) * size,
                SolverId::PavBb => {
                    let t = (inst.d * crate::Rational::from(p.delta_v)).ceil().max(1) as f64;
                    t.powf(t.min(p.k as f64)) * size
                }
                SolverId::CcavTw => 4f64.powi(w1) * k1 * k1 * size,
                SolverId::PavTw | SolverId::MavTw => k1.powi(2 * w1) * 2f64.powi(w1) * k1 * k1 * size,
                _ => binomial(p.m, p.k) * size,
            },
        }
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

impl fmt::Display for SolverId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SolverId::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| format!("unknown solver {s:?}"))
    }
}

/// Runs one solver. Tree-decomposition solvers use the heuristic
/// decomposition of the incidence graph.
pub fn run_solver(id: SolverId, inst: &Instance) -> Result<SolveResult> {
    let tw = || incidence_decomposition(&inst.election, DecompositionMode::Heuristic);
    match id {
        SolverId::Av => av_solve(inst),
        SolverId::MavDeg2 => mav_deg2(inst),
        SolverId::CcavDeg2 => ccav_deg2(inst),
        SolverId::PavDeg1 => pav_deg1(inst),
        SolverId::PavDeg22 => pav_deg22(inst),
        SolverId::MavClasses => mav_by_classes(inst, None),
        SolverId::MavKDeltaC => mav_k_deltaC(inst),
        SolverId::MavGrsp => mav_dual_grsp(inst),
        SolverId::Matching => match inst.rule {
            Rule::Mav => mav_by_matching(inst),
            Rule::Pav => pav_by_matching(inst),
            Rule::Ccav => Err(precondition("no matching solver for ccav")),
        },
        SolverId::CcavBb => ccav_bb_dual(inst),
        SolverId::PavBb => pav_bb_dv(inst),
        SolverId::CcavTw => ccav_tw_dp(inst, &tw()?),
        SolverId::PavTw => pav_tw_dp(inst, &tw()?),
        SolverId::MavTw => mav_tw_dp(inst, &tw()?),
        SolverId::Brute => brute_force_with_limit(inst, DEFAULT_CANDIDATE_LIMIT),
    }
}

/// Which solvers [`dispatch`] may use and how much work it may spend.
///
/// Polynomial rows are tried in table order and the first applicable one
/// runs. The remaining rows are ranked by [`SolverId::cost`]; rows whose
/// estimate exceeds `max_cost` are skipped, and a row that reports
/// [`Error::BudgetExceeded`] passes to the next. Brute force always closes
/// the table.
#[derive(Clone, Debug)]
pub struct DispatchPolicy {
    pub rows: Vec<SolverId>,
    pub max_cost: f64,
    /// Candidate limit for the closing brute-force row.
    pub brute_force_limit: usize,
    /// Checked before each attempt.
    pub time_limit: Option<Duration>,
}

impl Default for DispatchPolicy {
    fn default() -> Self {
        DispatchPolicy {
            rows: SolverId::ALL.iter().copied().filter(|&id| id != SolverId::Brute).collect(),
            max_cost: 1e9,
            brute_force_limit: DEFAULT_CANDIDATE_LIMIT,
            time_limit: None,
        }
    }
}

impl DispatchPolicy {
    /// Rows in the order [`dispatch`] would try them.
    pub fn plan(&self, inst: &Instance, p: &Params) -> Vec<SolverId> {
        let mut out: Vec<SolverId> = self
            .rows
            .iter()
            .copied()
            .find(|id| id.kind() == SolverKind::Poly && id.applies(inst, p))
            .into_iter()
            .collect();
        let mut fpt: Vec<(f64, usize, SolverId)> = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(_, id)| id.kind() == SolverKind::Fpt && id.applies(inst, p))
            .map(|(i, &id)| (id.cost(inst, p), i, id))
            .filter(|&(c, _, _)| c <= self.max_cost)
            .collect();
        fpt.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        out.extend(fpt.into_iter().map(|(_, _, id)| id));
        if p.m <= self.brute_force_limit {
            out.push(SolverId::Brute);
        }
        out
    }
}

/// Solves `inst` with the first workable solver of `policy`.
pub fn dispatch(inst: &Instance, policy: &DispatchPolicy) -> Result<SolveResult> {
    let start = Instant::now();
    let p = compute_params(inst);
    for id in policy.plan(inst, &p) {
        if policy.time_limit.is_some_and(|t| start.elapsed() > t) {
            break;
        }
        let r = if id == SolverId::Brute {
            brute_force_with_limit(inst, policy.brute_force_limit)
        } else {
            run_solver(id, inst)
        };
        match r {
            Err(Error::BudgetExceeded(_)) => continue,
            other => return other,
        }
    }
    Err(Error::AllSolversExceeded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{tests::e1, Election};
    use crate::rational::Rational;

    #[test]
    fn e1_pav_goes_to_deg22() {
        let inst = Instance::new(e1(), Rule::Pav, 2, Rational::new(7, 2)).unwrap();
        let r = dispatch(&inst, &DispatchPolicy::default()).unwrap();
        assert_eq!(r.algorithm, "pav-deg22");
        assert!(r.decision);
    }

    #[test]
    fn single_approvals_go_to_av() {
        let e = Election::new(4, vec![vec![0], vec![1], vec![1], vec![]]).unwrap();
        let inst = Instance::new(e, Rule::Mav, 2, Rational::from_int(2)).unwrap();
        let r = dispatch(&inst, &DispatchPolicy::default()).unwrap();
        assert_eq!(r.algorithm, "av-optimal");
    }

    #[test]
    fn empty_table_falls_back_to_brute_force() {
        let policy = DispatchPolicy { rows: vec![], ..DispatchPolicy::default() };
        let inst = Instance::new(e1(), Rule::Ccav, 1, Rational::from_int(2)).unwrap();
        assert_eq!(dispatch(&inst, &policy).unwrap().algorithm, "brute-force");
        let policy = DispatchPolicy { brute_force_limit: 2, ..policy };
        assert_eq!(dispatch(&inst, &policy), Err(Error::AllSolversExceeded));
    }

    #[test]
    fn names_round_trip() {
        for id in SolverId::ALL {
            assert_eq!(id.name().parse::<SolverId>().unwrap(), id);
        }
        assert!("nope".parse::<SolverId>().is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(5, 0), 1.0);
        assert_eq!(binomial(3, 5), 1.0);
    }
}
