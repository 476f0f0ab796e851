//! Exhaustive reference solvers.

use crate::election::{Committee, Instance, Rule};
use crate::error::{Error, Result};
use crate::rational::{HarmonicScale, Rational};
use crate::result::{SolveResult, Stats};

/// Default largest candidate count [`brute_force`] accepts.
pub const DEFAULT_CANDIDATE_LIMIT: usize = 22;

/// Largest `|S|` the set-system oracles accept.
pub const SET_SYSTEM_LIMIT: usize = 26;

/// Steps `idx` to the next `k`-combination of `0..m` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Visits every `k`-subset of `0..m` in lexicographic order until `f` returns false.
pub(crate) fn for_each_combination(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) || !next_combination(&mut idx, m) {
            return;
        }
    }
}

/// Exact optimum by enumerating all `k`-committees.
pub fn brute_force(inst: &Instance) -> Result<SolveResult> {
    brute_force_with_limit(inst, DEFAULT_CANDIDATE_LIMIT)
}

/// As [`brute_force`] with a custom candidate limit (at most 64).
pub fn brute_force_with_limit(inst: &Instance, max_candidates: usize) -> Result<SolveResult> {
    let e = &inst.election;
    let m = e.m();
    if m > max_candidates.min(64) {
        return Err(Error::BudgetExceeded(format!(
            "brute force limited to {} candidates, instance has {m}",
            max_candidates.min(64)
        )));
    }
    let masks: Vec<u64> = e.votes().iter().map(|v| v.iter().fold(0u64, |a, &c| a | 1 << c)).collect();
    let sizes: Vec<i64> = e.votes().iter().map(|v| v.len() as i64).collect();
    let k = inst.k;
    let scale = HarmonicScale::new(k.min(e.max_vote_size()));
    // scores are negated for MAV so that larger is always better
    let eval = |w: u64| -> i128 {
        match inst.rule {
            Rule::Mav => {
                let worst = masks
                    .iter()
                    .zip(&sizes)
                    .map(|(&v, &s)| s + k as i64 - 2 * (v & w).count_ones() as i64)
                    .max()
                    .unwrap_or(0);
                -(worst as i128)
            }
            Rule::Ccav => masks.iter().filter(|&&v| v & w != 0).count() as i128,
            Rule::Pav => masks.iter().map(|&v| scale.h((v & w).count_ones() as usize)).sum(),
        }
    };
    let mut best: Option<(i128, Vec<usize>)> = None;
    let mut count = 0u64;
    for_each_combination(m, k, |idx| {
        count += 1;
        let w = idx.iter().fold(0u64, |a, &c| a | 1 << c);
        let s = eval(w);
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, idx.to_vec()));
        }
        true
    });
    let (raw, members) = best.expect("at least one committee exists when k <= m");
    let opt = match inst.rule {
        Rule::Mav => Rational::from_int(-raw),
        Rule::Ccav => Rational::from_int(raw),
        Rule::Pav => scale.to_rational(raw),
    };
    let stats = Stats { nodes: count, ..Stats::default() };
    Ok(SolveResult::from_optimum(inst, "brute-force", opt, Committee::new(members)).with_stats(stats))
}

/// Can `kappa` members of `sets` be chosen so that every element `u` lies in
/// at most `f[u]` of them?
pub fn brute_force_grsp(universe: usize, sets: &[Vec<usize>], f: &[usize], kappa: usize) -> Result<bool> {
    if sets.len() > SET_SYSTEM_LIMIT {
        return Err(Error::BudgetExceeded(format!("{} sets exceed the oracle limit", sets.len())));
    }
    assert_eq!(f.len(), universe, "capacity vector length");
    let mut found = false;
    for_each_combination(sets.len(), kappa, |idx| {
        let mut load = vec![0usize; universe];
        for &i in idx {
            for &u in &sets[i] {
                load[u] += 1;
            }
        }
        found = (0..universe).all(|u| load[u] <= f[u]);
        !found
    });
    Ok(found)
}

/// Is there an `a`-subset of `0..universe` hitting at least `b` of `sets`?
pub fn brute_force_phs(universe: usize, sets: &[Vec<usize>], a: usize, b: usize) -> Result<bool> {
    if universe > SET_SYSTEM_LIMIT {
        return Err(Error::BudgetExceeded(format!("universe of {universe} exceeds the oracle limit")));
    }
    let masks: Vec<u64> = sets.iter().map(|s| s.iter().fold(0u64, |m, &u| m | 1 << u)).collect();
    let mut found = false;
    for_each_combination(universe, a, |idx| {
        let pick = idx.iter().fold(0u64, |m, &u| m | 1 << u);
        found = masks.iter().filter(|&&s| s & pick != 0).count() >= b;
        !found
    });
    Ok(found)
}
