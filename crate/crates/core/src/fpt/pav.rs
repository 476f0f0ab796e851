use std::collections::HashMap;

use crate::classes::class_partition;
use crate::election::{intersection_size, pav_scaled, Committee, Election, Instance, Rule};
use crate::error::{precondition, Error, Result};
use crate::graph::{incidence_graph, max_matching, MatchingMode};
use crate::oracle::for_each_combination;
use crate::rational::{HarmonicScale, Rational};
use crate::result::{SolveResult, Stats};

/// Largest number of votes [`pav_annotated`] accepts.
pub const ANNOTATED_VOTE_LIMIT: usize = 20;

/// PAV with a set of candidates that must be in the committee.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedPavInstance {
    pub election: Election,
    pub forced: Committee,
    pub k: usize,
    pub d: Rational,
}

fn require_pav(inst: &Instance, solver: &str) -> Result<()> {
    if inst.rule != Rule::Pav {
        return Err(precondition(format!("{solver} solves pav, got {}", inst.rule)));
    }
    Ok(())
}

/// Best scaled PAV score of a `k`-committee containing `forced`, by dynamic
/// programming over how many members each candidate class contributes.
fn annotated_optimum(
    e: &Election,
    forced: &Committee,
    k: usize,
    scale: &HarmonicScale,
    stats: &mut Stats,
) -> Result<(i128, Committee)> {
    if e.n() > ANNOTATED_VOTE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "annotated search limited to {ANNOTATED_VOTE_LIMIT} votes, got {}",
            e.n()
        )));
    }
    if forced.len() > k || k > e.m() || forced.members().iter().any(|&c| c >= e.m()) {
        return Err(precondition("forced set must be a subset of the candidates of size at most k"));
    }
    let partition = class_partition(e, None);
    let classes: Vec<(Vec<usize>, usize, usize)> = partition
        .classes
        .iter()
        .map(|c| {
            let low = c.members.iter().filter(|&&x| forced.contains(x)).count();
            (c.support.clone(), low, c.count())
        })
        .collect();
    let mut memo: HashMap<(usize, usize, Vec<u8>), Option<i128>> = HashMap::new();
    let mut x = vec![0u8; e.n()];
    let best =
        dp(&classes, 0, k, &mut x, scale, &mut memo).expect("a committee of size k containing the forced set exists");
    stats.entries += memo.len() as u64;
    stats.nodes += 1;

    // walk the memo forwards to recover the counts
    let mut left = k;
    let mut members = Vec::with_capacity(k);
    let mut x = vec![0u8; e.n()];
    for (i, (support, low, cap)) in classes.iter().enumerate() {
        let want = dp(&classes, i, left, &mut x, scale, &mut memo).expect("reachable state");
        let mut picked = None;
        for t in *low..=(*cap).min(left) {
            let gain = gain_of(support, &x, t, scale);
            bump(&mut x, support, t as i64);
            let rest = dp(&classes, i + 1, left - t, &mut x, scale, &mut memo);
            bump(&mut x, support, -(t as i64));
            if rest.is_some_and(|r| r + gain == want) {
                picked = Some(t);
                break;
            }
        }
        let t = picked.expect("optimal choice exists");
        bump(&mut x, support, t as i64);
        left -= t;
        let class = &partition.classes[i];
        let mut chosen: Vec<usize> = class.members.iter().copied().filter(|&c| forced.contains(c)).collect();
        chosen.extend(class.members.iter().copied().filter(|&c| !forced.contains(c)).take(t - chosen.len()));
        members.extend(chosen);
    }
    Ok((best, Committee::new(members)))
}

fn gain_of(support: &[usize], x: &[u8], t: usize, scale: &HarmonicScale) -> i128 {
    support.iter().map(|&v| scale.h(x[v] as usize + t) - scale.h(x[v] as usize)).sum()
}

fn bump(x: &mut [u8], support: &[usize], by: i64) {
    for &v in support {
        x[v] = (x[v] as i64 + by) as u8;
    }
}

fn dp(
    classes: &[(Vec<usize>, usize, usize)],
    i: usize,
    left: usize,
    x: &mut Vec<u8>,
    scale: &HarmonicScale,
    memo: &mut HashMap<(usize, usize, Vec<u8>), Option<i128>>,
) -> Option<i128> {
    if i == classes.len() {
        return (left == 0).then_some(0);
    }
    let key = (i, left, x.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (support, low, cap) = &classes[i];
    let mut best: Option<i128> = None;
    if *low <= left {
        for t in *low..=(*cap).min(left) {
            let gain = gain_of(support, x, t, scale);
            bump(x, support, t as i64);
            if let Some(rest) = dp(classes, i + 1, left - t, x, scale, memo) {
                if best.is_none_or(|b| rest + gain > b) {
                    best = Some(rest + gain);
                }
            }
            bump(x, support, -(t as i64));
        }
    }
    memo.insert(key, best);
    best
}

/// Exact optimum of PAV over `k`-committees containing the forced set.
pub fn pav_annotated(a: &AnnotatedPavInstance) -> Result<SolveResult> {
    const ALGO: &str = "pav-annotated";
    let scale = HarmonicScale::new(a.k.min(a.election.max_vote_size()));
    let mut stats = Stats::default();
    let (best, w) = annotated_optimum(&a.election, &a.forced, a.k, &scale, &mut stats)?;
    let opt = scale.to_rational(best);
    let decision = opt >= a.d;
    Ok(SolveResult { decision, opt_score: Some(opt), witness: decision.then_some(w), algorithm: ALGO.into(), stats })
}

/// PAV by guessing which matched candidates of a maximum matching of the
/// incidence graph join the committee; every guess is an annotated
/// instance over the matched votes.
pub fn pav_by_matching(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "pav-matching";
    require_pav(inst, ALGO)?;
    let e = &inst.election;
    let g = incidence_graph(e);
    let matching = max_matching(&g.graph, MatchingMode::Bipartite);
    let mut matched_c: Vec<usize> = matching.iter().map(|&(a, _)| a).collect();
    matched_c.sort_unstable();
    let mut matched_v: Vec<usize> = matching.iter().map(|&(_, b)| b - g.m).collect();
    matched_v.sort_unstable();
    let outside: Vec<usize> = (0..e.n()).filter(|v| matched_v.binary_search(v).is_err()).collect();
    let inner = e.restrict_votes(&matched_v);
    let scale = HarmonicScale::new(inst.k.min(e.max_vote_size()));
    let mut stats = Stats::default();
    let mut best: Option<(i128, Committee)> = None;
    let mut failure = None;
    for size in 0..=inst.k.min(matched_c.len()) {
        for_each_combination(matched_c.len(), size, |idx| {
            stats.subinstances += 1;
            let forced = Committee::new(idx.iter().map(|&i| matched_c[i]).collect());
            let base: i128 = outside.iter().map(|&v| scale.h(intersection_size(e.vote(v), forced.members()))).sum();
            match annotated_optimum(&inner, &forced, inst.k, &scale, &mut stats) {
                Ok((s, w)) => {
                    if best.as_ref().is_none_or(|(b, _)| base + s > *b) {
                        best = Some((base + s, w));
                    }
                    true
                }
                Err(err) => {
                    failure = Some(err);
                    false
                }
            }
        });
        if let Some(err) = failure {
            return Err(err);
        }
    }
    let (raw, w) = best.expect("the empty guess always yields a committee");
    debug_assert!(pav_scaled(e, w.members(), &scale) >= raw);
    Ok(SolveResult::from_optimum(inst, ALGO, scale.to_rational(raw), w).with_stats(stats))
}

/// PAV by branching on a candidate near the best marginal gain, to depth
/// `min(k, ceil(d * delta_v))`.
pub fn pav_bb_dv(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "pav-bb-dv";
    require_pav(inst, ALGO)?;
    let e = &inst.election;
    let d = inst.d;
    let all = 0..e.m();
    if inst.k == 0 {
        return Ok(if d <= Rational::ZERO {
            SolveResult::yes(ALGO, Committee::empty())
        } else {
            SolveResult::no(ALGO)
        });
    }
    if let Some(c) = (0..e.m()).find(|&c| Rational::from(e.approvers(c).len()) >= d) {
        return Ok(SolveResult::yes(ALGO, Committee::new(vec![c]).filled(inst.k, all)));
    }
    let approved: Vec<usize> = (0..e.m()).filter(|&c| !e.approvers(c).is_empty()).collect();
    let k = inst.k.min(approved.len());
    let scale = HarmonicScale::new(k.min(e.max_vote_size()));
    let target = scale.ceil_threshold(d);
    if k == approved.len() {
        let w = Committee::new(approved.clone());
        let ok = pav_scaled(e, w.members(), &scale) >= target;
        return Ok(if ok { SolveResult::yes(ALGO, w.filled(inst.k, all)) } else { SolveResult::no(ALGO) });
    }
    let reach = (d * Rational::from(e.max_vote_size())).ceil().max(0) as usize;
    let depth = k.min(reach);
    let mut search = Branch {
        e,
        scale: &scale,
        target,
        depth,
        auto_yes: depth == reach,
        approved: &approved,
        stats: Stats::default(),
    };
    let mut s = Vec::with_capacity(depth);
    let mut hits = vec![0usize; e.n()];
    let found = search.go(&mut s, &mut hits);
    assert!(search.stats.max_branch <= reach as u64, "branching factor exceeds ceil(d * delta_v)");
    let stats = search.stats;
    let r = if found {
        SolveResult::yes(ALGO, Committee::new(s).filled(inst.k, approved.iter().copied().chain(all)))
    } else {
        SolveResult::no(ALGO)
    };
    Ok(r.with_stats(stats))
}

struct Branch<'a> {
    e: &'a Election,
    scale: &'a HarmonicScale,
    target: i128,
    depth: usize,
    auto_yes: bool,
    approved: &'a [usize],
    stats: Stats,
}

impl Branch<'_> {
    /// On success `s` holds the committee core.
    fn go(&mut self, s: &mut Vec<usize>, hits: &mut [usize]) -> bool {
        self.stats.nodes += 1;
        if s.len() == self.depth {
            if self.auto_yes {
                return true;
            }
            let total: i128 = hits.iter().map(|&h| self.scale.h(h)).sum();
            return total >= self.target;
        }
        let marginal = |c: usize, hits: &[usize]| -> i128 {
            self.e.approvers(c).iter().map(|&v| self.scale.marginal(hits[v] + 1)).sum()
        };
        let mut best: Option<(i128, usize)> = None;
        for &c in self.approved {
            if s.contains(&c) {
                continue;
            }
            let g = marginal(c, hits);
            if best.is_none_or(|(b, _)| g > b) {
                best = Some((g, c));
            }
        }
        let Some((_, c)) = best else { return false };
        let mut a: Vec<usize> = self.e.approvers(c).iter().flat_map(|&v| self.e.vote(v).iter().copied()).collect();
        a.sort_unstable();
        a.dedup();
        a.retain(|x| !s.contains(x));
        self.stats.max_branch = self.stats.max_branch.max(a.len() as u64);
        for x in a {
            s.push(x);
            for &v in self.e.approvers(x) {
                hits[v] += 1;
            }
            if self.go(s, hits) {
                return true;
            }
            for &v in self.e.approvers(x) {
                hits[v] -= 1;
            }
            s.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;

    #[test]
    fn annotated_examples() {
        let a = AnnotatedPavInstance { election: e1(), forced: Committee::empty(), k: 2, d: Rational::new(7, 2) };
        let r = pav_annotated(&a).unwrap();
        assert_eq!(r.witness, Some(Committee::new(vec![0, 1])));
        let a = AnnotatedPavInstance { forced: Committee::new(vec![2]), ..a };
        let r = pav_annotated(&a).unwrap();
        assert_eq!(r.opt_score, Some(Rational::from_int(3)));
        assert!(!r.decision);
        let a = AnnotatedPavInstance { forced: Committee::new(vec![1, 2]), d: Rational::from_int(3), ..a };
        let r = pav_annotated(&a).unwrap();
        assert_eq!(r.opt_score, Some(Rational::new(5, 2)));
        assert!(!r.decision);
    }

    #[test]
    fn matching_and_branching_on_e1() {
        let i = Instance::new(e1(), Rule::Pav, 2, Rational::new(7, 2)).unwrap();
        let r = pav_by_matching(&i).unwrap();
        assert_eq!(r.opt_score, Some(Rational::new(7, 2)));
        assert!(r.is_consistent(&i));
        assert!(pav_bb_dv(&i).unwrap().is_consistent(&i));
        assert!(pav_bb_dv(&i).unwrap().decision);
        assert!(!pav_bb_dv(&i.with_threshold(Rational::new(15, 4))).unwrap().decision);
    }

    #[test]
    fn popular_candidate_short_circuits() {
        let e = Election::new(3, vec![vec![0], vec![0, 1], vec![0, 2]]).unwrap();
        let i = Instance::new(e, Rule::Pav, 1, Rational::from_int(3)).unwrap();
        let r = pav_bb_dv(&i).unwrap();
        assert_eq!(r.witness, Some(Committee::new(vec![0])));
        assert_eq!(r.stats.nodes, 0);
    }
}
