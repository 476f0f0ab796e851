//! Polynomial-time special cases.
//!
//! | solver | rule | requires |
//! |---|---|---|
//! | [`av_optimal`] | all | every vote approves at most one candidate |
//! | [`mav_deg2`] | MAV | every candidate approved at most twice |
//! | [`ccav_deg2`] | CCAV | every candidate approved at most twice |
//! | [`pav_deg1`] | PAV | every candidate approved at most once |
//! | [`pav_deg22`] | PAV | votes and approval counts both at most two |

mod components;

pub use components::{pav_component_optimal, pav_deg22};

use crate::election::{score, Committee, Election, Instance, Rule};
use crate::error::{precondition, Result};
use crate::graph::{max_matching, simple_b_edge_cover_exact, Graph, MatchingMode, Multigraph};
use crate::result::SolveResult;

fn require_rule(inst: &Instance, rule: Rule, solver: &str) -> Result<()> {
    if inst.rule != rule {
        return Err(precondition(format!("{solver} solves {rule}, got {}", inst.rule)));
    }
    Ok(())
}

fn require_delta_c(e: &Election, max: usize, solver: &str) -> Result<()> {
    if e.max_approvals() > max {
        return Err(precondition(format!(
            "{solver} needs every candidate approved at most {max} times, found {}",
            e.max_approvals()
        )));
    }
    Ok(())
}

/// The `k` most-approved candidates, ties to the smaller index. Requires
/// every vote to approve at most one candidate.
pub fn av_optimal(e: &Election, k: usize) -> Result<Committee> {
    if e.max_vote_size() > 1 {
        return Err(precondition("av_optimal needs every vote to approve at most one candidate"));
    }
    if k > e.m() {
        return Err(precondition("committee larger than candidate set"));
    }
    let mut order: Vec<usize> = (0..e.m()).collect();
    order.sort_by_key(|&c| std::cmp::Reverse(e.approvers(c).len()));
    Ok(Committee::new(order[..k].to_vec()))
}

/// [`av_optimal`] as a solver; its committee is optimal for every rule.
pub fn av_solve(inst: &Instance) -> Result<SolveResult> {
    let w = av_optimal(&inst.election, inst.k)?;
    let opt = score(&inst.election, inst.rule, &w);
    Ok(SolveResult::from_optimum(inst, "av-optimal", opt, w))
}

/// MAV when every candidate is approved at most twice, as an exact edge
/// cover on the vote multigraph.
pub fn mav_deg2(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "mav-deg2";
    require_rule(inst, Rule::Mav, ALGO)?;
    let e = &inst.election;
    require_delta_c(e, 2, ALGO)?;
    let d = inst.int_threshold();
    if d < 0 {
        return Ok(SolveResult::no(ALGO));
    }
    let k = inst.k as i128;
    let kept: Vec<usize> = (0..e.n()).filter(|&v| d < e.vote(v).len() as i128 + k).collect();
    let mut slot = vec![usize::MAX; e.n()];
    for (i, &v) in kept.iter().enumerate() {
        slot[v] = i;
    }
    let edges = (0..e.m())
        .map(|c| e.approvers(c).iter().filter(|&&v| slot[v] != usize::MAX).map(|&v| slot[v]).collect())
        .collect();
    let g = Multigraph::new(kept.len(), edges);
    let f: Vec<usize> = kept
        .iter()
        .map(|&v| {
            let need = e.vote(v).len() as i128 + k - d;
            ((need + 1).div_euclid(2)).max(0) as usize
        })
        .collect();
    Ok(match simple_b_edge_cover_exact(&g, &f, inst.k)? {
        Some(chosen) => SolveResult::yes(ALGO, Committee::new(chosen)),
        None => SolveResult::no(ALGO),
    })
}

/// CCAV when every candidate is approved at most twice: a maximum matching
/// on the vote graph, extended greedily.
pub fn ccav_deg2(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "ccav-deg2";
    require_rule(inst, Rule::Ccav, ALGO)?;
    let e = &inst.election;
    require_delta_c(e, 2, ALGO)?;
    let k = inst.k;
    let mut h = Graph::new(e.n());
    let mut label = std::collections::HashMap::new();
    for c in 0..e.m() {
        if let [u, w] = *e.approvers(c) {
            if h.add_edge(u, w) {
                label.insert((u.min(w), u.max(w)), c);
            }
        }
    }
    let mut matched: Vec<usize> = max_matching(&h, MatchingMode::General).iter().map(|p| label[p]).collect();
    matched.sort_unstable();
    let members = if matched.len() >= k {
        matched[..k].to_vec()
    } else {
        let mut w = matched.clone();
        let mut covered = vec![false; e.n()];
        for &c in &matched {
            for &v in e.approvers(c) {
                covered[v] = true;
            }
        }
        for v in 0..e.n() {
            if w.len() == k {
                break;
            }
            if covered[v] || e.vote(v).is_empty() {
                continue;
            }
            let c = e.vote(v)[0];
            if !w.contains(&c) {
                w.push(c);
            }
            for &u in e.approvers(c) {
                covered[u] = true;
            }
        }
        w
    };
    let w = Committee::new(members).filled(k, 0..e.m());
    let opt = score(e, Rule::Ccav, &w);
    Ok(SolveResult::from_optimum(inst, ALGO, opt, w))
}

/// PAV when every candidate is approved at most once: votes take turns
/// adding one of their candidates.
pub fn pav_deg1(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "pav-deg1";
    require_rule(inst, Rule::Pav, ALGO)?;
    let e = &inst.election;
    require_delta_c(e, 1, ALGO)?;
    let k = inst.k;
    let mut w = Vec::with_capacity(k);
    let mut next = vec![0usize; e.n()];
    let mut progress = true;
    while w.len() < k && progress {
        progress = false;
        for (v, pos) in next.iter_mut().enumerate() {
            if w.len() == k {
                break;
            }
            if let Some(&c) = e.vote(v).get(*pos) {
                w.push(c);
                *pos += 1;
                progress = true;
            }
        }
    }
    let w = Committee::new(w).filled(k, 0..e.m());
    let opt = score(e, Rule::Pav, &w);
    Ok(SolveResult::from_optimum(inst, ALGO, opt, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;
    use crate::oracle::brute_force;
    use crate::rational::Rational;

    fn inst(m: usize, votes: Vec<Vec<usize>>, rule: Rule, k: usize, d: Rational) -> Instance {
        Instance::new(Election::new(m, votes).unwrap(), rule, k, d).unwrap()
    }

    #[test]
    fn av_examples() {
        let e = Election::new(2, vec![vec![0], vec![0], vec![1]]).unwrap();
        assert_eq!(av_optimal(&e, 1).unwrap(), Committee::new(vec![0]));
        assert_eq!(av_optimal(&e, 0).unwrap(), Committee::empty());
        let e2 = Election::new(2, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(av_optimal(&e2, 2).unwrap(), Committee::new(vec![0, 1]));
        for rule in Rule::ALL {
            let i = Instance::new(e2.clone(), rule, 2, Rational::ZERO).unwrap();
            assert_eq!(av_solve(&i).unwrap().opt_score, brute_force(&i).unwrap().opt_score);
        }
        assert!(av_optimal(&e1(), 1).is_err());
    }

    #[test]
    fn mav_deg2_examples() {
        let i = inst(3, vec![vec![0, 1], vec![1, 2]], Rule::Mav, 2, Rational::from_int(2));
        assert!(mav_deg2(&i).unwrap().decision);
        let i = Instance::new(e1(), Rule::Mav, 1, Rational::from_int(2)).unwrap();
        let r = mav_deg2(&i).unwrap();
        assert_eq!(r.witness, Some(Committee::new(vec![1])));
        assert!(!mav_deg2(&i.with_threshold(Rational::ONE)).unwrap().decision);
        let none = inst(2, vec![], Rule::Mav, 1, Rational::from_int(-1));
        assert!(!mav_deg2(&none).unwrap().decision);
    }

    #[test]
    fn ccav_deg2_examples() {
        let i = Instance::new(e1(), Rule::Ccav, 2, Rational::from_int(3)).unwrap();
        let r = ccav_deg2(&i).unwrap();
        assert!(r.decision && r.is_consistent(&i));
        let i = Instance::new(e1(), Rule::Ccav, 1, Rational::from_int(3)).unwrap();
        assert!(!ccav_deg2(&i).unwrap().decision);
        let i = inst(1, vec![vec![0]], Rule::Ccav, 1, Rational::ONE);
        assert_eq!(ccav_deg2(&i).unwrap().witness, Some(Committee::new(vec![0])));
    }

    #[test]
    fn pav_deg1_examples() {
        let i = inst(3, vec![vec![0, 1], vec![2]], Rule::Pav, 2, Rational::from_int(2));
        assert_eq!(pav_deg1(&i).unwrap().witness, Some(Committee::new(vec![0, 2])));
        let i = inst(2, vec![vec![0, 1]], Rule::Pav, 2, Rational::new(3, 2));
        let r = pav_deg1(&i).unwrap();
        assert_eq!(r.opt_score, Some(Rational::new(3, 2)));
        assert_eq!(r.witness, Some(Committee::new(vec![0, 1])));
        let i = inst(2, vec![vec![0, 1]], Rule::Pav, 0, Rational::ZERO);
        assert!(pav_deg1(&i).unwrap().decision);
    }
}
