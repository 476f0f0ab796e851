use crate::election::{Committee, Election, Instance, Rule};
use crate::error::{precondition, Result};
use crate::result::{SolveResult, Stats};

/// CCAV by branching on which candidate an optimal committee leaves out.
/// Explores at most `(delta_c * kbar)^kbar` branches.
pub fn ccav_bb_dual(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "ccav-bb-dual";
    if inst.rule != Rule::Ccav {
        return Err(precondition(format!("{ALGO} solves ccav, got {}", inst.rule)));
    }
    let e = &inst.election;
    let cands: Vec<usize> = (0..e.m()).collect();
    let votes: Vec<usize> = (0..e.n()).collect();
    let mut stats = Stats::default();
    let found = branch(e, &cands, &votes, inst.k, inst.int_threshold(), &mut stats);
    let r = match found {
        Some(w) => SolveResult::yes(ALGO, w),
        None => SolveResult::no(ALGO),
    };
    Ok(r.with_stats(stats))
}

/// `cands` and `votes` are sorted index lists into `e`; every candidate of a
/// listed vote that is outside `cands` has been excluded by an ancestor.
fn branch(e: &Election, cands: &[usize], votes: &[usize], k: usize, d: i128, stats: &mut Stats) -> Option<Committee> {
    stats.nodes += 1;
    let alive = |c: &usize| cands.binary_search(c).is_ok();
    let restricted: Vec<(usize, Vec<usize>)> = votes
        .iter()
        .map(|&v| (v, e.vote(v).iter().copied().filter(alive).collect::<Vec<usize>>()))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    let mut approved: Vec<usize> = restricted.iter().flat_map(|(_, s)| s.iter().copied()).collect();
    approved.sort_unstable();
    approved.dedup();
    let fill = |core: Vec<usize>| Committee::new(core).filled(k, approved.iter().copied().chain(cands.iter().copied()));

    if d <= 0 {
        return Some(fill(Vec::new()));
    }
    if approved.len() <= k {
        return (restricted.len() as i128 >= d).then(|| fill(approved.clone()));
    }
    let kbar = approved.len() - k;
    let small: Vec<&(usize, Vec<usize>)> = restricted.iter().filter(|(_, s)| s.len() <= kbar).collect();
    let mut b: Vec<usize> = small.iter().flat_map(|(_, s)| s.iter().copied()).collect();
    b.sort_unstable();
    b.dedup();
    if small.is_empty() || b.len() <= k {
        return (restricted.len() as i128 >= d).then(|| fill(b));
    }
    let singles = |c: usize| small.iter().filter(|(_, s)| s.len() == 1 && s[0] == c).count();
    let star = *b.iter().min_by_key(|&&c| singles(c)).expect("b is nonempty");
    let mut a: Vec<usize> =
        small.iter().filter(|(_, s)| s.contains(&star)).flat_map(|(_, s)| s.iter().copied()).collect();
    a.sort_unstable();
    a.dedup();
    stats.max_branch = stats.max_branch.max(a.len() as u64);
    let d_next = d - (restricted.len() - small.len()) as i128;
    let u: Vec<usize> = small.iter().map(|(v, _)| *v).collect();
    for &x in &a {
        let next: Vec<usize> = approved.iter().copied().filter(|&c| c != x).collect();
        if let Some(w) = branch(e, &next, &u, k, d_next, stats) {
            return Some(fill(w.into_vec()));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;
    use crate::rational::Rational;

    #[test]
    fn examples() {
        let i = Instance::new(e1(), Rule::Ccav, 2, Rational::from_int(3)).unwrap();
        let r = ccav_bb_dual(&i).unwrap();
        assert!(r.decision && r.is_consistent(&i));
        let i = Instance::new(e1(), Rule::Ccav, 1, Rational::from_int(3)).unwrap();
        assert!(!ccav_bb_dual(&i).unwrap().decision);
        let i = Instance::new(e1(), Rule::Ccav, 1, Rational::from_int(2)).unwrap();
        assert!(ccav_bb_dual(&i).unwrap().is_consistent(&i));
    }

    #[test]
    fn large_votes_always_hit() {
        let e = Election::new(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 2, 3]]).unwrap();
        for d in 0..=4 {
            let i = Instance::new(e.clone(), Rule::Ccav, 2, Rational::from_int(d)).unwrap();
            assert_eq!(ccav_bb_dual(&i).unwrap().decision, d <= 3);
        }
    }
}
