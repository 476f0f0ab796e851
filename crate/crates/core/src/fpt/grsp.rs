use crate::election::{Committee, Instance, Rule};
use crate::error::{precondition, Result};
use crate::result::{SolveResult, Stats};

/// Choose `kappa` members of the multiset `sets` so that every element `u`
/// of `0..universe` lies in at most `f[u]` chosen sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrspInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    pub f: Vec<usize>,
    pub kappa: usize,
}

impl GrspInstance {
    /// Largest set size.
    pub fn r(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Equivalent instance in which every set has exactly `r` elements,
    /// padding short sets with fresh elements of capacity 1.
    pub fn padded(&self) -> GrspInstance {
        let r = self.r();
        let mut out = self.clone();
        for s in &mut out.sets {
            while s.len() < r {
                s.push(out.universe);
                out.f.push(1);
                out.universe += 1;
            }
        }
        out
    }
}

/// Backtracking over the sets in index order with running capacity
/// counters. Returns the chosen set indices.
pub fn grsp_solve(g: &GrspInstance) -> (Option<Vec<usize>>, Stats) {
    let usable: Vec<usize> = (0..g.sets.len()).filter(|&i| g.sets[i].iter().all(|&u| g.f[u] > 0)).collect();
    let mut load = vec![0usize; g.universe];
    let mut chosen = Vec::with_capacity(g.kappa);
    let mut stats = Stats::default();
    let ok = pack(g, &usable, 0, &mut load, &mut chosen, &mut stats);
    (ok.then_some(chosen), stats)
}

fn pack(
    g: &GrspInstance,
    usable: &[usize],
    from: usize,
    load: &mut [usize],
    chosen: &mut Vec<usize>,
    stats: &mut Stats,
) -> bool {
    stats.nodes += 1;
    if chosen.len() == g.kappa {
        return true;
    }
    if usable.len() - from < g.kappa - chosen.len() {
        return false;
    }
    for at in from..usable.len() {
        if usable.len() - at < g.kappa - chosen.len() {
            break;
        }
        let s = &g.sets[usable[at]];
        if s.iter().any(|&u| load[u] >= g.f[u]) {
            continue;
        }
        for &u in s {
            load[u] += 1;
        }
        chosen.push(usable[at]);
        if pack(g, usable, at + 1, load, chosen, stats) {
            return true;
        }
        chosen.pop();
        for &u in s {
            load[u] -= 1;
        }
    }
    false
}

/// MAV by removing `m - k` candidates: each vote `v` may lose at most
/// `floor((d + |v| - k) / 2)` of its approved candidates.
pub fn mav_dual_grsp(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "mav-dual-grsp";
    if inst.rule != Rule::Mav {
        return Err(precondition(format!("{ALGO} solves mav, got {}", inst.rule)));
    }
    let Some(g) = mav_to_grsp(inst) else {
        return Ok(SolveResult::no(ALGO));
    };
    let (sel, stats) = grsp_solve(&g);
    let r = match sel {
        Some(removed) => {
            let w = (0..inst.election.m()).filter(|c| !removed.contains(c)).collect();
            SolveResult::yes(ALGO, Committee::new(w))
        }
        None => SolveResult::no(ALGO),
    };
    Ok(r.with_stats(stats))
}

/// The packing instance for a MAV instance, or `None` if some vote already
/// rules out every committee.
pub fn mav_to_grsp(inst: &Instance) -> Option<GrspInstance> {
    let e = &inst.election;
    let d = inst.int_threshold();
    let k = inst.k as i128;
    if d < 0 {
        return None;
    }
    let mut f = Vec::with_capacity(e.n());
    for v in e.votes() {
        let size = v.len() as i128;
        if size < k && d < k - size {
            return None;
        }
        let cap = (d + size - k).div_euclid(2);
        if cap < 0 {
            return None;
        }
        f.push(cap as usize);
    }
    Some(GrspInstance {
        universe: e.n(),
        sets: (0..e.m()).map(|c| e.approvers(c).to_vec()).collect(),
        f,
        kappa: e.m() - inst.k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{tests::e1, Election};
    use crate::oracle::brute_force_grsp;
    use crate::rational::Rational;

    fn decide(sets: Vec<Vec<usize>>, f: Vec<usize>, kappa: usize) -> bool {
        let g = GrspInstance { universe: f.len(), sets, f, kappa };
        grsp_solve(&g).0.is_some()
    }

    #[test]
    fn grsp_examples() {
        assert!(!decide(vec![vec![0, 1], vec![1, 2]], vec![1, 1, 1], 2));
        assert!(decide(vec![vec![0, 1], vec![1, 2]], vec![1, 2, 1], 2));
        assert!(decide(vec![vec![0]], vec![0], 0));
        assert!(!decide(vec![vec![0]], vec![0], 1));
    }

    #[test]
    fn padding_preserves_answer() {
        let g = GrspInstance { universe: 3, sets: vec![vec![0], vec![0, 1, 2], vec![1]], f: vec![1, 1, 2], kappa: 2 };
        let p = g.padded();
        assert!(p.sets.iter().all(|s| s.len() == 3));
        let a = brute_force_grsp(g.universe, &g.sets, &g.f, g.kappa).unwrap();
        let b = brute_force_grsp(p.universe, &p.sets, &p.f, p.kappa).unwrap();
        assert_eq!(a, b);
        assert_eq!(grsp_solve(&p).0.is_some(), a);
    }

    #[test]
    fn dual_examples() {
        let i = Instance::new(e1(), Rule::Mav, 2, Rational::from_int(2)).unwrap();
        let g = mav_to_grsp(&i).unwrap();
        assert_eq!(g.f, vec![1, 1, 0]);
        let r = mav_dual_grsp(&i).unwrap();
        assert!(r.decision && r.is_consistent(&i));
        // a single-candidate vote is at distance >= 2 from any 3-committee
        let e = Election::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap();
        let i = Instance::new(e, Rule::Mav, 3, Rational::ONE).unwrap();
        assert!(mav_to_grsp(&i).is_none());
        assert!(!mav_dual_grsp(&i).unwrap().decision);
    }
}
