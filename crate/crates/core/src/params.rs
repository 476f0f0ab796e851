//! Structural parameters of an instance.

use std::fmt;

use crate::election::Instance;
use crate::graph::{incidence_graph, max_matching, tree_decomposition, DecompositionMode, MatchingMode};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// `m - k`.
    pub kbar: usize,
    /// Largest vote.
    pub delta_v: usize,
    /// Largest number of approvals of a single candidate.
    pub delta_c: usize,
    /// Width of the heuristic decomposition of the incidence graph.
    pub tw_upper: usize,
    /// Maximum matching size of the incidence graph.
    pub alpha: usize,
}

pub fn compute_params(inst: &Instance) -> Params {
    let e = &inst.election;
    let g = incidence_graph(e);
    let td = tree_decomposition(&g.graph, DecompositionMode::Heuristic).expect("heuristic always succeeds");
    Params {
        m: e.m(),
        n: e.n(),
        k: inst.k,
        kbar: e.m() - inst.k,
        delta_v: e.max_vote_size(),
        delta_c: e.max_approvals(),
        tw_upper: td.width(),
        alpha: max_matching(&g.graph, MatchingMode::Bipartite).len(),
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={} k={} kbar={} delta_v={} delta_c={} tw_upper={} alpha={}",
            self.m, self.n, self.k, self.kbar, self.delta_v, self.delta_c, self.tw_upper, self.alpha
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{tests::e1, Election, Rule};
    use crate::rational::Rational;

    #[test]
    fn e1_params() {
        let p = compute_params(&Instance::new(e1(), Rule::Pav, 2, Rational::ZERO).unwrap());
        assert_eq!((p.m, p.n, p.k, p.kbar, p.delta_v, p.delta_c, p.alpha), (3, 3, 2, 1, 2, 2, 3));
        assert_eq!(p.tw_upper, 1);
        let p1 = compute_params(&Instance::new(e1(), Rule::Pav, 1, Rational::ZERO).unwrap());
        assert_eq!(p1, Params { k: 1, kbar: 2, ..p });
    }

    #[test]
    fn empty_params() {
        let p = compute_params(&Instance::new(Election::empty(), Rule::Mav, 0, Rational::ZERO).unwrap());
        assert_eq!(p, Params::default());
    }
}
