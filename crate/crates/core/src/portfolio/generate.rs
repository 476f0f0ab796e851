use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::election::Election;
use crate::error::{Error, Result};

/// Shape of a random election.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub m: usize,
    pub n: usize,
    /// Cap on vote size.
    pub max_dv: Option<usize>,
    /// Cap on how many votes approve one candidate.
    pub max_dc: Option<usize>,
    /// Every vote approves at least this many candidates.
    pub min_vote: usize,
}

impl GeneratorConfig {
    pub fn new(m: usize, n: usize) -> Self {
        GeneratorConfig { m, n, max_dv: None, max_dc: None, min_vote: 0 }
    }

    pub fn max_dv(mut self, cap: usize) -> Self {
        self.max_dv = Some(cap);
        self
    }

    pub fn max_dc(mut self, cap: usize) -> Self {
        self.max_dc = Some(cap);
        self
    }

    pub fn min_vote(mut self, size: usize) -> Self {
        self.min_vote = size;
        self
    }
}

/// A pseudo-random election honouring the caps; the same seed gives the same election.
pub fn generate(cfg: &GeneratorConfig, seed: u64) -> Result<Election> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_with(cfg, &mut rng)
}

pub fn generate_with<R: Rng>(cfg: &GeneratorConfig, rng: &mut R) -> Result<Election> {
    let vote_cap = cfg.max_dv.unwrap_or(cfg.m).min(cfg.m);
    let cand_cap = cfg.max_dc.unwrap_or(cfg.n);
    if cfg.min_vote > vote_cap {
        return Err(Error::Infeasible(format!(
            "votes of size {} do not fit under a vote-size cap of {vote_cap}",
            cfg.min_vote
        )));
    }
    if cfg.n * cfg.min_vote > cfg.m * cand_cap {
        return Err(Error::Infeasible(format!(
            "{} required approvals exceed the {} allowed by the approval cap",
            cfg.n * cfg.min_vote,
            cfg.m * cand_cap
        )));
    }
    let mut room = vec![cand_cap; cfg.m];
    // mandatory approvals first, always to the candidates with the most room
    let mut votes: Vec<Vec<usize>> = Vec::with_capacity(cfg.n);
    for _ in 0..cfg.n {
        let mut order: Vec<usize> = (0..cfg.m).collect();
        order.shuffle(rng);
        order.sort_by_key(|&c| std::cmp::Reverse(room[c]));
        let vote = order[..cfg.min_vote].to_vec();
        for &c in &vote {
            room[c] -= 1;
        }
        votes.push(vote);
    }
    for vote in &mut votes {
        let size = rng.gen_range(cfg.min_vote..=vote_cap);
        let mut extra: Vec<usize> = (0..cfg.m).filter(|&c| room[c] > 0 && !vote.contains(&c)).collect();
        extra.shuffle(rng);
        extra.truncate(size - cfg.min_vote);
        for &c in &extra {
            room[c] -= 1;
        }
        vote.extend(extra);
    }
    Election::new(cfg.m, votes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let cfg = GeneratorConfig::new(5, 4).max_dv(2);
        assert_eq!(generate(&cfg, 1).unwrap(), generate(&cfg, 1).unwrap());
        assert!(generate(&cfg, 1).unwrap().max_vote_size() <= 2);
    }

    #[test]
    fn caps_hold() {
        for seed in 0..50 {
            let cfg = GeneratorConfig::new(8, 7).max_dc(1).max_dv(3);
            let e = generate(&cfg, seed).unwrap();
            assert!(e.max_approvals() <= 1 && e.max_vote_size() <= 3);
            let cfg = GeneratorConfig::new(6, 6).max_dc(2).min_vote(2);
            let e = generate(&cfg, seed).unwrap();
            assert!(e.max_approvals() <= 2);
            assert!(e.votes().iter().all(|v| v.len() >= 2));
        }
    }

    #[test]
    fn infeasible_caps() {
        assert!(generate(&GeneratorConfig::new(3, 4).max_dc(1).min_vote(1), 0).is_err());
        assert!(generate(&GeneratorConfig::new(3, 1).max_dv(1).min_vote(2), 0).is_err());
    }
}
