//! Fixed instances shared by the criterion benches.

use committee_core::portfolio::{generate, GeneratorConfig};
use committee_core::{Instance, Rational, Rule};

/// A seeded random instance with the given shape.
pub fn fixture(rule: Rule, cfg: &GeneratorConfig, k: usize, d: Rational, seed: u64) -> Instance {
    let e = generate(cfg, seed).expect("generator config is feasible");
    Instance::new(e, rule, k, d).expect("k fits the election")
}

/// Sparse elections whose incidence graphs have small treewidth.
pub fn sparse(rule: Rule, m: usize, k: usize, d: i128, seed: u64) -> Instance {
    let cfg = GeneratorConfig::new(m, m).max_dv(2).max_dc(2).min_vote(1);
    fixture(rule, &cfg, k, Rational::from_int(d), seed)
}

/// Dense small elections, within reach of brute force.
pub fn dense(rule: Rule, m: usize, n: usize, k: usize, d: Rational, seed: u64) -> Instance {
    fixture(rule, &GeneratorConfig::new(m, n), k, d, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_requested_shape() {
        let inst = sparse(Rule::Ccav, 20, 5, 10, 1);
        assert_eq!(inst.election.m(), 20);
        assert!(inst.election.max_vote_size() <= 2 && inst.election.max_approvals() <= 2);
        assert_eq!(dense(Rule::Pav, 8, 6, 3, Rational::ONE, 2).k, 3);
    }
}
