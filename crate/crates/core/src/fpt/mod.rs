//! Exponential-time exact solvers whose running time depends on small
//! structural parameters rather than the instance size.

mod ccav_bb;
mod grsp;
mod mav;
mod pav;

pub use ccav_bb::ccav_bb_dual;
pub use grsp::{grsp_solve, mav_dual_grsp, mav_to_grsp, GrspInstance};
pub use mav::{mav_by_classes, mav_by_matching, mav_k_deltaC, CLASS_VOTE_LIMIT};
pub use pav::{pav_annotated, pav_bb_dv, pav_by_matching, AnnotatedPavInstance, ANNOTATED_VOTE_LIMIT};

use crate::election::{Committee, Instance, Rule};
use crate::rational::Rational;
use crate::result::SolveResult;
use crate::Result;

/// Settles instances whose threshold is out of reach (or trivially met) and
/// hands the rest to a branching or class-count solver.
pub fn threshold_shortcuts(inst: &Instance) -> Result<SolveResult> {
    let e = &inst.election;
    let k = inst.k;
    match inst.rule {
        Rule::Ccav | Rule::Pav if inst.d > Rational::from(k * e.max_approvals()) => {
            Ok(SolveResult::no("threshold-bound"))
        }
        Rule::Mav if inst.d >= Rational::from(k + e.max_vote_size()) => {
            Ok(SolveResult::yes("threshold-bound", Committee::empty().filled(k, 0..e.m())))
        }
        Rule::Ccav => ccav_bb_dual(inst),
        Rule::Pav => pav_bb_dv(inst),
        Rule::Mav => mav_by_classes(inst, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::Election;

    #[test]
    fn shortcuts() {
        let e = Election::new(3, vec![vec![0, 1], vec![1, 2], vec![0]]).unwrap();
        let i = Instance::new(e.clone(), Rule::Ccav, 1, Rational::from_int(3)).unwrap();
        let r = threshold_shortcuts(&i).unwrap();
        assert_eq!((r.decision, r.algorithm.as_str()), (false, "threshold-bound"));
        let i = Instance::new(e, Rule::Mav, 1, Rational::from_int(3)).unwrap();
        let r = threshold_shortcuts(&i).unwrap();
        assert!(r.decision && r.is_consistent(&i));
    }
}
