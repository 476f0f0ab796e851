//! Candidates grouped by the exact set of votes approving them.

use crate::election::Election;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateClass {
    /// Vote indices (into the full election) approving every member, sorted.
    pub support: Vec<usize>,
    /// Candidate indices, sorted.
    pub members: Vec<usize>,
}

impl CandidateClass {
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// Classes are ordered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    pub classes: Vec<CandidateClass>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing candidate `c`.
    pub fn class_of(&self, c: usize) -> Option<usize> {
        self.classes.iter().position(|cl| cl.members.binary_search(&c).is_ok())
    }
}

/// Groups candidates by `V(c)`, or by `V(c) ∩ restrict` when a vote subset is given.
pub fn class_partition(e: &Election, restrict: Option<&[usize]>) -> ClassPartition {
    let mut keep = vec![restrict.is_none(); e.n()];
    if let Some(r) = restrict {
        for &v in r {
            keep[v] = true;
        }
    }
    let mut classes: Vec<CandidateClass> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for c in 0..e.m() {
        let support: Vec<usize> = e.approvers(c).iter().copied().filter(|&v| keep[v]).collect();
        match index.get(&support) {
            Some(&i) => {
                let class: &mut CandidateClass = &mut classes[i];
                class.members.push(c);
            }
            None => {
                index.insert(support.clone(), classes.len());
                classes.push(CandidateClass { support, members: vec![c] });
            }
        }
    }
    ClassPartition { classes }
}
