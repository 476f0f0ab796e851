//! Dynamic programs over a nice tree decomposition of the incidence graph.
//!
//! All three programs share one table layout. An entry of node `x` is keyed
//! by a set `C'` of bag candidates (a bitmask), a per-vote digit for every
//! bag vote, and a committee size `k'`. For CCAV the digit records whether
//! the vote is represented; for PAV and MAV it records `|v ∩ w|`.
//! Every entry keeps pointers to the child entries it was derived from, and
//! the committee is read back as the union of `C'` over the chosen entries.

mod ccav;
mod pav_mav;

pub use ccav::{ccav_table, ccav_tw_dp, CcavEntry};
pub use pav_mav::{mav_tw_dp, pav_tw_dp};

use crate::election::{Election, Instance, Rule};
use crate::error::{precondition, Error, Result};
use crate::graph::{incidence_graph, to_nice, tree_decomposition, DecompositionMode, NiceTreeDecomposition, NodeKind};
use crate::result::Stats;

/// Largest table a single node may allocate.
pub const TABLE_LIMIT: usize = 1 << 24;

const NONE: u32 = u32::MAX;

/// Nice decomposition of the incidence graph of `e`.
pub fn incidence_decomposition(e: &Election, mode: DecompositionMode) -> Result<NiceTreeDecomposition> {
    let g = incidence_graph(e);
    Ok(to_nice(&tree_decomposition(&g.graph, mode)?))
}

/// Key space of one node's table.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub cands: Vec<usize>,
    pub votes: Vec<usize>,
    pub radix: Vec<usize>,
    pub stride: Vec<usize>,
    pub states: usize,
    /// Per bag vote, the mask of bag candidates it approves.
    pub approved: Vec<u32>,
    /// `|C(T_x)|`.
    pub ct: usize,
    pub k1: usize,
}

impl Layout {
    pub fn len(&self) -> usize {
        (1usize << self.cands.len()) * self.states * self.k1
    }

    #[inline]
    pub fn index(&self, cmask: u32, state: usize, kp: usize) -> usize {
        (cmask as usize * self.states + state) * self.k1 + kp
    }

    #[inline]
    pub fn cmask_of(&self, idx: usize) -> u32 {
        (idx / self.k1 / self.states) as u32
    }

    pub fn decode(&self, state: usize, out: &mut Vec<usize>) {
        out.clear();
        out.extend((0..self.votes.len()).map(|j| state / self.stride[j] % self.radix[j]));
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.stride).map(|(d, s)| d * s).sum()
    }

    pub fn in_domain(&self, cmask: u32, kp: usize) -> bool {
        cmask.count_ones() as usize <= kp && kp <= self.ct.min(self.k1 - 1)
    }
}

pub(crate) fn remove_bit(mask: u32, p: usize) -> u32 {
    let low = mask & ((1 << p) - 1);
    (mask >> (p + 1) << p) | low
}

pub(crate) fn insert_bit(mask: u32, p: usize, bit: bool) -> u32 {
    let low = mask & ((1 << p) - 1);
    (mask >> p << (p + 1)) | ((bit as u32) << p) | low
}

pub(crate) fn require(inst: &Instance, ntd: &NiceTreeDecomposition, rule: Rule, solver: &str) -> Result<()> {
    if inst.rule != rule {
        return Err(precondition(format!("{solver} solves {rule}, got {}", inst.rule)));
    }
    ntd.validate(&incidence_graph(&inst.election).graph)
}

/// Builds the layout of every node. `radix(v)` is the digit range of vote `v`.
pub(crate) fn layouts(
    e: &Election,
    ntd: &NiceTreeDecomposition,
    k: usize,
    radix: impl Fn(usize) -> usize,
) -> Result<Vec<Layout>> {
    let m = e.m();
    let mut out: Vec<Layout> = Vec::with_capacity(ntd.nodes.len());
    for node in &ntd.nodes {
        let split = node.bag.partition_point(|&x| x < m);
        let cands = node.bag[..split].to_vec();
        let votes: Vec<usize> = node.bag[split..].iter().map(|&x| x - m).collect();
        if cands.len() >= 31 {
            return Err(Error::BudgetExceeded(format!("bag with {} candidates", cands.len())));
        }
        let radix: Vec<usize> = votes.iter().map(|&v| radix(v)).collect();
        let mut stride = Vec::with_capacity(votes.len());
        let mut states = 1usize;
        for &r in &radix {
            stride.push(states);
            states = states
                .checked_mul(r)
                .filter(|&s| s <= TABLE_LIMIT)
                .ok_or_else(|| Error::BudgetExceeded("table too large".into()))?;
        }
        let approved = votes
            .iter()
            .map(|&v| {
                cands.iter().enumerate().filter(|&(_, &c)| e.approves(v, c)).fold(0u32, |acc, (p, _)| acc | 1 << p)
            })
            .collect();
        let ct = match node.children.as_slice() {
            [] => 0,
            [y] => out[*y].ct + matches!(node.kind, NodeKind::Introduce(h) if h < m) as usize,
            [y, z] => out[*y].ct + out[*z].ct - cands.len(),
            _ => unreachable!("validated decomposition"),
        };
        let layout = Layout { cands, votes, radix, stride, states, approved, ct, k1: k + 1 };
        if layout.len() > TABLE_LIMIT {
            return Err(Error::BudgetExceeded(format!("table of {} entries", layout.len())));
        }
        out.push(layout);
    }
    Ok(out)
}

/// Collects the committee from the root entry `idx` by following back pointers.
pub(crate) fn reconstruct(
    ntd: &NiceTreeDecomposition,
    layouts: &[Layout],
    back: &[Vec<[u32; 2]>],
    idx: usize,
) -> Vec<usize> {
    let mut w = Vec::new();
    let mut stack = vec![(ntd.root(), idx)];
    while let Some((x, i)) = stack.pop() {
        let l = &layouts[x];
        let cm = l.cmask_of(i);
        w.extend(l.cands.iter().enumerate().filter(|&(p, _)| cm >> p & 1 == 1).map(|(_, &c)| c));
        for (slot, &child) in ntd.nodes[x].children.iter().enumerate() {
            let b = back[x][i][slot];
            debug_assert_ne!(b, NONE);
            stack.push((child, b as usize));
        }
    }
    w.sort_unstable();
    w.dedup();
    w
}

pub(crate) fn record(stats: &mut Stats, entries: u64) {
    stats.nodes += 1;
    stats.entries += entries;
    stats.max_entries_per_node = stats.max_entries_per_node.max(entries);
}
