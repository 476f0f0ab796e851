use super::{insert_bit, layouts, reconstruct, record, remove_bit, require, Layout, NONE};
use crate::election::{Committee, Instance, Rule};
use crate::graph::{NiceTreeDecomposition, NodeKind};
use crate::rational::Rational;
use crate::result::{SolveResult, Stats};
use crate::Result;

const NEG: i64 = i64::MIN;

/// Ascending submasks of `mask`.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    (0..=mask).filter(move |s| s & !mask == 0)
}

/// CCAV over a nice tree decomposition of the incidence graph, in
/// `O*(4^ω)` time. Table entries are keyed by bag candidates `C'`, the bag
/// votes `V'` that are represented, and `k'`.
pub fn ccav_tw_dp(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<SolveResult> {
    const ALGO: &str = "ccav-tw-dp";
    require(inst, ntd, Rule::Ccav, ALGO)?;
    let t = tables(inst, ntd)?;
    let root = ntd.root();
    let idx = t.lay[root].index(0, 0, inst.k);
    let opt = t.vals[root][idx];
    assert_ne!(opt, NEG, "every k-committee is valid at the root");
    let w = Committee::new(reconstruct(ntd, &t.lay, &t.back, idx));
    debug_assert_eq!(w.len(), inst.k);
    Ok(SolveResult::from_optimum(inst, ALGO, Rational::from_int(opt as i128), w).with_stats(t.stats))
}

/// One entry `D_x(C', V', k')` of the CCAV table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcavEntry {
    pub cands: Vec<usize>,
    pub votes: Vec<usize>,
    pub k: usize,
    /// `None` when no committee is valid for the entry.
    pub value: Option<i64>,
}

/// Every in-domain entry of every node's CCAV table, in node order.
pub fn ccav_table(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<Vec<Vec<CcavEntry>>> {
    require(inst, ntd, Rule::Ccav, "ccav_table")?;
    let t = tables(inst, ntd)?;
    let pick = |items: &[usize], mask: u32| -> Vec<usize> {
        items.iter().enumerate().filter(|&(p, _)| mask >> p & 1 == 1).map(|(_, &c)| c).collect()
    };
    Ok(t.lay
        .iter()
        .zip(&t.vals)
        .map(|(l, vals)| {
            let mut out = Vec::new();
            for cm in 0..1u32 << l.cands.len() {
                for vm in 0..1u32 << l.votes.len() {
                    for kp in (0..=inst.k).filter(|&kp| l.in_domain(cm, kp)) {
                        let v = vals[l.index(cm, vm as usize, kp)];
                        out.push(CcavEntry {
                            cands: pick(&l.cands, cm),
                            votes: pick(&l.votes, vm),
                            k: kp,
                            value: (v != NEG).then_some(v),
                        });
                    }
                }
            }
            out
        })
        .collect())
}

struct Tables {
    lay: Vec<Layout>,
    vals: Vec<Vec<i64>>,
    back: Vec<Vec<[u32; 2]>>,
    stats: Stats,
}

fn tables(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<Tables> {
    let e = &inst.election;
    let m = e.m();
    let k = inst.k;
    let lay = layouts(e, ntd, k, |_| 2)?;
    let mut vals: Vec<Vec<i64>> = Vec::with_capacity(ntd.nodes.len());
    let mut back: Vec<Vec<[u32; 2]>> = Vec::with_capacity(ntd.nodes.len());
    let mut stats = Stats::default();
    let bound = (1u64 << (ntd.width() + 1)) * (k as u64 + 1);

    for (x, node) in ntd.nodes.iter().enumerate() {
        let l = &lay[x];
        let nc = l.cands.len();
        let nv = l.votes.len();
        let mut val = vec![NEG; l.len()];
        let mut bp = vec![[NONE; 2]; l.len()];
        let mut entries = 0u64;
        for cm in 0..1u32 << nc {
            let cs = cm.count_ones() as usize;
            for vm in 0..1u32 << nv {
                let blocked = (0..nv).any(|j| vm >> j & 1 == 0 && l.approved[j] & cm != 0);
                for kp in 0..=k {
                    if !l.in_domain(cm, kp) {
                        continue;
                    }
                    entries += 1;
                    if blocked {
                        continue;
                    }
                    let idx = l.index(cm, vm as usize, kp);
                    let (v, b) = entry(node.kind, &node.children, &lay, &vals, l, m, cm, vm, kp, cs);
                    val[idx] = v;
                    bp[idx] = b;
                }
            }
        }
        assert!(entries <= bound, "node {x} has {entries} entries, bound {bound}");
        record(&mut stats, entries);
        vals.push(val);
        back.push(bp);
    }
    Ok(Tables { lay, vals, back, stats })
}

#[allow(clippy::too_many_arguments)]
fn entry(
    kind: NodeKind,
    children: &[usize],
    lay: &[Layout],
    vals: &[Vec<i64>],
    l: &Layout,
    m: usize,
    cm: u32,
    vm: u32,
    kp: usize,
    cs: usize,
) -> (i64, [u32; 2]) {
    let mut best = (NEG, [NONE; 2]);
    let mut offer = |v: i64, b: [u32; 2]| {
        if v > best.0 {
            best = (v, b);
        }
    };
    match kind {
        NodeKind::Leaf => {
            if kp == 0 {
                offer(0, [NONE; 2]);
            }
        }
        NodeKind::Join => {
            let (y, z) = (children[0], children[1]);
            let (ly, lz) = (&lay[y], &lay[z]);
            for k1 in 0..=kp - cs {
                let k2 = kp - cs - k1;
                for v1 in submasks(vm) {
                    let a = ly.index(cm, v1 as usize, k1 + cs);
                    if vals[y][a] == NEG {
                        continue;
                    }
                    for s in submasks(v1) {
                        let v2 = (vm & !v1) | s;
                        let c = lz.index(cm, v2 as usize, k2 + cs);
                        if vals[z][c] == NEG {
                            continue;
                        }
                        let v = vals[y][a] + vals[z][c] - (v1 & v2).count_ones() as i64;
                        offer(v, [a as u32, c as u32]);
                    }
                }
            }
        }
        NodeKind::Introduce(h) => {
            let y = children[0];
            let ly = &lay[y];
            let mut take = |i: usize, plus: i64| {
                if vals[y][i] != NEG {
                    offer(vals[y][i] + plus, [i as u32, NONE]);
                }
            };
            if h < m {
                let p = l.cands.binary_search(&h).unwrap();
                let rest = remove_bit(cm, p);
                if cm >> p & 1 == 0 {
                    take(ly.index(rest, vm as usize, kp), 0);
                } else {
                    let vx = (0..l.votes.len())
                        .filter(|&j| vm >> j & 1 == 1 && l.approved[j] >> p & 1 == 1)
                        .fold(0u32, |acc, j| acc | 1 << j);
                    for u in submasks(vx) {
                        take(ly.index(rest, (vm & !u) as usize, kp - 1), u.count_ones() as i64);
                    }
                }
            } else {
                let j = l.votes.binary_search(&(h - m)).unwrap();
                let rest = remove_bit(vm, j) as usize;
                if vm >> j & 1 == 0 {
                    take(ly.index(cm, rest, kp), 0);
                } else if l.approved[j] & cm != 0 {
                    take(ly.index(cm, rest, kp), 1);
                }
            }
        }
        NodeKind::Forget(h) => {
            let y = children[0];
            let ly = &lay[y];
            let mut take = |i: usize| {
                if vals[y][i] != NEG {
                    offer(vals[y][i], [i as u32, NONE]);
                }
            };
            if h < m {
                let p = ly.cands.binary_search(&h).unwrap();
                take(ly.index(insert_bit(cm, p, false), vm as usize, kp));
                let outside = (0..l.votes.len()).any(|j| vm >> j & 1 == 0 && ly.approved[j] >> p & 1 == 1);
                if cs != kp && !outside {
                    take(ly.index(insert_bit(cm, p, true), vm as usize, kp));
                }
            } else {
                let j = ly.votes.binary_search(&(h - m)).unwrap();
                take(ly.index(cm, insert_bit(vm, j, false) as usize, kp));
                take(ly.index(cm, insert_bit(vm, j, true) as usize, kp));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;
    use crate::graph::DecompositionMode;
    use crate::oracle::brute_force;
    use crate::treewidth::incidence_decomposition;

    #[test]
    fn e1_k2_d3() {
        let e = e1();
        let ntd = incidence_decomposition(&e, DecompositionMode::Heuristic).unwrap();
        assert_eq!(ntd.width(), 1);
        let inst = Instance::new(e, Rule::Ccav, 2, Rational::from_int(3)).unwrap();
        let r = ccav_tw_dp(&inst, &ntd).unwrap();
        assert!(r.decision && r.is_consistent(&inst));
        assert_eq!(r.opt_score, brute_force(&inst).unwrap().opt_score);
    }

    #[test]
    fn rejects_foreign_decomposition() {
        let e = e1();
        let other = crate::election::Election::new(3, vec![vec![0, 1, 2]]).unwrap();
        let ntd = incidence_decomposition(&other, DecompositionMode::Heuristic).unwrap();
        let inst = Instance::new(e, Rule::Ccav, 1, Rational::from_int(1)).unwrap();
        assert!(matches!(ccav_tw_dp(&inst, &ntd), Err(crate::Error::InvalidDecomposition(_))));
    }
}
