use super::{insert_bit, layouts, reconstruct, record, remove_bit, require, Layout, NONE};
use crate::election::{Committee, Election, Instance, Rule};
use crate::graph::{NiceTreeDecomposition, NodeKind};
use crate::rational::HarmonicScale;
use crate::result::{SolveResult, Stats};
use crate::Result;

const NEG: i128 = i128::MIN;

/// What distinguishes the two programs. MAV runs the PAV recurrences with
/// zero gains, reading `0` as "1" and `NEG` as "0", and filters forgotten
/// votes by the distance test.
enum Mode {
    Pav(HarmonicScale),
    Mav { k: i128, d: i128 },
}

impl Mode {
    fn f(&self, i: usize) -> i128 {
        match self {
            Mode::Pav(s) => s.h(i),
            Mode::Mav { .. } => 0,
        }
    }

    fn marginal(&self, i: usize) -> i128 {
        match self {
            Mode::Pav(s) => s.marginal(i),
            Mode::Mav { .. } => 0,
        }
    }

    /// Whether a vote approving `size` candidates may be forgotten with `t`
    /// of them in the committee.
    fn admits(&self, size: usize, t: usize) -> bool {
        match *self {
            Mode::Pav(_) => true,
            Mode::Mav { k, d } => 2 * t as i128 >= k + size as i128 - d,
        }
    }

    fn g(&self, mu: &[usize]) -> i128 {
        mu.iter().map(|&i| self.f(i)).sum()
    }
}

/// Calls `f` on every vector `t` with `t[j] <= limits[j]`, last digit slowest.
fn odometer(limits: &[usize], mut f: impl FnMut(&[usize])) {
    let mut t = vec![0; limits.len()];
    loop {
        f(&t);
        let mut j = 0;
        while j < t.len() && t[j] == limits[j] {
            t[j] = 0;
            j += 1;
        }
        if j == t.len() {
            return;
        }
        t[j] += 1;
    }
}

/// PAV over a nice tree decomposition of the incidence graph, FPT in
/// `k + ω`. Entries are keyed by bag candidates `C'`, `k'`, and
/// `μ(v) = |v ∩ w|` for each bag vote; values are exact PAV scores over
/// the votes seen so far, scaled by `inst.pav_scale()`.
pub fn pav_tw_dp(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<SolveResult> {
    const ALGO: &str = "pav-tw-dp";
    require(inst, ntd, Rule::Pav, ALGO)?;
    let scale = inst.pav_scale();
    let (opt, w, stats) = run(inst, ntd, &Mode::Pav(scale.clone()))?;
    let opt = scale.to_rational(opt.expect("every k-committee is valid at the root"));
    Ok(SolveResult::from_optimum(inst, ALGO, opt, Committee::new(w)).with_stats(stats))
}

/// MAV over a nice tree decomposition of the incidence graph, FPT in
/// `k + ω`. A vote `h` may be forgotten only if `2μ(h) >= k + |h| - d`.
pub fn mav_tw_dp(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<SolveResult> {
    const ALGO: &str = "mav-tw-dp";
    require(inst, ntd, Rule::Mav, ALGO)?;
    let d = inst.int_threshold();
    if d < 0 {
        return Ok(SolveResult::no(ALGO));
    }
    let (found, w, stats) = run(inst, ntd, &Mode::Mav { k: inst.k as i128, d })?;
    let r = match found {
        Some(_) => SolveResult::yes(ALGO, Committee::new(w)),
        None => SolveResult::no(ALGO),
    };
    Ok(r.with_stats(stats))
}

fn run(inst: &Instance, ntd: &NiceTreeDecomposition, mode: &Mode) -> Result<(Option<i128>, Vec<usize>, Stats)> {
    let e = &inst.election;
    let k = inst.k;
    let lay = layouts(e, ntd, k, |v| e.vote(v).len().min(k) + 1)?;
    let mut vals: Vec<Vec<i128>> = Vec::with_capacity(ntd.nodes.len());
    let mut back: Vec<Vec<[u32; 2]>> = Vec::with_capacity(ntd.nodes.len());
    let mut stats = Stats::default();
    let mut mu = Vec::new();

    for (x, node) in ntd.nodes.iter().enumerate() {
        let l = &lay[x];
        let mut val = vec![NEG; l.len()];
        let mut bp = vec![[NONE; 2]; l.len()];
        let mut entries = 0u64;
        let cx = Ctx { e, mode, lay: &lay, vals: &vals, l, children: &node.children };
        for cm in 0..1u32 << l.cands.len() {
            for state in 0..l.states {
                l.decode(state, &mut mu);
                for kp in 0..=k {
                    if !l.in_domain(cm, kp) {
                        continue;
                    }
                    entries += 1;
                    let idx = l.index(cm, state, kp);
                    let (v, b) = cx.entry(node.kind, cm, state, &mu, kp);
                    val[idx] = v;
                    bp[idx] = b;
                }
            }
        }
        record(&mut stats, entries);
        vals.push(val);
        back.push(bp);
    }

    let root = ntd.root();
    let idx = lay[root].index(0, 0, k);
    let best = vals[root][idx];
    if best == NEG {
        return Ok((None, Vec::new(), stats));
    }
    let w = reconstruct(ntd, &lay, &back, idx);
    debug_assert_eq!(w.len(), k);
    Ok((Some(best), w, stats))
}

struct Ctx<'a> {
    e: &'a Election,
    mode: &'a Mode,
    lay: &'a [Layout],
    vals: &'a [Vec<i128>],
    l: &'a Layout,
    children: &'a [usize],
}

impl Ctx<'_> {
    fn entry(&self, kind: NodeKind, cm: u32, state: usize, mu: &[usize], kp: usize) -> (i128, [u32; 2]) {
        let (l, vals, mode) = (self.l, self.vals, self.mode);
        let m = self.e.m();
        let cs = cm.count_ones() as usize;
        let mut best = (NEG, [NONE; 2]);
        let mut offer = |v: i128, b: [u32; 2]| {
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
                let (y, z) = (self.children[0], self.children[1]);
                let (ly, lz) = (&self.lay[y], &self.lay[z]);
                let shared: Vec<usize> = l.approved.iter().map(|a| (a & cm).count_ones() as usize).collect();
                if mu.iter().zip(&shared).any(|(u, c)| u < c) {
                    return best;
                }
                let rest: Vec<usize> = mu.iter().zip(&shared).map(|(u, c)| u - c).collect();
                let gx = mode.g(mu);
                let mut m1 = vec![0; mu.len()];
                let mut m2 = vec![0; mu.len()];
                for k1 in 0..=kp - cs {
                    let k2 = kp - cs - k1;
                    odometer(&rest, |t| {
                        for j in 0..t.len() {
                            m1[j] = t[j] + shared[j];
                            m2[j] = rest[j] - t[j] + shared[j];
                        }
                        let a = ly.index(cm, ly.encode(&m1), k1 + cs);
                        let c = lz.index(cm, lz.encode(&m2), k2 + cs);
                        if vals[y][a] != NEG && vals[z][c] != NEG {
                            let v = vals[y][a] - mode.g(&m1) + vals[z][c] - mode.g(&m2) + gx;
                            offer(v, [a as u32, c as u32]);
                        }
                    });
                }
            }
            NodeKind::Introduce(h) => {
                let y = self.children[0];
                let ly = &self.lay[y];
                let mut take = |i: usize, plus: i128| {
                    if vals[y][i] != NEG {
                        offer(vals[y][i] + plus, [i as u32, NONE]);
                    }
                };
                if h < m {
                    let p = l.cands.binary_search(&h).unwrap();
                    let rest = remove_bit(cm, p);
                    if cm >> p & 1 == 0 {
                        take(ly.index(rest, state, kp), 0);
                    } else {
                        let mut child = mu.to_vec();
                        let mut plus = 0;
                        for j in (0..mu.len()).filter(|&j| l.approved[j] >> p & 1 == 1) {
                            if mu[j] == 0 {
                                return best;
                            }
                            child[j] -= 1;
                            plus += mode.marginal(mu[j]);
                        }
                        take(ly.index(rest, ly.encode(&child), kp - 1), plus);
                    }
                } else {
                    let j = l.votes.binary_search(&(h - m)).unwrap();
                    if mu[j] != (l.approved[j] & cm).count_ones() as usize {
                        return best;
                    }
                    let mut child = mu.to_vec();
                    child.remove(j);
                    take(ly.index(cm, ly.encode(&child), kp), mode.f(mu[j]));
                }
            }
            NodeKind::Forget(h) => {
                let y = self.children[0];
                let ly = &self.lay[y];
                let mut take = |i: usize| {
                    if vals[y][i] != NEG {
                        offer(vals[y][i], [i as u32, NONE]);
                    }
                };
                if h < m {
                    let p = ly.cands.binary_search(&h).unwrap();
                    take(ly.index(insert_bit(cm, p, false), state, kp));
                    if cs != kp {
                        take(ly.index(insert_bit(cm, p, true), state, kp));
                    }
                } else {
                    let j = ly.votes.binary_search(&(h - m)).unwrap();
                    let size = self.e.vote(h - m).len();
                    let mut child = mu.to_vec();
                    child.insert(j, 0);
                    for t in (0..ly.radix[j]).filter(|&t| mode.admits(size, t)) {
                        child[j] = t;
                        take(ly.index(cm, ly.encode(&child), kp));
                    }
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;
    use crate::graph::DecompositionMode;
    use crate::oracle::brute_force;
    use crate::rational::Rational;
    use crate::treewidth::incidence_decomposition;

    fn solve(rule: Rule, k: usize, d: Rational) -> (Instance, SolveResult) {
        let e = e1();
        let ntd = incidence_decomposition(&e, DecompositionMode::Heuristic).unwrap();
        let inst = Instance::new(e, rule, k, d).unwrap();
        let r = match rule {
            Rule::Pav => pav_tw_dp(&inst, &ntd),
            _ => mav_tw_dp(&inst, &ntd),
        };
        (inst, r.unwrap())
    }

    #[test]
    fn pav_e1() {
        let (inst, r) = solve(Rule::Pav, 2, Rational::new(7, 2));
        assert!(r.decision && r.is_consistent(&inst));
        assert_eq!(r.opt_score, brute_force(&inst).unwrap().opt_score);
    }

    #[test]
    fn mav_e1() {
        let (inst, r) = solve(Rule::Mav, 1, Rational::from_int(2));
        assert!(r.decision && r.is_consistent(&inst));
        let (_, r) = solve(Rule::Mav, 1, Rational::from_int(1));
        assert!(!r.decision);
    }

    #[test]
    fn mav_negative_threshold_without_votes() {
        let e = Election::new(2, vec![]).unwrap();
        let ntd = incidence_decomposition(&e, DecompositionMode::Heuristic).unwrap();
        let inst = Instance::new(e, Rule::Mav, 1, Rational::from_int(-1)).unwrap();
        assert!(!mav_tw_dp(&inst, &ntd).unwrap().decision);
        let inst = inst.with_threshold(Rational::from_int(0));
        assert!(mav_tw_dp(&inst, &ntd).unwrap().decision);
    }

    #[test]
    fn odometer_order() {
        let mut seen = Vec::new();
        odometer(&[1, 2], |t| seen.push(t.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![1, 0]);
    }
}
