#![allow(dead_code)]

use committee_core::graph::{simple_b_edge_cover_exact, to_nice, Graph, Multigraph, NodeKind, TreeDecomposition};
use committee_core::oracle::brute_force;
use committee_core::portfolio::{generate_with, GeneratorConfig};
use committee_core::{Election, Instance, Rational, Rule, SolveResult};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random election with `m <= max_m`, `n <= max_n` and optional caps.
pub fn election(rng: &mut ChaCha8Rng, max_m: usize, max_n: usize, dv: Option<usize>, dc: Option<usize>) -> Election {
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(0..=max_n);
    let cfg = GeneratorConfig { m, n, max_dv: dv, max_dc: dc, min_vote: 0 };
    generate_with(&cfg, rng).expect("caps without a minimum size are always feasible")
}

/// Thresholds one unit either side of the optimum, plus a fractional probe for PAV.
pub fn thresholds(rule: Rule, opt: Rational) -> Vec<Rational> {
    let mut ds = vec![opt - Rational::ONE, opt, opt + Rational::ONE];
    if rule == Rule::Pav {
        ds.push(opt + Rational::new(1, 12));
        ds.push(opt - Rational::new(1, 12));
    }
    ds
}

/// Every `k` and threshold sweep for one election and rule.
pub fn sweep(e: &Election, rule: Rule) -> Vec<(Instance, SolveResult)> {
    let mut out = Vec::new();
    for k in 0..=e.m() {
        let base = Instance::new(e.clone(), rule, k, Rational::ZERO).unwrap();
        let opt = brute_force(&base).unwrap().opt_score.unwrap();
        for d in thresholds(rule, opt) {
            let inst = base.with_threshold(d);
            let truth = brute_force(&inst).unwrap();
            out.push((inst, truth));
        }
    }
    out
}

/// Compares a solver's answer with the oracle's; returns a description of the first mismatch.
pub fn agree(inst: &Instance, truth: &SolveResult, got: &SolveResult) -> Result<(), String> {
    let dump = || format!("{inst:?}\n oracle: {truth}\n solver: {got}");
    if got.decision != truth.decision {
        return Err(format!("decision differs\n{}", dump()));
    }
    if let Some(s) = got.opt_score {
        if Some(s) != truth.opt_score {
            return Err(format!("optimum differs\n{}", dump()));
        }
    }
    if !got.is_consistent(inst) {
        return Err(format!("witness invalid\n{}", dump()));
    }
    Ok(())
}

/// Largest matching by trying every edge subset.
pub fn exhaustive_matching_size(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let picked: Vec<(usize, usize)> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        if picked.len() > best && is_matching(g, &picked) {
            best = picked.len();
        }
    }
    best
}

pub fn is_matching(g: &Graph, m: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.n()];
    m.iter().all(|&(u, v)| {
        g.has_edge(u, v) && !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true)
    })
}

/// Smallest vertex cover by trying every vertex subset.
pub fn min_vertex_cover(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|mask| g.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(u32::count_ones)
        .min()
        .unwrap_or(0) as usize
}

pub fn random_simple_graph(rng: &mut ChaCha8Rng, max_n: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut g = Graph::new(n);
    let want = rng.gen_range(0..=max_edges.min(n * (n - 1) / 2));
    while g.edge_count() < want {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            g.add_edge(u, v);
        }
    }
    g
}

/// Multigraph with loops, empty edges and parallel edges.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_n);
    let edges = (0..rng.gen_range(0..=max_edges))
        .map(|_| {
            let mut e: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..n)).collect();
            e.sort_unstable();
            e.dedup();
            e
        })
        .collect();
    Multigraph::new(n, edges)
}

pub fn covers(g: &Multigraph, f: &[usize], picked: &[usize]) -> bool {
    let mut got = vec![0; g.n];
    for &e in picked {
        for &v in &g.edges[e] {
            got[v] += 1;
        }
    }
    got.iter().zip(f).all(|(a, b)| a >= b)
}

/// Whether some `kappa` edges cover every `v` at least `f[v]` times.
pub fn exhaustive_bcover(g: &Multigraph, f: &[usize], kappa: usize) -> bool {
    (0u32..1 << g.edges.len()).any(|mask| {
        mask.count_ones() as usize == kappa
            && covers(g, f, &(0..g.edges.len()).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
    })
}

/// Checks `simple_b_edge_cover_exact` against enumeration, including the returned edge set.
pub fn bcover_agrees(g: &Multigraph, f: &[usize], kappa: usize) -> Result<(), String> {
    let got = simple_b_edge_cover_exact(g, f, kappa).map_err(|e| e.to_string())?;
    let truth = exhaustive_bcover(g, f, kappa);
    match got {
        None if !truth => Ok(()),
        Some(mut picked) if truth => {
            let len = picked.len();
            picked.sort_unstable();
            picked.dedup();
            if picked.len() == kappa
                && len == kappa
                && picked.iter().all(|&e| e < g.edges.len())
                && covers(g, f, &picked)
            {
                Ok(())
            } else {
                Err(format!("invalid cover {picked:?} for {g:?} f={f:?} kappa={kappa}"))
            }
        }
        got => Err(format!("cover answer {got:?} but enumeration says {truth} for {g:?} f={f:?} kappa={kappa}")),
    }
}

/// Converts a decomposition of `g` and checks the result.
pub fn nice_agrees(g: &Graph, td: &TreeDecomposition) -> Result<(), String> {
    td.validate(g).map_err(|e| format!("input decomposition invalid: {e}"))?;
    let nice = to_nice(td);
    nice.validate(g).map_err(|e| e.to_string())?;
    if nice.width() != td.width() {
        return Err(format!("width {} became {}", td.width(), nice.width()));
    }
    let mut forgotten = vec![0; g.n()];
    for node in &nice.nodes {
        if let NodeKind::Forget(v) = node.kind {
            forgotten[v] += 1;
        }
    }
    if forgotten.iter().any(|&c| c != 1) {
        return Err(format!("forget counts {forgotten:?}"));
    }
    Ok(())
}
