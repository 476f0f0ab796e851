//! Graph problems encoded as committee elections, and the partial hitting
//! set bridge for CCAV.
//!
//! Every graph reduction makes vertex `i` candidate `i` and edge `j` (in
//! input order) a vote approving its two endpoints.
//!
//! Graphs are read and written as edge lists with 1-based vertices:
//!
//! ```text
//! c optional comment
//! p 4 4
//! e 1 2
//! e 2 3
//! e 3 4
//! e 4 1
//! ```

use rand::seq::SliceRandom;
use rand::Rng;

use crate::election::{Election, Instance, Rule};
use crate::error::{Error, Result};
use crate::format;
use crate::graph::Graph;
use crate::rational::Rational;

fn edge_election(g: &Graph) -> Election {
    let votes = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
    Election::new(g.n(), votes).expect("edge endpoints are vertices")
}

/// Vertex cover of size `kappa` as MAV with `k = d = kappa`: a committee is
/// within distance `kappa` of an edge vote exactly when it contains an endpoint.
pub fn vc_to_mav(g: &Graph, kappa: usize) -> Result<Instance> {
    Instance::new(edge_election(g), Rule::Mav, kappa, Rational::from(kappa))
}

/// Independent set of size `kappa` as CCAV with `k = m - kappa` and `d = |E|`.
pub fn ids_to_ccav(g: &Graph, kappa: usize) -> Result<Instance> {
    if kappa > g.n() {
        return Err(Error::InvalidInstance(format!("kappa = {kappa} exceeds {} vertices", g.n())));
    }
    Instance::new(edge_election(g), Rule::Ccav, g.n() - kappa, Rational::from(g.edge_count()))
}

/// Degree of every vertex of a regular graph, or `None` if degrees differ.
/// The empty graph counts as 0-regular.
pub fn regular_degree(g: &Graph) -> Option<usize> {
    let r = if g.n() == 0 { 0 } else { g.degree(0) };
    (0..g.n()).all(|v| g.degree(v) == r).then_some(r)
}

/// Deleting `kappa` vertices of an `r`-regular graph to leave at most `ell`
/// edges, as PAV with `k = m - kappa` and `d = (m - kappa)·r - ell/2`.
pub fn mvs_to_pav(g: &Graph, kappa: usize, ell: usize) -> Result<Instance> {
    let r = regular_degree(g).ok_or(Error::NotRegular)?;
    if kappa >= g.n() {
        return Err(Error::InvalidInstance(format!("kappa = {kappa} must be below {} vertices", g.n())));
    }
    let k = g.n() - kappa;
    let d = Rational::from(k * r) - Rational::new(ell as i128, 2);
    Instance::new(edge_election(g), Rule::Pav, k, d)
}

/// Covering at least `ell` edges with `kappa` vertices as CCAV with
/// `k = kappa` and `d = ell`.
pub fn pvc_to_ccav(g: &Graph, kappa: usize, ell: usize) -> Result<Instance> {
    Instance::new(edge_election(g), Rule::Ccav, kappa, Rational::from(ell))
}

/// Partial hitting set: is there an `a`-subset of `0..universe` hitting at
/// least `b` of `sets`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhsInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    pub a: usize,
    pub b: usize,
}

impl PhsInstance {
    /// Sorts and de-duplicates every set.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, a: usize, b: usize) -> Result<Self> {
        let e = Election::new(universe, sets)?;
        if a > universe {
            return Err(Error::InvalidInstance(format!("a = {a} exceeds universe of {universe}")));
        }
        Ok(PhsInstance { universe, sets: e.votes().to_vec(), a, b })
    }
}

/// Either side of the CCAV / partial hitting set correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhsPayload {
    Ccav(Instance),
    Phs(PhsInstance),
}

/// Maps a CCAV instance to partial hitting set (`U = C`, sets = votes,
/// `a = k`, `b = d`) or back. CCAV thresholds must be non-negative integers.
pub fn ccav_phs_convert(payload: &PhsPayload) -> Result<PhsPayload> {
    match payload {
        PhsPayload::Ccav(inst) => {
            if inst.rule != Rule::Ccav {
                return Err(crate::error::precondition(format!("expected a CCAV instance, got {}", inst.rule)));
            }
            if !inst.d.is_integer() || inst.d.is_negative() {
                return Err(Error::NotRepresentable(format!("threshold {} is not a hit count", inst.d)));
            }
            let e = &inst.election;
            Ok(PhsPayload::Phs(PhsInstance {
                universe: e.m(),
                sets: e.votes().to_vec(),
                a: inst.k,
                b: inst.d.numer() as usize,
            }))
        }
        PhsPayload::Phs(p) => {
            let e = Election::new(p.universe, p.sets.clone())?;
            Ok(PhsPayload::Ccav(Instance::new(e, Rule::Ccav, p.a, Rational::from(p.b))?))
        }
    }
}

/// `phs a b` followed by the `.appr` election body with the universe as
/// candidates and the sets as votes.
pub fn write_phs(p: &PhsInstance) -> String {
    let e = Election::new(p.universe, p.sets.clone()).expect("validated on construction");
    format!("phs {} {}\n{}", p.a, p.b, format::write_election(&e))
}

pub fn parse_phs(text: &str) -> Result<PhsInstance> {
    let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.into() };
    let mut lines: Vec<&str> = text.split('\n').collect();
    let at =
        lines.iter().position(|l| !l.starts_with('#') && !l.trim().is_empty()).ok_or_else(|| perr(0, "empty input"))?;
    let toks: Vec<&str> = lines[at].split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "phs" {
        return Err(perr(at + 1, "expected `phs a b`"));
    }
    let num = |t: &str| t.parse::<usize>().map_err(|_| perr(at + 1, "expected a non-negative integer"));
    let (a, b) = (num(toks[1])?, num(toks[2])?);
    lines[at] = "";
    let body = format::parse(&lines.join("\n"))?;
    if body.header.is_some() {
        return Err(perr(0, "unexpected rule line in a hitting set file"));
    }
    let e = body.election;
    PhsInstance::new(e.m(), e.votes().to_vec(), a, b)
}

/// Writes `g` in the edge-list format.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses the edge-list format. Loops, repeated edges and a wrong edge
/// count are errors.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut g: Option<Graph> = None;
    let mut expected = 0;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| perr(ln, format!("bad number {t:?}")));
        match toks.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", n, m] => {
                if g.is_some() {
                    return Err(perr(ln, "duplicate `p` line".into()));
                }
                g = Some(Graph::new(num(n)?));
                expected = num(m)?;
            }
            ["e", u, v] => {
                let graph = g.as_mut().ok_or_else(|| perr(ln, "edge before `p` line".into()))?;
                let (u, v) = (num(u)?, num(v)?);
                if u == 0 || v == 0 || u > graph.n() || v > graph.n() {
                    return Err(perr(ln, format!("vertex out of range 1..={}", graph.n())));
                }
                if u == v {
                    return Err(perr(ln, "loop".into()));
                }
                if !graph.add_edge(u - 1, v - 1) {
                    return Err(perr(ln, "repeated edge".into()));
                }
            }
            _ => return Err(perr(ln, format!("unrecognized line {raw:?}"))),
        }
    }
    let g = g.ok_or_else(|| perr(0, "missing `p` line".into()))?;
    if g.edge_count() != expected {
        return Err(perr(0, format!("header announces {expected} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

/// `G(n, p)` random graph.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniform-ish random `r`-regular graph on `n` vertices by the pairing
/// model with restarts.
pub fn random_regular_graph(n: usize, r: usize, rng: &mut impl Rng) -> Result<Graph> {
    if (n * r) % 2 == 1 || (n > 0 && r >= n) {
        return Err(Error::Infeasible(format!("no {r}-regular graph on {n} vertices")));
    }
    'attempt: for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        stubs.shuffle(rng);
        let mut g = Graph::new(n);
        for pair in stubs.chunks(2) {
            if !g.add_edge(pair[0], pair[1]) {
                continue 'attempt;
            }
        }
        return Ok(g);
    }
    Err(Error::Infeasible(format!("gave up sampling a {r}-regular graph on {n} vertices")))
}

fn vertex_subsets(n: usize, size: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    assert!(n <= 30, "graph-side search limited to 30 vertices");
    let mut found = false;
    crate::oracle::for_each_combination(n, size, |idx| {
        found = f(idx.iter().fold(0u64, |m, &v| m | 1 << v));
        !found
    });
    found
}

fn covered(g: &Graph, set: u64) -> usize {
    g.edges().iter().filter(|&&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1).count()
}

/// Does `g` have a vertex cover of exactly `kappa` vertices?
pub fn has_vertex_cover(g: &Graph, kappa: usize) -> bool {
    vertex_subsets(g.n(), kappa, |s| covered(g, s) == g.edge_count())
}

/// Does `g` have an independent set of `kappa` vertices?
pub fn has_independent_set(g: &Graph, kappa: usize) -> bool {
    vertex_subsets(g.n(), kappa, |s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
}

/// Can deleting `kappa` vertices leave at most `ell` edges?
pub fn has_vertex_deletion(g: &Graph, kappa: usize, ell: usize) -> bool {
    vertex_subsets(g.n(), kappa, |s| g.edge_count() - covered(g, s) <= ell)
}

/// Do some `kappa` vertices cover at least `ell` edges?
pub fn has_partial_cover(g: &Graph, kappa: usize, ell: usize) -> bool {
    vertex_subsets(g.n(), kappa, |s| covered(g, s) >= ell)
}
