use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::Graph;
use crate::error::{precondition, Error, Result};

/// Largest graph accepted by [`DecompositionMode::ExactSmall`].
pub const EXACT_SMALL_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionMode {
    /// Min-fill elimination, ties by degree then index.
    Heuristic,
    /// Optimal width by dynamic programming over vertex subsets.
    ExactSmall,
}

/// A rooted tree decomposition. Exactly one node has no parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub num_vertices: usize,
    /// Sorted bags.
    pub bags: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn root(&self) -> usize {
        self.parent.iter().position(Option::is_none).expect("decomposition has a root")
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.bags.len()];
        for (x, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                ch[p].push(x);
            }
        }
        ch
    }

    /// Checks that the nodes form a tree and that vertex coverage, edge
    /// coverage and connectivity of occurrences all hold for `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        let p = self.bags.len();
        if p == 0 || self.parent.len() != p {
            return bad("no nodes or parent table size mismatch".into());
        }
        if self.num_vertices != g.n() {
            return bad(format!("built for {} vertices, graph has {}", self.num_vertices, g.n()));
        }
        if self.parent.iter().filter(|x| x.is_none()).count() != 1 {
            return bad("expected exactly one root".into());
        }
        for x in 0..p {
            let mut seen = 0;
            let mut y = x;
            while let Some(q) = self.parent[y] {
                if q >= p || seen > p {
                    return bad(format!("node {x} does not reach the root"));
                }
                y = q;
                seen += 1;
            }
        }
        for (x, bag) in self.bags.iter().enumerate() {
            if bag.windows(2).any(|w| w[0] >= w[1]) || bag.iter().any(|&v| v >= g.n()) {
                return bad(format!("bag {x} is unsorted or out of range"));
            }
        }
        let contains = |x: usize, v: usize| self.bags[x].binary_search(&v).is_ok();
        for v in 0..g.n() {
            let holders: Vec<usize> = (0..p).filter(|&x| contains(x, v)).collect();
            if holders.is_empty() {
                return bad(format!("vertex {v} is in no bag"));
            }
            let linked = holders.iter().filter(|&&x| self.parent[x].is_some_and(|q| contains(q, v))).count();
            if linked + 1 != holders.len() {
                return bad(format!("bags holding vertex {v} are not connected"));
            }
        }
        for &(u, v) in g.edges() {
            if !(0..p).any(|x| contains(x, u) && contains(x, v)) {
                return bad(format!("edge {u}-{v} is in no bag"));
            }
        }
        Ok(())
    }

    /// PACE `.td` text, 1-based.
    pub fn to_pace(&self) -> String {
        let mut out = String::new();
        let max_bag = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        writeln!(out, "s td {} {} {}", self.bags.len(), max_bag, self.num_vertices).unwrap();
        for (i, bag) in self.bags.iter().enumerate() {
            write!(out, "b {}", i + 1).unwrap();
            for v in bag {
                write!(out, " {}", v + 1).unwrap();
            }
            out.push('\n');
        }
        for (x, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                writeln!(out, "{} {}", p + 1, x + 1).unwrap();
            }
        }
        out
    }

    /// Reads PACE `.td` text and roots the tree at bag 1.
    pub fn from_pace(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let nums = |line: usize, toks: &[&str]| -> Result<Vec<usize>> {
            toks.iter().map(|t| t.parse::<usize>().map_err(|_| err(line, &format!("bad integer {t:?}")))).collect()
        };
        let mut header = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut tree_edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            match toks.first() {
                None | Some(&"c") => {}
                Some(&"s") => {
                    if toks.len() != 5 || toks[1] != "td" {
                        return Err(err(line, "expected `s td <bags> <maxbag> <vertices>`"));
                    }
                    let h = nums(line, &toks[2..])?;
                    bags = vec![None; h[0]];
                    header = Some((h[0], h[2]));
                }
                Some(&"b") => {
                    let (nb, nv) = header.ok_or_else(|| err(line, "bag before header"))?;
                    let vals = nums(line, &toks[1..])?;
                    let id = *vals.first().ok_or_else(|| err(line, "missing bag id"))?;
                    if id == 0 || id > nb {
                        return Err(err(line, "bag id out of range"));
                    }
                    let mut bag = Vec::new();
                    for &v in &vals[1..] {
                        if v == 0 || v > nv {
                            return Err(err(line, "vertex out of range"));
                        }
                        bag.push(v - 1);
                    }
                    bag.sort_unstable();
                    bag.dedup();
                    bags[id - 1] = Some(bag);
                }
                Some(_) => {
                    let (nb, _) = header.ok_or_else(|| err(line, "edge before header"))?;
                    let vals = nums(line, &toks)?;
                    if vals.len() != 2 || vals.iter().any(|&x| x == 0 || x > nb) {
                        return Err(err(line, "expected two bag ids"));
                    }
                    tree_edges.push((vals[0] - 1, vals[1] - 1));
                }
            }
        }
        let (nb, nv) = header.ok_or_else(|| err(0, "missing header"))?;
        let bags: Vec<Vec<usize>> = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| err(0, &format!("bag {} missing", i + 1))))
            .collect::<Result<_>>()?;
        if nb == 0 {
            return Err(err(0, "decomposition has no bags"));
        }
        if tree_edges.len() + 1 != nb {
            return Err(Error::InvalidDecomposition("tree edge count must be bags - 1".into()));
        }
        let mut adj = vec![Vec::new(); nb];
        for &(a, b) in &tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; nb];
        let mut seen = vec![false; nb];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDecomposition("bags do not form a tree".into()));
        }
        Ok(TreeDecomposition { num_vertices: nv, bags, parent })
    }
}

pub fn tree_decomposition(g: &Graph, mode: DecompositionMode) -> Result<TreeDecomposition> {
    let order = match mode {
        DecompositionMode::Heuristic => min_fill_order(g),
        DecompositionMode::ExactSmall => {
            if g.n() > EXACT_SMALL_LIMIT {
                return Err(precondition(format!(
                    "exact decomposition limited to {EXACT_SMALL_LIMIT} vertices, got {}",
                    g.n()
                )));
            }
            exact_order(g)
        }
    };
    Ok(elimination_decomposition(g, &order))
}

fn adjacency_sets(g: &Graph) -> Vec<BTreeSet<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect()
}

fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj = adjacency_sets(g);
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !adj[a].contains(&b) {
                        fill += 1;
                    }
                }
            }
            let key = (fill, nb.len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let v = best.expect("a live vertex remains").2;
        eliminate(&mut adj, v);
        alive[v] = false;
        order.push(v);
    }
    order
}

fn eliminate(adj: &mut [BTreeSet<usize>], v: usize) {
    let nb: Vec<usize> = adj[v].iter().copied().collect();
    for (i, &a) in nb.iter().enumerate() {
        adj[a].remove(&v);
        for &b in &nb[i + 1..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    adj[v].clear();
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn q_size(g: &Graph, s: u32, v: usize) -> usize {
    let n = g.n();
    let mut inside = s & !(1 << v);
    let mut visited: u32 = 1 << v;
    let mut found: u32 = 0;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            let bit = 1u32 << y;
            if visited & bit != 0 {
                continue;
            }
            visited |= bit;
            if inside & bit != 0 {
                inside &= !bit;
                stack.push(y);
            } else {
                found |= bit;
            }
        }
    }
    debug_assert!(n <= 32);
    found.count_ones() as usize
}

fn exact_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let full = (1u32 << n) - 1;
    let mut tw = vec![i64::MAX; 1 << n];
    let mut pick = vec![usize::MAX; 1 << n];
    tw[0] = -1;
    for s in 1..=full {
        for v in (0..n).filter(|v| s & (1 << v) != 0) {
            let rest = s & !(1 << v);
            let cost = tw[rest as usize].max(q_size(g, rest, v) as i64);
            if cost < tw[s as usize] {
                tw[s as usize] = cost;
                pick[s as usize] = v;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = pick[s as usize];
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    order
}

/// Decomposition induced by eliminating vertices in `order`: vertex `v` gets
/// the bag `{v} ∪ N(v)` at its elimination time, attached to the bag of the
/// first-eliminated neighbour among those.
pub fn elimination_decomposition(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition { num_vertices: 0, bags: vec![Vec::new()], parent: vec![None] };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj = adjacency_sets(g);
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for (i, &v) in order.iter().enumerate() {
        let mut bag: Vec<usize> = adj[v].iter().copied().collect();
        parent[i] = bag.iter().map(|&u| pos[u]).min();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        eliminate(&mut adj, v);
    }
    let last = n - 1;
    for p in parent.iter_mut().take(last) {
        if p.is_none() {
            *p = Some(last);
        }
    }
    TreeDecomposition { num_vertices: n, bags, parent }
}
