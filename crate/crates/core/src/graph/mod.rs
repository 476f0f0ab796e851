//! Graphs derived from elections, matchings, edge covers and tree decompositions.

mod bcover;
mod decomposition;
mod matching;
mod multigraph;
mod nice;

pub use bcover::simple_b_edge_cover_exact;
pub use decomposition::{elimination_decomposition, tree_decomposition, DecompositionMode, TreeDecomposition};
pub use matching::{max_matching, MatchingMode};
pub use multigraph::{classify_component, Component, ComponentKind, Multigraph};
pub use nice::{to_nice, NiceNode, NiceTreeDecomposition, NodeKind};

use crate::election::Election;

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Returns false if the edge was a loop or already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n() && v < self.n(), "edge endpoint out of range");
        if u == v || self.adj[u].contains(&v) {
            return false;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push((u.min(v), u.max(v)));
        true
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// A proper 2-colouring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}

/// The bipartite candidate/vote incidence graph. Candidate `c` is vertex `c`,
/// vote `v` is vertex `m + v`.
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    pub m: usize,
    pub n: usize,
    pub graph: Graph,
}

impl IncidenceGraph {
    pub fn candidate_vertex(&self, c: usize) -> usize {
        c
    }

    pub fn vote_vertex(&self, v: usize) -> usize {
        self.m + v
    }

    pub fn is_candidate(&self, x: usize) -> bool {
        x < self.m
    }

    pub fn vote_of(&self, x: usize) -> Option<usize> {
        x.checked_sub(self.m)
    }
}

pub fn incidence_graph(e: &Election) -> IncidenceGraph {
    let m = e.m();
    let mut graph = Graph::new(m + e.n());
    for (i, v) in e.votes().iter().enumerate() {
        for &c in v {
            graph.add_edge(c, m + i);
        }
    }
    IncidenceGraph { m, n: e.n(), graph }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;

    #[test]
    fn incidence_of_e1() {
        let g = incidence_graph(&e1());
        assert_eq!(g.graph.n(), 6);
        assert_eq!(g.graph.edge_count(), 5);
        for (c, v) in [(0, 0), (1, 0), (1, 1), (2, 1), (0, 2)] {
            assert!(g.graph.has_edge(c, g.vote_vertex(v)));
        }
        assert!(g.graph.two_coloring().is_some());
    }

    #[test]
    fn incidence_degenerate() {
        let g = incidence_graph(&Election::empty());
        assert_eq!((g.graph.n(), g.graph.edge_count()), (0, 0));
        let star = incidence_graph(&Election::new(4, vec![vec![0, 1, 2, 3]]).unwrap());
        assert_eq!(star.graph.degree(star.vote_vertex(0)), 4);
        assert_eq!(star.graph.edge_count(), 4);
    }
}
