use crate::election::Election;

/// Votes as vertices, candidates as (hyper)edges over their approvers.
///
/// Edge `c` has endpoint list `V(c)`: empty for an unapproved candidate, one
/// vertex for a loop, more than two for a hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Vertex (vote) indices, sorted.
    pub vertices: Vec<usize>,
    /// Edge (candidate) indices, sorted.
    pub edges: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
    Hairstick,
    DHHairstick,
    Other,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Self {
        Multigraph { n, edges }
    }

    pub fn from_election(e: &Election) -> Self {
        let edges = (0..e.m()).map(|c| e.approvers(c).to_vec()).collect();
        Multigraph { n: e.n(), edges }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].len() == 1
    }

    /// Number of edges incident to `v`; a loop counts once.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Connected components containing at least one vertex, ordered by smallest
    /// vertex. Edges without endpoints belong to no component.
    pub fn components(&self) -> Vec<Component> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut slot = vec![usize::MAX; self.n];
        let mut comps: Vec<Component> = Vec::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push(Component { vertices: Vec::new(), edges: Vec::new() });
            }
            comps[slot[r]].vertices.push(v);
        }
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(&v) = e.first() {
                let r = find(&mut parent, v);
                comps[slot[r]].edges.push(i);
            }
        }
        comps
    }
}

/// Shape of a connected component of a multigraph.
pub fn classify_component(g: &Multigraph, comp: &Component) -> ComponentKind {
    if comp.edges.iter().any(|&e| g.edges[e].len() > 2) {
        return ComponentKind::Other;
    }
    let nv = comp.vertices.len();
    let pos = |v: usize| comp.vertices.binary_search(&v).expect("vertex in component");
    let mut deg = vec![0usize; nv];
    let mut loops = Vec::new();
    let mut plain = 0;
    for &e in &comp.edges {
        match g.edges[e].as_slice() {
            [v] => loops.push(pos(*v)),
            [u, w] => {
                deg[pos(*u)] += 1;
                deg[pos(*w)] += 1;
                plain += 1;
            }
            _ => return ComponentKind::Other,
        }
    }
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let is_path = plain + 1 == nv && max_deg <= 2;
    match loops.len() {
        0 if is_path => ComponentKind::Path,
        0 if plain == nv && deg.iter().all(|&d| d == 2) => ComponentKind::Cycle,
        1 if is_path && deg[loops[0]] <= 1 => ComponentKind::Hairstick,
        2 if is_path && nv == 1 => ComponentKind::DHHairstick,
        2 if is_path && loops[0] != loops[1] && deg[loops[0]] <= 1 && deg[loops[1]] <= 1 => ComponentKind::DHHairstick,
        _ => ComponentKind::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(n: usize, edges: Vec<Vec<usize>>) -> ComponentKind {
        let g = Multigraph::new(n, edges);
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        classify_component(&g, &comps[0])
    }

    #[test]
    fn shapes() {
        assert_eq!(kind(1, vec![vec![0]]), ComponentKind::Hairstick);
        assert_eq!(kind(3, vec![vec![0, 1], vec![1, 2]]), ComponentKind::Path);
        assert_eq!(kind(2, vec![vec![0], vec![0, 1], vec![1]]), ComponentKind::DHHairstick);
        assert_eq!(kind(1, vec![vec![0], vec![0]]), ComponentKind::DHHairstick);
        assert_eq!(kind(2, vec![vec![0, 1], vec![0, 1]]), ComponentKind::Cycle);
        assert_eq!(kind(3, vec![vec![0, 1], vec![1, 2], vec![2, 0]]), ComponentKind::Cycle);
        assert_eq!(kind(1, vec![]), ComponentKind::Path);
        assert_eq!(kind(3, vec![vec![0, 1, 2]]), ComponentKind::Other);
        assert_eq!(kind(3, vec![vec![0, 1], vec![1, 2], vec![1]]), ComponentKind::Other);
        assert_eq!(kind(2, vec![vec![0], vec![1], vec![0, 1], vec![1]]), ComponentKind::Other);
    }

    #[test]
    fn components_skip_empty_edges() {
        let g = Multigraph::new(3, vec![vec![], vec![0, 2], vec![1]]);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], Component { vertices: vec![0, 2], edges: vec![1] });
        assert_eq!(comps[1], Component { vertices: vec![1], edges: vec![2] });
        assert_eq!(g.degrees(), vec![1, 1, 1]);
    }
}
