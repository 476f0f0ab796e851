use super::{max_matching, Graph, MatchingMode, Multigraph};
use crate::error::{precondition, Result};

/// Picks exactly `kappa` edges so that every vertex `v` is incident to at
/// least `f[v]` of them. A loop counts once. Returns `Ok(None)` when no such
/// edge set exists.
///
/// Solved through the complement: the removed edges form a simple b-matching
/// with capacity `deg(v) - f(v)`, found as an ordinary maximum matching in a
/// vertex-splitting gadget.
pub fn simple_b_edge_cover_exact(g: &Multigraph, f: &[usize], kappa: usize) -> Result<Option<Vec<usize>>> {
    if f.len() != g.n {
        return Err(precondition("demand vector length differs from vertex count"));
    }
    if g.edges.iter().any(|e| e.len() > 2) {
        return Err(precondition("edge cover needs a multigraph, found a hyperedge"));
    }
    let total = g.edges.len();
    let deg = g.degrees();
    if kappa > total || (0..g.n).any(|v| f[v] > deg[v]) {
        return Ok(None);
    }
    let cap: Vec<usize> = (0..g.n).map(|v| deg[v] - f[v]).collect();

    // copies of each vertex first, then edge nodes
    let mut copy_start = Vec::with_capacity(g.n);
    let mut next = 0;
    for &c in &cap {
        copy_start.push(next);
        next += c;
    }
    let copies = next;
    let mut edge_nodes: Vec<Option<(usize, Option<usize>)>> = Vec::with_capacity(total);
    let mut pairs = Vec::new();
    let mut plain = 0;
    for e in &g.edges {
        match e.as_slice() {
            [] => edge_nodes.push(None),
            [v] => {
                let x = next;
                next += 1;
                for i in 0..cap[*v] {
                    pairs.push((x, copy_start[*v] + i));
                }
                edge_nodes.push(Some((x, None)));
            }
            [u, w] => {
                let (a, b) = (next, next + 1);
                next += 2;
                plain += 1;
                pairs.push((a, b));
                for i in 0..cap[*u] {
                    pairs.push((a, copy_start[*u] + i));
                }
                for i in 0..cap[*w] {
                    pairs.push((b, copy_start[*w] + i));
                }
                edge_nodes.push(Some((a, Some(b))));
            }
            _ => unreachable!(),
        }
    }
    let gadget = Graph::from_edges(next, pairs);
    let matching = max_matching(&gadget, MatchingMode::General);
    let mut mate = vec![None; next];
    for &(u, v) in &matching {
        mate[u] = Some(v);
        mate[v] = Some(u);
    }
    let is_copy = |x: Option<usize>| x.is_some_and(|y| y < copies);
    let mut removable = Vec::new();
    for (i, nodes) in edge_nodes.iter().enumerate() {
        let take = match *nodes {
            None => true,
            Some((x, None)) => is_copy(mate[x]),
            Some((a, Some(b))) => is_copy(mate[a]) && is_copy(mate[b]),
        };
        if take {
            removable.push(i);
        }
    }
    debug_assert_eq!(matching.len(), plain + removable.iter().filter(|&&i| edge_nodes[i].is_some()).count());
    let drop = total - kappa;
    if removable.len() < drop {
        return Ok(None);
    }
    let removed = &removable[removable.len() - drop..];
    let chosen = (0..total).filter(|i| removed.binary_search(i).is_err()).collect();
    Ok(Some(chosen))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn covers(g: &Multigraph, f: &[usize], chosen: &[usize]) -> bool {
        let mut hit = vec![0; g.n];
        for &e in chosen {
            for &v in &g.edges[e] {
                hit[v] += 1;
            }
        }
        (0..g.n).all(|v| hit[v] >= f[v])
    }

    #[test]
    fn parallel_pair() {
        let g = Multigraph::new(2, vec![vec![0, 1], vec![0, 1]]);
        let one = simple_b_edge_cover_exact(&g, &[1, 1], 1).unwrap().unwrap();
        assert_eq!(one.len(), 1);
        assert!(covers(&g, &[1, 1], &one));
        assert_eq!(simple_b_edge_cover_exact(&g, &[1, 1], 2).unwrap(), Some(vec![0, 1]));
        assert_eq!(simple_b_edge_cover_exact(&g, &[1, 1], 3).unwrap(), None);
    }

    #[test]
    fn path_needs_both_edges() {
        let g = Multigraph::new(3, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(simple_b_edge_cover_exact(&g, &[1, 2, 1], 2).unwrap(), Some(vec![0, 1]));
        assert_eq!(simple_b_edge_cover_exact(&g, &[1, 2, 1], 1).unwrap(), None);
        assert_eq!(simple_b_edge_cover_exact(&g, &[1, 3, 1], 2).unwrap(), None);
    }

    #[test]
    fn loops_and_empty_edges() {
        let g = Multigraph::new(1, vec![vec![0], vec![], vec![0]]);
        assert_eq!(simple_b_edge_cover_exact(&g, &[2], 2).unwrap(), Some(vec![0, 2]));
        let one = simple_b_edge_cover_exact(&g, &[1], 1).unwrap().unwrap();
        assert!(one == vec![0] || one == vec![2]);
        assert_eq!(simple_b_edge_cover_exact(&g, &[0], 0).unwrap(), Some(vec![]));
        assert!(simple_b_edge_cover_exact(&Multigraph::new(3, vec![vec![0, 1, 2]]), &[0; 3], 0).is_err());
    }
}
