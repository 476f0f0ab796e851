use super::require_rule;
use crate::election::{pav_scaled, Committee, Instance, Rule};
use crate::error::{precondition, Result};
use crate::graph::{classify_component, Component, ComponentKind, Multigraph};
use crate::rational::HarmonicScale;
use crate::result::{SolveResult, Stats};

/// Optimal PAV `j`-committee among the candidates (edges) of one component
/// shaped as a path, cycle, hairstick or double-headed hairstick.
pub fn pav_component_optimal(g: &Multigraph, comp: &Component, j: usize) -> Result<Committee> {
    if j > comp.edges.len() {
        return Err(precondition(format!("component has {} candidates, asked for {j}", comp.edges.len())));
    }
    let nv = comp.vertices.len();
    let loops: Vec<usize> = comp.edges.iter().copied().filter(|&c| g.is_loop(c)).collect();
    match classify_component(g, comp) {
        ComponentKind::Path | ComponentKind::Cycle => Ok(walk_optimal(g, comp, &comp.edges, j)),
        ComponentKind::Hairstick => {
            if j == nv {
                return Ok(Committee::new(comp.edges.clone()));
            }
            let rest: Vec<usize> = comp.edges.iter().copied().filter(|&c| c != loops[0]).collect();
            Ok(walk_optimal(g, comp, &rest, j))
        }
        ComponentKind::DHHairstick => {
            if j == nv + 1 {
                return Ok(Committee::new(comp.edges.clone()));
            }
            let rest: Vec<usize> = comp.edges.iter().copied().filter(|&c| c != loops[0]).collect();
            if j == nv {
                return Ok(Committee::new(rest));
            }
            let rest: Vec<usize> = rest.into_iter().filter(|&c| c != loops[1]).collect();
            Ok(walk_optimal(g, comp, &rest, j))
        }
        ComponentKind::Other => Err(precondition("component is not a path, cycle or hairstick")),
    }
}

/// Path or cycle given by loop-free `edges` over `comp`'s vertices.
fn walk_optimal(g: &Multigraph, comp: &Component, edges: &[usize], j: usize) -> Committee {
    let walk = walk_edges(g, &comp.vertices, edges);
    let mut matching: Vec<usize> = walk.iter().copied().step_by(2).take(comp.vertices.len() / 2).collect();
    matching.sort_unstable();
    if j <= matching.len() {
        return Committee::new(matching[..j].to_vec());
    }
    let mut rest: Vec<usize> = edges.iter().copied().filter(|c| !matching.contains(c)).collect();
    rest.sort_unstable();
    let mut w = matching.clone();
    if comp.vertices.len() % 2 == 1 {
        let saturated: Vec<usize> = matching.iter().flat_map(|&c| g.edges[c].iter().copied()).collect();
        let free = *comp.vertices.iter().find(|v| !saturated.contains(v)).expect("odd component has a free vertex");
        let first = *rest.iter().find(|&&c| g.edges[c].contains(&free)).expect("free vertex has an edge");
        w.push(first);
        rest.retain(|&c| c != first);
    }
    let need = j - w.len();
    w.extend_from_slice(&rest[..need]);
    Committee::new(w)
}

/// Edges of a path or cycle in walk order, starting from the smallest
/// endpoint (path) or smallest vertex (cycle) along its smallest edge.
fn walk_edges(g: &Multigraph, vertices: &[usize], edges: &[usize]) -> Vec<usize> {
    if edges.is_empty() {
        return Vec::new();
    }
    let mut incident: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    for &c in edges {
        for &v in &g.edges[c] {
            incident.entry(v).or_default().push(c);
        }
    }
    for list in incident.values_mut() {
        list.sort_unstable();
    }
    let start = vertices
        .iter()
        .copied()
        .find(|v| incident.get(v).is_some_and(|l| l.len() == 1))
        .unwrap_or_else(|| *vertices.iter().min().unwrap());
    let mut walk = Vec::with_capacity(edges.len());
    let mut used = std::collections::HashSet::new();
    let mut at = start;
    while walk.len() < edges.len() {
        let c = *incident[&at].iter().find(|c| !used.contains(*c)).expect("walk continues");
        used.insert(c);
        walk.push(c);
        at = *g.edges[c].iter().find(|&&x| x != at).unwrap_or(&at);
    }
    walk
}

/// PAV when every vote approves at most two candidates and every candidate
/// is approved at most twice: per-component optima combined by a knapsack
/// over committee sizes.
pub fn pav_deg22(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "pav-deg22";
    require_rule(inst, Rule::Pav, ALGO)?;
    let e = &inst.election;
    if e.max_vote_size() > 2 || e.max_approvals() > 2 {
        return Err(precondition("pav_deg22 needs votes and approval counts of at most two"));
    }
    let g = Multigraph::from_election(e);
    let scale = HarmonicScale::new(2);
    // each group lists its optimal committees by size, with scaled scores
    let mut groups: Vec<Vec<(i128, Committee)>> = Vec::new();
    for comp in g.components() {
        let mut opts = Vec::with_capacity(comp.edges.len() + 1);
        for j in 0..=comp.edges.len() {
            let w = pav_component_optimal(&g, &comp, j)?;
            opts.push((pav_scaled(e, w.members(), &scale), w));
        }
        groups.push(opts);
    }
    let idle: Vec<usize> = (0..e.m()).filter(|&c| e.approvers(c).is_empty()).collect();
    groups.push((0..=idle.len()).map(|j| (0, Committee::new(idle[..j].to_vec()))).collect());

    let k = inst.k;
    let neg = i128::MIN;
    let mut table = vec![neg; k + 1];
    table[0] = 0;
    let mut choice: Vec<Vec<usize>> = Vec::with_capacity(groups.len());
    let mut entries = 0u64;
    for opts in &groups {
        let mut next = vec![neg; k + 1];
        let mut pick = vec![0usize; k + 1];
        for j in 0..=k {
            for (jp, (s, _)) in opts.iter().enumerate().take(j + 1) {
                let prev = table[j - jp];
                if prev != neg && prev + s > next[j] {
                    next[j] = prev + s;
                    pick[j] = jp;
                }
            }
            entries += 1;
        }
        table = next;
        choice.push(pick);
    }
    let best = table[k];
    assert!(best != neg, "k <= m guarantees a feasible split");
    let mut members = Vec::with_capacity(k);
    let mut j = k;
    for (opts, pick) in groups.iter().zip(&choice).rev() {
        let jp = pick[j];
        members.extend_from_slice(opts[jp].1.members());
        j -= jp;
    }
    let stats = Stats { entries, subinstances: groups.len() as u64, ..Stats::default() };
    Ok(SolveResult::from_optimum(inst, ALGO, scale.to_rational(best), Committee::new(members)).with_stats(stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{score, tests::e1, Election};
    use crate::oracle::brute_force;
    use crate::rational::Rational;

    fn single(e: &Election) -> (Multigraph, Component) {
        let g = Multigraph::from_election(e);
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        (g, comps[0].clone())
    }

    #[test]
    fn component_examples() {
        let e = Election::new(1, vec![vec![0], vec![0]]).unwrap();
        let (g, c) = single(&e);
        let w = pav_component_optimal(&g, &c, 1).unwrap();
        assert_eq!(score(&e, Rule::Pav, &w), Rational::from_int(2));

        let e = Election::new(2, vec![vec![0, 1], vec![1]]).unwrap();
        let (g, c) = single(&e);
        assert_eq!(pav_component_optimal(&g, &c, 1).unwrap(), Committee::new(vec![1]));

        let e = Election::new(4, vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let (g, c) = single(&e);
        let w = pav_component_optimal(&g, &c, 2).unwrap();
        assert_eq!(score(&e, Rule::Pav, &w), Rational::from_int(4));
    }

    #[test]
    fn deg22_matches_oracle_on_e1() {
        for k in 0..=3 {
            let i = Instance::new(e1(), Rule::Pav, k, Rational::ZERO).unwrap();
            assert_eq!(pav_deg22(&i).unwrap().opt_score, brute_force(&i).unwrap().opt_score);
        }
    }

    #[test]
    fn deg22_picks_better_component() {
        let e = Election::new(2, vec![vec![0], vec![0], vec![1]]).unwrap();
        let i = Instance::new(e, Rule::Pav, 1, Rational::from_int(2)).unwrap();
        let r = pav_deg22(&i).unwrap();
        assert_eq!(r.witness, Some(Committee::new(vec![0])));
    }
}
