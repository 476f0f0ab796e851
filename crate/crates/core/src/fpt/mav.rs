use std::collections::HashSet;

use crate::classes::class_partition;
use crate::election::{Committee, Instance, Rule};
use crate::error::{precondition, Error, Result};
use crate::graph::{incidence_graph, max_matching, MatchingMode};
use crate::oracle::for_each_combination;
use crate::result::{SolveResult, Stats};

/// Largest number of votes the class-count solvers accept.
pub const CLASS_VOTE_LIMIT: usize = 16;

/// A group of interchangeable candidates for count search.
#[derive(Clone, Debug)]
pub(crate) struct CountClass {
    /// Local indices of the constrained votes approving the class.
    pub support: Vec<usize>,
    pub cap: usize,
}

/// Finds counts `x[i] <= classes[i].cap` summing to `total` such that every
/// constrained vote `v` gets at least `need[v]` from the classes it supports.
pub(crate) fn cover_search(
    classes: &[CountClass],
    total: usize,
    need: &[i64],
    stats: &mut Stats,
) -> Option<Vec<usize>> {
    let mut suffix_cap = vec![0usize; classes.len() + 1];
    for i in (0..classes.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + classes[i].cap;
    }
    // reach[i][v]: most vote v can still gain from classes i.., ignoring the total
    let mut reach = vec![vec![0i64; need.len()]; classes.len() + 1];
    for i in (0..classes.len()).rev() {
        reach[i] = reach[i + 1].clone();
        for &v in &classes[i].support {
            reach[i][v] += classes[i].cap as i64;
        }
    }
    let mut x = vec![0usize; classes.len()];
    let mut deficit: Vec<i64> = need.iter().map(|&n| n.max(0)).collect();
    let mut dead = HashSet::new();
    let found = search(classes, 0, total, &mut deficit, &mut x, &suffix_cap, &reach, &mut dead, stats);
    found.then_some(x)
}

#[allow(clippy::too_many_arguments)]
fn search(
    classes: &[CountClass],
    i: usize,
    left: usize,
    deficit: &mut Vec<i64>,
    x: &mut [usize],
    suffix_cap: &[usize],
    reach: &[Vec<i64>],
    dead: &mut HashSet<(usize, usize, Vec<i64>)>,
    stats: &mut Stats,
) -> bool {
    stats.nodes += 1;
    if suffix_cap[i] < left {
        return false;
    }
    let left_i = left as i64;
    if deficit.iter().zip(&reach[i]).any(|(&d, &r)| d > r.min(left_i)) {
        return false;
    }
    if i == classes.len() {
        return left == 0;
    }
    let key = (i, left, deficit.clone());
    if dead.contains(&key) {
        return false;
    }
    let class = &classes[i];
    let hi = class.cap.min(left);
    for take in (0..=hi).rev() {
        x[i] = take;
        for &v in &class.support {
            deficit[v] = (deficit[v] - take as i64).max(0);
        }
        let ok = search(classes, i + 1, left - take, deficit, x, suffix_cap, reach, dead, stats);
        if ok {
            return true;
        }
        for &v in &class.support {
            deficit[v] = key.2[v];
        }
    }
    x[i] = 0;
    stats.entries += 1;
    dead.insert(key);
    false
}

fn require_mav(inst: &Instance, solver: &str) -> Result<()> {
    if inst.rule != Rule::Mav {
        return Err(precondition(format!("{solver} solves mav, got {}", inst.rule)));
    }
    Ok(())
}

/// Number of approved candidates `v` needs in a `k`-committee to be within
/// distance `d`.
fn mav_need(size: usize, k: usize, d: i128) -> i64 {
    let gap = size as i128 + k as i128 - d;
    gap.div_euclid(2) as i64 + (gap.rem_euclid(2)) as i64
}

/// MAV by searching class counts. With `votes` given, only those votes are
/// constrained (candidates are grouped by their approvals among them).
pub fn mav_by_classes(inst: &Instance, votes: Option<&[usize]>) -> Result<SolveResult> {
    const ALGO: &str = "mav-classes";
    require_mav(inst, ALGO)?;
    let e = &inst.election;
    let considered: Vec<usize> = votes.map_or_else(|| (0..e.n()).collect(), <[usize]>::to_vec);
    if considered.len() > CLASS_VOTE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "class search limited to {CLASS_VOTE_LIMIT} votes, got {}",
            considered.len()
        )));
    }
    let d = inst.int_threshold();
    if d < 0 {
        return Ok(SolveResult::no(ALGO));
    }
    let partition = class_partition(e, Some(&considered));
    let mut local = vec![usize::MAX; e.n()];
    for (i, &v) in considered.iter().enumerate() {
        local[v] = i;
    }
    let classes: Vec<CountClass> = partition
        .classes
        .iter()
        .map(|c| CountClass { support: c.support.iter().map(|&v| local[v]).collect(), cap: c.count() })
        .collect();
    let need: Vec<i64> = considered.iter().map(|&v| mav_need(e.vote(v).len(), inst.k, d)).collect();
    let mut stats = Stats::default();
    let result = match cover_search(&classes, inst.k, &need, &mut stats) {
        Some(x) => {
            let members = partition.classes.iter().zip(&x).flat_map(|(c, &t)| c.members[..t].to_vec()).collect();
            SolveResult::yes(ALGO, Committee::new(members))
        }
        None => SolveResult::no(ALGO),
    };
    Ok(result.with_stats(stats))
}

/// MAV after discarding all but the `k * delta_c + 1` largest votes.
#[allow(non_snake_case)]
pub fn mav_k_deltaC(inst: &Instance) -> Result<SolveResult> {
    require_mav(inst, "mav_k_deltaC")?;
    let e = &inst.election;
    let keep = inst.k * e.max_approvals() + 1;
    let mut r = if e.n() <= keep {
        mav_by_classes(inst, None)?
    } else {
        let mut order: Vec<usize> = (0..e.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(e.vote(v).len()));
        order.truncate(keep);
        order.sort_unstable();
        mav_by_classes(inst, Some(&order))?
    };
    r.algorithm = "mav-k-delta-c".into();
    Ok(r)
}

/// MAV by guessing which matched candidates of a maximum matching of the
/// incidence graph join the committee, then searching class counts over the
/// remaining candidates.
pub fn mav_by_matching(inst: &Instance) -> Result<SolveResult> {
    const ALGO: &str = "mav-matching";
    require_mav(inst, ALGO)?;
    let e = &inst.election;
    let d = inst.int_threshold();
    if d < 0 {
        return Ok(SolveResult::no(ALGO));
    }
    let g = incidence_graph(e);
    let matching = max_matching(&g.graph, MatchingMode::Bipartite);
    let mut matched_c: Vec<usize> = matching.iter().map(|&(a, _)| a).collect();
    matched_c.sort_unstable();
    let mut matched_v: Vec<usize> = matching.iter().map(|&(_, b)| b - g.m).collect();
    matched_v.sort_unstable();
    if matched_v.len() > CLASS_VOTE_LIMIT {
        return Err(Error::BudgetExceeded(format!("matching of size {} too large", matched_v.len())));
    }
    let outside: Vec<usize> = (0..e.n()).filter(|v| matched_v.binary_search(v).is_err()).collect();
    let free: Vec<usize> = (0..e.m()).filter(|c| matched_c.binary_search(c).is_err()).collect();

    // classes of the unmatched candidates; their approvers are all matched votes
    let mut local = vec![usize::MAX; e.n()];
    for (i, &v) in matched_v.iter().enumerate() {
        local[v] = i;
    }
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for &c in &free {
        let support: Vec<usize> = e.approvers(c).iter().map(|&v| local[v]).collect();
        match groups.iter_mut().find(|(s, _)| *s == support) {
            Some((_, members)) => members.push(c),
            None => groups.push((support, vec![c])),
        }
    }
    let classes: Vec<CountClass> =
        groups.iter().map(|(s, m)| CountClass { support: s.clone(), cap: m.len() }).collect();

    let k = inst.k;
    let mut stats = Stats::default();
    let mut witness = None;
    'outer: for size in 0..=k.min(matched_c.len()) {
        let mut hit = None;
        for_each_combination(matched_c.len(), size, |idx| {
            stats.subinstances += 1;
            let chosen: Vec<usize> = idx.iter().map(|&i| matched_c[i]).collect();
            let inter = |v: usize| e.vote(v).iter().filter(|c| chosen.binary_search(c).is_ok()).count() as i128;
            let rejected = outside.iter().any(|&v| e.vote(v).len() as i128 + k as i128 - 2 * inter(v) > d);
            if rejected {
                return true;
            }
            let need: Vec<i64> = matched_v.iter().map(|&v| mav_need(e.vote(v).len(), k, d) - inter(v) as i64).collect();
            if let Some(x) = cover_search(&classes, k - size, &need, &mut stats) {
                let mut w = chosen;
                for ((_, members), &t) in groups.iter().zip(&x) {
                    w.extend_from_slice(&members[..t]);
                }
                hit = Some(Committee::new(w));
                return false;
            }
            true
        });
        if hit.is_some() {
            witness = hit;
            break 'outer;
        }
    }
    let r = match witness {
        Some(w) => SolveResult::yes(ALGO, w),
        None => SolveResult::no(ALGO),
    };
    Ok(r.with_stats(stats))
}
