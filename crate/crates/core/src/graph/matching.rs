use std::collections::VecDeque;

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingMode {
    /// Augmenting paths from one side. Falls back to `General` when the
    /// graph has no 2-colouring.
    Bipartite,
    /// Edmonds' blossom contraction.
    General,
}

/// A maximum-cardinality matching, as `(u, v)` pairs with `u < v`, sorted.
pub fn max_matching(g: &Graph, mode: MatchingMode) -> Vec<(usize, usize)> {
    let mate = match mode {
        MatchingMode::Bipartite => match g.two_coloring() {
            Some(side) => bipartite(g, &side),
            None => blossom(g),
        },
        MatchingMode::General => blossom(g),
    };
    let mut out: Vec<(usize, usize)> =
        mate.iter().enumerate().filter_map(|(u, &m)| m.filter(|&v| u < v).map(|v| (u, v))).collect();
    out.sort_unstable();
    out
}

fn bipartite(g: &Graph, side: &[bool]) -> Vec<Option<usize>> {
    let n = g.n();
    let mut mate = vec![None; n];
    let mut seen = vec![0usize; n];
    let mut stamp = 0;
    for u in 0..n {
        if side[u] || mate[u].is_some() {
            continue;
        }
        stamp += 1;
        augment(g, u, &mut mate, &mut seen, stamp);
    }
    mate
}

fn augment(g: &Graph, u: usize, mate: &mut [Option<usize>], seen: &mut [usize], stamp: usize) -> bool {
    for &w in g.neighbors(u) {
        if seen[w] == stamp {
            continue;
        }
        seen[w] = stamp;
        let free = match mate[w] {
            None => true,
            Some(x) => augment(g, x, mate, seen, stamp),
        };
        if free {
            mate[u] = Some(w);
            mate[w] = Some(u);
            return true;
        }
    }
    false
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

fn blossom(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![None; n],
        parent: vec![None; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // greedy start
    for &(u, v) in g.edges() {
        if b.mate[u].is_none() && b.mate[v].is_none() {
            b.mate[u] = Some(v);
            b.mate[v] = Some(u);
        }
    }
    for root in 0..n {
        if b.mate[root].is_none() {
            if let Some(end) = b.find_path(root) {
                b.flip(end);
            }
        }
    }
    b.mate
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut c: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                None => break,
                Some(m) => a = self.parent[m].expect("alternating tree parent"),
            }
        }
        loop {
            c = self.base[c];
            if seen[c] {
                return c;
            }
            let m = self.mate[c].expect("matched inner vertex");
            c = self.parent[m].expect("alternating tree parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("matched vertex on blossom path");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("alternating tree parent");
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_outer = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn flip(&mut self, mut v: usize) {
        loop {
            let pv = self.parent[v].expect("augmenting path parent");
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(x) => v = x,
                None => break,
            }
        }
    }
}
