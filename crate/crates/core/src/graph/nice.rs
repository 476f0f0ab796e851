use super::{Graph, TreeDecomposition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nodes are stored in post-order: children precede parents and the last
/// node is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub num_vertices: usize,
    pub nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, child: usize, v: usize) -> usize {
        let mut bag = self.nodes[child].bag.clone();
        let at = bag.binary_search(&v).expect_err("introduced vertex already present");
        bag.insert(at, v);
        self.push(NodeKind::Introduce(v), bag, vec![child])
    }

    fn forget(&mut self, child: usize, v: usize) -> usize {
        let mut bag = self.nodes[child].bag.clone();
        let at = bag.binary_search(&v).expect("forgotten vertex present");
        bag.remove(at);
        self.push(NodeKind::Forget(v), bag, vec![child])
    }

    /// The same tree viewed as a plain decomposition.
    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let mut parent = vec![None; self.nodes.len()];
        for (x, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                parent[c] = Some(x);
            }
        }
        TreeDecomposition {
            num_vertices: self.num_vertices,
            bags: self.nodes.iter().map(|x| x.bag.clone()).collect(),
            parent,
        }
    }

    /// Checks the node-kind rules, empty root and leaf bags, post-order
    /// storage, and the underlying decomposition conditions for `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        if self.nodes.is_empty() {
            return bad("no nodes".into());
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return bad("root bag is not empty".into());
        }
        let mut has_parent = vec![false; self.nodes.len()];
        for (x, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= x || std::mem::replace(&mut has_parent[c], true)) {
                return bad(format!("node {x} has a bad child link"));
            }
            let child_bag = |i: usize| &self.nodes[node.children[i]].bag;
            let ok = match node.kind {
                NodeKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    node.children.len() == 1 && child_bag(0).binary_search(&v).is_err() && {
                        let mut b = child_bag(0).clone();
                        b.push(v);
                        b.sort_unstable();
                        b == node.bag
                    }
                }
                NodeKind::Forget(v) => {
                    node.children.len() == 1 && node.bag.binary_search(&v).is_err() && {
                        let mut b = node.bag.clone();
                        b.push(v);
                        b.sort_unstable();
                        &b == child_bag(0)
                    }
                }
                NodeKind::Join => node.children.len() == 2 && child_bag(0) == &node.bag && child_bag(1) == &node.bag,
            };
            if !ok {
                return bad(format!("node {x} violates its {:?} rule", node.kind));
            }
        }
        if has_parent.iter().filter(|&&p| !p).count() != 1 {
            return bad("nodes do not form a single tree".into());
        }
        self.as_tree_decomposition().validate(g)
    }
}

/// Converts a decomposition into a nice one of the same width.
pub fn to_nice(td: &TreeDecomposition) -> NiceTreeDecomposition {
    let mut out = NiceTreeDecomposition { num_vertices: td.num_vertices, nodes: Vec::new() };
    let children = td.children();
    let root = td.root();
    let top = build(td, &children, root, &mut out);
    let mut cur = top;
    for &v in &td.bags[root] {
        cur = out.forget(cur, v);
    }
    if out.nodes.is_empty() {
        out.push(NodeKind::Leaf, Vec::new(), Vec::new());
    }
    out
}

/// Returns a node whose bag equals `td.bags[x]` and whose subtree covers `x`'s subtree.
fn build(td: &TreeDecomposition, children: &[Vec<usize>], x: usize, out: &mut NiceTreeDecomposition) -> usize {
    let target = &td.bags[x];
    let mut heads = Vec::new();
    for &c in &children[x] {
        let mut cur = build(td, children, c, out);
        let from = td.bags[c].clone();
        for &v in from.iter().filter(|v| target.binary_search(v).is_err()) {
            cur = out.forget(cur, v);
        }
        for &v in target.iter().filter(|v| from.binary_search(v).is_err()) {
            cur = out.introduce(cur, v);
        }
        heads.push(cur);
    }
    if heads.is_empty() {
        let mut cur = out.push(NodeKind::Leaf, Vec::new(), Vec::new());
        for &v in target {
            cur = out.introduce(cur, v);
        }
        return cur;
    }
    let mut cur = heads[0];
    for &h in &heads[1..] {
        cur = out.push(NodeKind::Join, target.clone(), vec![cur, h]);
    }
    cur
}
