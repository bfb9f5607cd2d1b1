//! Cographs and their canonical cotrees.
//!
//! A cotree has one leaf per vertex and internal nodes labeled 0 (disjoint
//! union of the children) or 1 (join of the children). Two vertices are
//! adjacent iff their lowest common ancestor is labeled 1. Requiring labels
//! to alternate along every root-leaf path makes the cotree unique.
//!
//! Every [`Cotree`] is annotated on construction:
//! - `code`: equal codes iff the subtrees are isomorphic as labeled rooted
//!   trees (interned ids of `(label, sorted child codes)`);
//! - `orbit`: the root is alone; two other nodes share an orbit iff their
//!   parents do and their codes agree. Together with depth this is the
//!   orbit partition of the tree's automorphism group.
//!
//! Children are stored sorted by code, so isomorphic siblings are adjacent
//! and matching the i-th child of one subtree with the i-th child of an
//! isomorphic one yields an isomorphism.

mod automorphism;
mod generate;

pub use automorphism::{aut_generators, c_homogeneous_search, has_nice_automorphism, nice_automorphism, two_homogeneous_partition};
pub use generate::{enumerate_connected_cographs, enumerate_connected_cotrees, random_cotree, MAX_ENUMERATION_N};

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Disjoint union.
    Union = 0,
    /// Join.
    Join = 1,
}

impl Label {
    pub fn flip(self) -> Label {
        match self {
            Label::Union => Label::Join,
            Label::Join => Label::Union,
        }
    }

    fn digit(self) -> char {
        match self {
            Label::Union => '0',
            Label::Join => '1',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(usize),
    Internal(Label),
}

/// A node before annotation: either a leaf carrying a vertex id or an
/// internal node listing child indices into the same vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawNode {
    Leaf(usize),
    Internal(Label, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub kind: NodeKind,
    pub children: Vec<usize>,
    pub parent: Option<usize>,
    pub depth: usize,
    pub leaves: usize,
    pub code: usize,
    pub orbit: usize,
}

impl Node {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<Node>,
    root: usize,
    leaf_of: Vec<usize>,
}

impl Cotree {
    /// Canonical cotree of `g`, by recursive splitting into components
    /// (0-nodes) or co-components (1-nodes).
    pub fn from_graph(g: &Graph) -> Result<Cotree> {
        let n = g.n();
        if n == 0 {
            return Err(Error::BadN(0));
        }
        let mut raw: Vec<RawNode> = Vec::new();
        let mut member = vec![false; n];
        let mut mark = vec![false; n];
        // (vertex set, slot in raw reserved for it)
        raw.push(RawNode::Leaf(usize::MAX));
        let mut work = vec![((0..n).collect::<Vec<usize>>(), 0usize)];
        while let Some((set, slot)) = work.pop() {
            if set.len() == 1 {
                raw[slot] = RawNode::Leaf(set[0]);
                continue;
            }
            for &v in &set {
                member[v] = true;
            }
            let mut parts = split(g, &set, &member, &mut mark, false);
            let mut label = Label::Union;
            if parts.len() == 1 {
                parts = split(g, &set, &member, &mut mark, true);
                label = Label::Join;
            }
            for &v in &set {
                member[v] = false;
            }
            if parts.len() == 1 {
                return Err(Error::NotCograph);
            }
            let mut children = Vec::with_capacity(parts.len());
            for part in parts {
                let child = raw.len();
                raw.push(RawNode::Leaf(usize::MAX));
                children.push(child);
                work.push((part, child));
            }
            raw[slot] = RawNode::Internal(label, children);
        }
        Cotree::from_raw(raw, 0)
    }

    /// Validates and annotates a tree given as raw nodes.
    pub fn from_raw(raw: Vec<RawNode>, root: usize) -> Result<Cotree> {
        let bad = |msg: &str| Error::MalformedCotree(msg.to_string());
        if root >= raw.len() {
            return Err(bad("root out of range"));
        }
        let leaf_count = raw.iter().filter(|r| matches!(r, RawNode::Leaf(_))).count();
        let mut leaf_of = vec![usize::MAX; leaf_count];
        let mut nodes: Vec<Node> = Vec::with_capacity(raw.len());
        for r in &raw {
            let (kind, children) = match r {
                RawNode::Leaf(v) => (NodeKind::Leaf(*v), Vec::new()),
                RawNode::Internal(label, ch) => (NodeKind::Internal(*label), ch.clone()),
            };
            nodes.push(Node {
                kind,
                children,
                parent: None,
                depth: 0,
                leaves: 0,
                code: 0,
                orbit: 0,
            });
        }

        // Top-down pass: parents, depths, alternation, reachability.
        let mut order = Vec::with_capacity(nodes.len());
        let mut seen = vec![false; nodes.len()];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            match nodes[v].kind {
                NodeKind::Leaf(x) => {
                    if x >= leaf_count || leaf_of[x] != usize::MAX {
                        return Err(bad("leaf vertex ids must be a permutation of 0..n"));
                    }
                    leaf_of[x] = v;
                }
                NodeKind::Internal(label) => {
                    if nodes[v].children.len() < 2 {
                        return Err(bad("internal node with fewer than two children"));
                    }
                    for i in 0..nodes[v].children.len() {
                        let c = nodes[v].children[i];
                        if c >= nodes.len() || seen[c] {
                            return Err(bad("node reached twice or out of range"));
                        }
                        if nodes[c].kind == NodeKind::Internal(label) {
                            return Err(bad("labels do not alternate"));
                        }
                        seen[c] = true;
                        nodes[c].parent = Some(v);
                        nodes[c].depth = nodes[v].depth + 1;
                        order.push(c);
                    }
                }
            }
        }
        if order.len() != nodes.len() {
            return Err(bad("unreachable nodes"));
        }

        // Bottom-up pass: leaf counts and interned codes.
        let mut interner: HashMap<(u8, Vec<usize>), usize> = HashMap::new();
        for &v in order.iter().rev() {
            let (tag, leaves, mut child_codes) = match nodes[v].kind {
                NodeKind::Leaf(_) => (2u8, 1, Vec::new()),
                NodeKind::Internal(label) => {
                    let ch = &nodes[v].children;
                    let leaves = ch.iter().map(|&c| nodes[c].leaves).sum();
                    (label as u8, leaves, ch.iter().map(|&c| nodes[c].code).collect())
                }
            };
            child_codes.sort_unstable();
            let next = interner.len();
            nodes[v].code = *interner.entry((tag, child_codes)).or_insert(next);
            nodes[v].leaves = leaves;
            let mut children = std::mem::take(&mut nodes[v].children);
            children.sort_by_key(|&c| nodes[c].code);
            nodes[v].children = children;
        }

        // Top-down pass: orbits keyed by (parent orbit, code).
        let mut orbit_ids: HashMap<(usize, usize), usize> = HashMap::new();
        nodes[root].orbit = 0;
        let mut next_orbit = 1;
        for &v in &order {
            for i in 0..nodes[v].children.len() {
                let c = nodes[v].children[i];
                let key = (nodes[v].orbit, nodes[c].code);
                let id = *orbit_ids.entry(key).or_insert_with(|| {
                    next_orbit += 1;
                    next_orbit - 1
                });
                nodes[c].orbit = id;
            }
        }

        Ok(Cotree { nodes, root, leaf_of })
    }

    /// Parses a term such as `1(0(· ·) ·)`; leaves may be written `·` or
    /// `.` and receive vertex ids in order of appearance.
    pub fn parse_term(text: &str) -> Result<Cotree> {
        let bad = |msg: String| Error::MalformedCotree(msg);
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace() || *c == ' ').collect();
        let mut raw: Vec<RawNode> = Vec::new();
        let mut pos = 0;
        let mut next_leaf = 0;
        // Stack of (raw index, label, children).
        let mut stack: Vec<(usize, Label, Vec<usize>)> = Vec::new();
        let mut root = None;
        while pos < chars.len() {
            let c = chars[pos];
            pos += 1;
            let finished = match c {
                ' ' => continue,
                '·' | '.' => {
                    raw.push(RawNode::Leaf(next_leaf));
                    next_leaf += 1;
                    Some(raw.len() - 1)
                }
                '0' | '1' => {
                    if chars.get(pos) != Some(&'(') {
                        return Err(bad(format!("expected '(' after label at {pos}")));
                    }
                    pos += 1;
                    let label = if c == '0' { Label::Union } else { Label::Join };
                    raw.push(RawNode::Leaf(usize::MAX));
                    stack.push((raw.len() - 1, label, Vec::new()));
                    None
                }
                ')' => {
                    let (slot, label, children) = stack.pop().ok_or_else(|| bad("unbalanced ')'".into()))?;
                    raw[slot] = RawNode::Internal(label, children);
                    Some(slot)
                }
                other => return Err(bad(format!("unexpected character {other:?}"))),
            };
            if let Some(node) = finished {
                match stack.last_mut() {
                    Some((_, _, children)) => children.push(node),
                    None if root.is_none() => root = Some(node),
                    None => return Err(bad("trailing input after the root term".into())),
                }
            }
        }
        if !stack.is_empty() {
            return Err(bad("unclosed '('".into()));
        }
        let root = root.ok_or_else(|| bad("empty term".into()))?;
        Cotree::from_raw(raw, root)
    }

    /// Number of leaves, i.e. vertices of the cograph.
    pub fn n(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, v: usize) -> &Node {
        &self.nodes[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.nodes[v].children
    }

    /// Node holding the leaf for vertex `x`.
    pub fn leaf_node(&self, x: usize) -> usize {
        self.leaf_of[x]
    }

    pub fn code(&self, v: usize) -> usize {
        self.nodes[v].code
    }

    pub fn orbit(&self, v: usize) -> usize {
        self.nodes[v].orbit
    }

    /// Runs of consecutive children sharing an orbit.
    pub(crate) fn child_classes(&self, v: usize) -> impl Iterator<Item = &[usize]> + '_ {
        self.nodes[v]
            .children
            .chunk_by(move |&a, &b| self.nodes[a].orbit == self.nodes[b].orbit)
    }

    /// Vertices below `v`.
    pub fn leaves_under(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes[v].leaves);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                NodeKind::Leaf(id) => out.push(id),
                NodeKind::Internal(_) => stack.extend(self.nodes[x].children.iter().rev()),
            }
        }
        out
    }

    /// The cograph: `u ~ v` iff the lowest common ancestor is a 1-node.
    pub fn reconstruct(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for v in 0..self.nodes.len() {
            if self.nodes[v].kind != NodeKind::Internal(Label::Join) {
                continue;
            }
            let groups: Vec<Vec<usize>> = self.nodes[v].children.iter().map(|&c| self.leaves_under(c)).collect();
            for i in 0..groups.len() {
                for j in i + 1..groups.len() {
                    for &a in &groups[i] {
                        for &b in &groups[j] {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        Graph::from_edges(n, &edges).expect("cotree leaves are distinct vertices")
    }

    /// Canonical term with `·` for leaves and children in lexicographic
    /// order of their own terms, e.g. `1(0(· ·) ·)`.
    pub fn term(&self) -> String {
        let mut terms: Vec<String> = vec![String::new(); self.nodes.len()];
        let mut order = vec![self.root];
        let mut head = 0;
        while head < order.len() {
            order.extend(self.nodes[order[head]].children.iter().copied());
            head += 1;
        }
        for &v in order.iter().rev() {
            terms[v] = match self.nodes[v].kind {
                NodeKind::Leaf(_) => "·".to_string(),
                NodeKind::Internal(label) => {
                    let mut parts: Vec<String> = self.nodes[v]
                        .children
                        .iter()
                        .map(|&c| std::mem::take(&mut terms[c]))
                        .collect();
                    parts.sort();
                    format!("{}({})", label.digit(), parts.join(" "))
                }
            };
        }
        std::mem::take(&mut terms[self.root])
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.term())
    }
}

/// Components of `G[set]` (or of its complement when `complement` is set),
/// each sorted. `member` marks the vertices of `set`; `mark` is scratch
/// space, all false on entry and on return.
fn split(g: &Graph, set: &[usize], member: &[bool], mark: &mut [bool], complement: bool) -> Vec<Vec<usize>> {
    let mut parts = if complement {
        co_components(g, set, member, mark)
    } else {
        components(g, set, member, mark)
    };
    for part in &mut parts {
        part.sort_unstable();
    }
    parts
}

fn components(g: &Graph, set: &[usize], member: &[bool], seen: &mut [bool]) -> Vec<Vec<usize>> {
    let mut parts = Vec::new();
    for &s in set {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut part = vec![s];
        let mut i = 0;
        while i < part.len() {
            let u = part[i];
            i += 1;
            for &w in g.neighbors(u) {
                if member[w] && !seen[w] {
                    seen[w] = true;
                    part.push(w);
                }
            }
        }
        parts.push(part);
    }
    for &v in set {
        seen[v] = false;
    }
    parts
}

/// Complement search over a shrinking list of unassigned vertices; each
/// scan costs O(deg u) beyond the vertices it assigns.
fn co_components(g: &Graph, set: &[usize], member: &[bool], adjacent: &mut [bool]) -> Vec<Vec<usize>> {
    let mut unassigned: Vec<usize> = set.iter().rev().copied().collect();
    let mut parts = Vec::new();
    while let Some(s) = unassigned.pop() {
        let mut part = vec![s];
        let mut i = 0;
        while i < part.len() {
            let u = part[i];
            i += 1;
            for &w in g.neighbors(u) {
                if member[w] {
                    adjacent[w] = true;
                }
            }
            let mut kept = Vec::new();
            for &w in &unassigned {
                if adjacent[w] {
                    kept.push(w);
                } else {
                    part.push(w);
                }
            }
            unassigned = kept;
            for &w in g.neighbors(u) {
                adjacent[w] = false;
            }
        }
        parts.push(part);
    }
    parts
}
