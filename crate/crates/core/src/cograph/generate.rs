use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Cotree, Label, RawNode};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_N: usize = 12;

/// Random connected cograph on `n` vertices as a cotree.
///
/// Each internal node gets `k` children with `k` uniform in
/// `{2, …, min(4, size)}`, sizes drawn as a uniform composition of its leaf
/// count into `k` positive parts. Labels alternate from a 1 at the root and
/// leaf ids are a random permutation. Deterministic for a given seed.
pub fn random_cotree(n: usize, seed: u64) -> Result<Cotree> {
    if n == 0 {
        return Err(Error::BadN(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = vec![RawNode::Leaf(usize::MAX)];
    let mut leaves = Vec::with_capacity(n);
    let mut work = vec![(n, Label::Join, 0usize)];
    while let Some((size, label, slot)) = work.pop() {
        if size == 1 {
            leaves.push(slot);
            continue;
        }
        let k = rng.gen_range(2..=size.min(4));
        // k-1 distinct cut points in 1..size give a uniform composition.
        let mut cuts = rand::seq::index::sample(&mut rng, size - 1, k - 1).into_vec();
        cuts.sort_unstable();
        let mut children = Vec::with_capacity(k);
        let mut prev = 0;
        for cut in cuts.into_iter().map(|c| c + 1).chain(std::iter::once(size)) {
            let child = raw.len();
            raw.push(RawNode::Leaf(usize::MAX));
            children.push(child);
            work.push((cut - prev, label.flip(), child));
            prev = cut;
        }
        raw[slot] = RawNode::Internal(label, children);
    }
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut rng);
    for (slot, id) in leaves.into_iter().zip(ids) {
        raw[slot] = RawNode::Leaf(id);
    }
    Cotree::from_raw(raw, 0)
}

/// A cotree shape: a leaf, or a multiset of smaller shapes (as sorted ids).
struct Shape {
    leaves: usize,
    children: Vec<usize>,
}

/// One cotree per isomorphism class of connected cographs on `n` vertices.
pub fn enumerate_connected_cotrees(n: usize) -> Result<Vec<Cotree>> {
    if n == 0 {
        return Err(Error::BadN(0));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge {
            what: "cograph enumeration",
            n,
            limit: MAX_ENUMERATION_N,
        });
    }
    // Labels are determined by depth, so unlabeled shapes suffice: shape ids
    // are assigned in order of leaf count and children are nondecreasing.
    let mut shapes = vec![Shape {
        leaves: 1,
        children: Vec::new(),
    }];
    for size in 2..=n {
        let smaller = shapes.len();
        let mut found = Vec::new();
        let mut current = Vec::new();
        extend(&shapes, smaller, size, 0, &mut current, &mut found);
        shapes.extend(found.into_iter().map(|children| Shape { leaves: size, children }));
    }
    let roots: Vec<usize> = (0..shapes.len()).filter(|&s| shapes[s].leaves == n).collect();
    roots.into_iter().map(|s| materialize(&shapes, s)).collect()
}

/// Graphs of [`enumerate_connected_cotrees`].
pub fn enumerate_connected_cographs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_cotrees(n)?.iter().map(Cotree::reconstruct).collect())
}

fn extend(
    shapes: &[Shape],
    limit: usize,
    remaining: usize,
    min_id: usize,
    current: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        found.push(current.clone());
        return;
    }
    for id in min_id..limit {
        let leaves = shapes[id].leaves;
        if leaves > remaining {
            break;
        }
        current.push(id);
        extend(shapes, limit, remaining - leaves, id, current, found);
        current.pop();
    }
}

fn materialize(shapes: &[Shape], root: usize) -> Result<Cotree> {
    let mut raw = vec![RawNode::Leaf(usize::MAX)];
    let mut next_leaf = 0;
    let mut work = vec![(root, Label::Join, 0usize)];
    while let Some((shape, label, slot)) = work.pop() {
        if shapes[shape].children.is_empty() {
            raw[slot] = RawNode::Leaf(next_leaf);
            next_leaf += 1;
            continue;
        }
        let mut children = Vec::new();
        for &c in &shapes[shape].children {
            let child = raw.len();
            raw.push(RawNode::Leaf(usize::MAX));
            children.push(child);
            work.push((c, label.flip(), child));
        }
        raw[slot] = RawNode::Internal(label, children);
    }
    Cotree::from_raw(raw, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_random_trees() {
        assert_eq!(random_cotree(1, 7).unwrap().term(), "·");
        assert_eq!(random_cotree(2, 7).unwrap().term(), "1(· ·)");
        assert_eq!(random_cotree(0, 7), Err(Error::BadN(0)));
    }

    #[test]
    fn random_trees_are_connected_and_deterministic() {
        for seed in 0..50 {
            let t = random_cotree(30, seed).unwrap();
            let g = t.reconstruct();
            assert_eq!(g.n(), 30);
            assert!(g.is_connected());
            assert_eq!(Cotree::from_graph(&g).unwrap().term(), t.term());
            assert_eq!(random_cotree(30, seed).unwrap(), t);
        }
    }

    #[test]
    fn connected_cograph_counts() {
        let expected = [1, 1, 2, 5, 12, 33, 90, 261];
        for (i, &count) in expected.iter().enumerate() {
            let cotrees = enumerate_connected_cotrees(i + 1).unwrap();
            assert_eq!(cotrees.len(), count, "n = {}", i + 1);
            let mut terms: Vec<String> = cotrees.iter().map(Cotree::term).collect();
            terms.sort();
            terms.dedup();
            assert_eq!(terms.len(), count);
        }
        assert!(matches!(enumerate_connected_cographs(13), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn enumerated_graphs_are_connected_cographs() {
        for g in enumerate_connected_cographs(6).unwrap() {
            assert!(g.is_connected());
            assert!(Cotree::from_graph(&g).is_ok());
        }
    }
}
