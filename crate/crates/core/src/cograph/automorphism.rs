use super::{Cotree, NodeKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::involution_to_partition;
use crate::partition::Partition;
use crate::perm::Permutation;

/// Does the cograph of `t` have a fixed-point-free involutive
/// automorphism?
///
/// Walks the tree from the root. Among the children of a node, a class of
/// isomorphic siblings of even size can be paired off. An odd class leaves
/// one subtree unpaired, which must then carry such an involution itself; if
/// that subtree is a single leaf the answer is no.
///
/// A single-leaf tree has no such involution.
pub fn has_nice_automorphism(t: &Cotree) -> bool {
    c_homogeneous_search(t, 2).expect("2 is a valid group size")
}

/// Generalizes [`has_nice_automorphism`] to groups of `c` isomorphic
/// siblings. Each sibling class is split into groups of `c`; if `r > 0`
/// subtrees remain, they are pairwise isomorphic and the search fails on a
/// leaf or recurses into one representative.
///
/// A `true` answer yields a partition into cells of size `c` on which a
/// product of symmetric groups acts, so it is equitable. The converse fails:
/// `C4` has the trivial equitable partition but the search with `c = 4`
/// answers `false`.
pub fn c_homogeneous_search(t: &Cotree, c: usize) -> Result<bool> {
    if c < 2 {
        return Err(Error::BadC(c));
    }
    if t.node(t.root()).is_leaf() {
        return Ok(false);
    }
    let mut stack = vec![t.root()];
    while let Some(v) = stack.pop() {
        for class in t.child_classes(v) {
            if class.len() % c != 0 {
                let rep = class[class.len() - 1];
                if t.node(rep).is_leaf() {
                    return Ok(false);
                }
                stack.push(rep);
            }
        }
    }
    Ok(true)
}

/// A fixed-point-free involutive automorphism of the cograph, tracking the
/// pairings made by [`has_nice_automorphism`].
pub fn nice_automorphism(t: &Cotree) -> Result<Permutation> {
    if t.node(t.root()).is_leaf() {
        return Err(Error::NoSuchAutomorphism);
    }
    let mut images: Vec<usize> = (0..t.n()).collect();
    let mut stack = vec![t.root()];
    while let Some(v) = stack.pop() {
        for class in t.child_classes(v) {
            for pair in class.chunks_exact(2) {
                swap_subtrees(t, pair[0], pair[1], &mut images);
            }
            if class.len() % 2 == 1 {
                let rep = class[class.len() - 1];
                if t.node(rep).is_leaf() {
                    return Err(Error::NoSuchAutomorphism);
                }
                stack.push(rep);
            }
        }
    }
    Ok(Permutation::new(images).expect("subtree swaps form a permutation"))
}

/// The 2-homogeneous equitable partition given by the orbits of
/// [`nice_automorphism`], or `None` if the cotree search finds none.
pub fn two_homogeneous_partition(g: &Graph) -> Result<Option<Partition>> {
    if g.n() % 2 == 1 {
        return Err(Error::OddOrder(g.n()));
    }
    let t = Cotree::from_graph(g)?;
    match nice_automorphism(&t) {
        Ok(gamma) => Ok(Some(involution_to_partition(&gamma)?)),
        Err(Error::NoSuchAutomorphism) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Generators of `Aut(G)`: for every run `t_1, …, t_k` of isomorphic
/// siblings, the swaps of `t_i` and `t_{i+1}` matched child by child.
pub fn aut_generators(t: &Cotree) -> Vec<Permutation> {
    let mut out = Vec::new();
    for v in 0..t.nodes().len() {
        if t.node(v).is_leaf() {
            continue;
        }
        for class in t.child_classes(v) {
            for w in class.windows(2) {
                let mut images: Vec<usize> = (0..t.n()).collect();
                swap_subtrees(t, w[0], w[1], &mut images);
                out.push(Permutation::new(images).expect("subtree swap is a permutation"));
            }
        }
    }
    out
}

/// Exchanges the leaves of two isomorphic subtrees in `images`.
fn swap_subtrees(t: &Cotree, a: usize, b: usize, images: &mut [usize]) {
    let mut stack = vec![(a, b)];
    while let Some((x, y)) = stack.pop() {
        match (t.node(x).kind, t.node(y).kind) {
            (NodeKind::Leaf(p), NodeKind::Leaf(q)) => {
                images[p] = q;
                images[q] = p;
            }
            _ => {
                debug_assert_eq!(t.code(x), t.code(y));
                stack.extend(t.children(x).iter().copied().zip(t.children(y).iter().copied()));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equitability::is_equitable;

    const EIGHT_LEAF: &str = "1(0(1(· ·) ·) 0(1(· ·) ·) 0(· ·))";

    #[test]
    fn nice_automorphism_examples() {
        assert!(has_nice_automorphism(&Cotree::parse_term(EIGHT_LEAF).unwrap()));
        assert!(!has_nice_automorphism(&Cotree::from_graph(&Graph::star(3)).unwrap()));
        assert!(has_nice_automorphism(&Cotree::from_graph(&Graph::complete(2)).unwrap()));
        assert!(!has_nice_automorphism(&Cotree::from_graph(&Graph::empty(1)).unwrap()));
    }

    #[test]
    fn nice_automorphism_is_valid() {
        for term in [EIGHT_LEAF, "1(· ·)", "1(0(· ·) 0(· ·))"] {
            let t = Cotree::parse_term(term).unwrap();
            let g = t.reconstruct();
            let gamma = nice_automorphism(&t).unwrap();
            assert!(gamma.is_involution());
            assert_eq!(gamma.fixed_points().count(), 0);
            assert!(gamma.is_automorphism(&g));
        }
        let k2 = Cotree::from_graph(&Graph::complete(2)).unwrap();
        assert_eq!(nice_automorphism(&k2).unwrap().to_string(), "(1 2)");
        let star = Cotree::from_graph(&Graph::star(3)).unwrap();
        assert_eq!(nice_automorphism(&star), Err(Error::NoSuchAutomorphism));
    }

    #[test]
    fn two_homogeneous_examples() {
        let c4 = Graph::cycle(4);
        let p = two_homogeneous_partition(&c4).unwrap().unwrap();
        assert!(p.is_homogeneous(2));
        assert!(is_equitable(&c4, &p));
        assert_eq!(two_homogeneous_partition(&Graph::star(3)).unwrap(), None);
        assert_eq!(
            two_homogeneous_partition(&Graph::complete(2)).unwrap(),
            Some(Partition::trivial(2))
        );
        assert_eq!(two_homogeneous_partition(&Graph::complete(3)), Err(Error::OddOrder(3)));
        assert_eq!(two_homogeneous_partition(&Graph::path(4)), Err(Error::NotCograph));
    }

    #[test]
    fn c_homogeneous_examples() {
        let k3 = Cotree::from_graph(&Graph::complete(3)).unwrap();
        assert_eq!(c_homogeneous_search(&k3, 3), Ok(true));
        let c4 = Cotree::from_graph(&Graph::cycle(4)).unwrap();
        assert_eq!(c_homogeneous_search(&c4, 4), Ok(false));
        assert_eq!(c_homogeneous_search(&c4, 2), Ok(true));
        assert_eq!(c_homogeneous_search(&c4, 1), Err(Error::BadC(1)));
    }

    #[test]
    fn generators() {
        let k2 = Cotree::from_graph(&Graph::complete(2)).unwrap();
        let gens: Vec<String> = aut_generators(&k2).iter().map(|p| p.to_string()).collect();
        assert_eq!(gens, vec!["(1 2)"]);
        let star = Cotree::from_graph(&Graph::star(3)).unwrap();
        let gens = aut_generators(&star);
        assert_eq!(gens.len(), 2);
        assert!(gens.iter().all(|g| g.apply(0) == 0 && g.is_automorphism(&Graph::star(3))));
    }
}
