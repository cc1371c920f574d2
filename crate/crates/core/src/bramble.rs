//! Brambles as treewidth lower-bound certificates.
//!
//! A bramble is a family of vertex sets that each induce a connected
//! subgraph and pairwise touch (share a vertex or are joined by an edge).
//! Its order is the minimum size of a hitting set; a bramble of order `b`
//! certifies treewidth at least `b - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::treewidth::treewidth_exact;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Bramble {
    elements: Vec<VertexSet>,
}

impl Bramble {
    pub fn new(elements: Vec<VertexSet>) -> Self {
        Bramble { elements }
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingSet {
    pub members: VertexSet,
    pub size: usize,
}

impl HittingSet {
    pub fn new(members: VertexSet) -> Self {
        HittingSet {
            members,
            size: members.len(),
        }
    }

    pub fn hits(&self, b: &Bramble) -> bool {
        b.elements.iter().all(|e| e.intersects(self.members))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrambleViolation {
    NoElements,
    OutOfRange { element: usize, vertex: usize },
    Disconnected(usize),
    NotTouching(usize, usize),
}

impl fmt::Display for BrambleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrambleViolation::NoElements => write!(f, "bramble has no elements"),
            BrambleViolation::OutOfRange { element, vertex } => {
                write!(
                    f,
                    "element {element} holds vertex {vertex}, which is not in the graph"
                )
            }
            BrambleViolation::Disconnected(i) => {
                write!(f, "element {i} does not induce a connected subgraph")
            }
            BrambleViolation::NotTouching(i, j) => write!(f, "elements {i} and {j} do not touch"),
        }
    }
}

impl std::error::Error for BrambleViolation {}

pub fn touch(h: &Graph, a: VertexSet, b: VertexSet) -> bool {
    a.intersects(b) || a.iter().any(|v| h.neighbors(v).intersects(b))
}

/// One two-vertex element per edge of `h`, in edge order.
pub fn edge_bramble(h: &Graph) -> Result<Bramble> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(Error::EmptyBramble);
    }
    Ok(Bramble::new(
        edges
            .into_iter()
            .map(|(u, v)| VertexSet::from_iter([u, v]))
            .collect(),
    ))
}

pub fn verify_bramble(h: &Graph, b: &Bramble) -> std::result::Result<(), BrambleViolation> {
    if b.is_empty() {
        return Err(BrambleViolation::NoElements);
    }
    for (i, &e) in b.elements.iter().enumerate() {
        if let Some(v) = e.difference(h.vertices()).first() {
            return Err(BrambleViolation::OutOfRange {
                element: i,
                vertex: v,
            });
        }
        if !h.is_connected_set(e) {
            return Err(BrambleViolation::Disconnected(i));
        }
    }
    for (i, &a) in b.elements.iter().enumerate() {
        for (j, &c) in b.elements.iter().enumerate().skip(i + 1) {
            if !touch(h, a, c) {
                return Err(BrambleViolation::NotTouching(i, j));
            }
        }
    }
    Ok(())
}

/// Exact order of `b` with a minimum hitting set.
///
/// Branch and bound: take the unhit element with the fewest admissible
/// vertices and branch on each of them in ascending order, forbidding the
/// vertices already tried in earlier branches. A greedy packing of pairwise
/// disjoint unhit elements bounds the remaining cost from below.
pub fn bramble_order(h: &Graph, b: &Bramble) -> Result<(usize, HittingSet)> {
    if b.is_empty() {
        return Err(Error::EmptyBramble);
    }
    for &e in &b.elements {
        h.check_set(e)?;
        if e.is_empty() {
            return Err(Error::InvalidBramble("empty element cannot be hit".into()));
        }
    }
    let elements: Vec<u64> = b.elements.iter().map(|e| e.bits()).collect();
    let mut best = greedy_hitting_set(&elements);
    branch(&elements, 0, 0, &mut best);
    let hs = HittingSet::new(VertexSet::from_bits(best));
    Ok((hs.size, hs))
}

fn greedy_hitting_set(elements: &[u64]) -> u64 {
    let mut chosen = 0u64;
    loop {
        let unhit: Vec<u64> = elements
            .iter()
            .copied()
            .filter(|&e| e & chosen == 0)
            .collect();
        if unhit.is_empty() {
            return chosen;
        }
        let pool = unhit.iter().fold(0u64, |a, &e| a | e);
        let v = VertexSet::from_bits(pool)
            .iter()
            .max_by_key(|&v| {
                (
                    unhit.iter().filter(|&&e| e >> v & 1 == 1).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("non-empty elements");
        chosen |= 1 << v;
    }
}

fn branch(elements: &[u64], chosen: u64, forbidden: u64, best: &mut u64) {
    let size = chosen.count_ones();
    let mut target: Option<u64> = None;
    let mut packing = 0u32;
    let mut used = 0u64;
    for &e in elements {
        if e & chosen != 0 {
            continue;
        }
        let allowed = e & !forbidden;
        if allowed == 0 {
            return;
        }
        if allowed & used == 0 {
            packing += 1;
            used |= allowed;
        }
        if target.is_none_or(|t| allowed.count_ones() < t.count_ones()) {
            target = Some(allowed);
        }
    }
    let Some(target) = target else {
        if size < best.count_ones() {
            *best = chosen;
        }
        return;
    };
    if size + packing >= best.count_ones() {
        return;
    }
    let mut tried = 0u64;
    for v in VertexSet::from_bits(target) {
        branch(elements, chosen | 1 << v, forbidden | tried, best);
        tried |= 1 << v;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundCheck {
    pub order: usize,
    pub claimed: usize,
    pub treewidth: usize,
    /// `treewidth >= claimed - 1`.
    pub holds: bool,
}

/// Checks the sound direction of bramble duality on `g`: a valid bramble of
/// order at least `claimed` forces treewidth at least `claimed - 1`.
pub fn lower_bound_check(g: &Graph, b: &Bramble, claimed: usize) -> Result<LowerBoundCheck> {
    verify_bramble(g, b).map_err(|v| Error::InvalidBramble(v.to_string()))?;
    let (order, _) = bramble_order(g, b)?;
    if order < claimed {
        return Err(Error::InvalidParameter(format!(
            "bramble order {order} is below the claimed {claimed}"
        )));
    }
    let (treewidth, _) = treewidth_exact(g)?;
    Ok(LowerBoundCheck {
        order,
        claimed,
        treewidth,
        holds: treewidth + 1 >= claimed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_labeled_graphs;
    use crate::generators::{self, complete, cycle, empty, path, petersen, sample_gnp};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    // Largest independent set by trying every subset.
    fn independence_number(h: &Graph) -> usize {
        (0u64..1 << h.n())
            .map(VertexSet::from_bits)
            .filter(|&s| h.is_independent(s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn two_k2_is_not_a_bramble() {
        let two_k2 = cycle(4).complement();
        let b = edge_bramble(&two_k2).unwrap();
        assert_eq!(b.elements(), &[set(&[0, 2]), set(&[1, 3])]);
        assert_eq!(
            verify_bramble(&two_k2, &b),
            Err(BrambleViolation::NotTouching(0, 1))
        );
    }

    #[test]
    fn triangle_edges_form_a_bramble_of_order_two() {
        let b = edge_bramble(&complete(3)).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(verify_bramble(&complete(3), &b), Ok(()));
        let (order, hs) = bramble_order(&complete(3), &b).unwrap();
        assert_eq!(order, 2);
        assert!(hs.hits(&b));
    }

    #[test]
    fn c5_complement_bramble() {
        let h = cycle(5).complement();
        let b = edge_bramble(&h).unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(verify_bramble(&h, &b), Ok(()));
        // min vertex cover of a 5-cycle, by brute force
        let brute = (0u64..32)
            .map(VertexSet::from_bits)
            .filter(|&s| {
                h.edges()
                    .iter()
                    .all(|&(u, v)| s.contains(u) || s.contains(v))
            })
            .map(|s| s.len())
            .min()
            .unwrap();
        assert_eq!(brute, 3);
        assert_eq!(bramble_order(&h, &b).unwrap().0, 3);
    }

    #[test]
    fn single_connected_element_is_a_bramble() {
        let p = petersen();
        assert_eq!(
            verify_bramble(&p, &Bramble::new(vec![set(&[0, 1, 2])])),
            Ok(())
        );
        assert_eq!(
            verify_bramble(&p, &Bramble::new(vec![set(&[0, 2])])),
            Err(BrambleViolation::Disconnected(0))
        );
        assert_eq!(
            verify_bramble(&p, &Bramble::new(vec![])),
            Err(BrambleViolation::NoElements)
        );
    }

    #[test]
    fn edgeless_host_rejected() {
        assert_eq!(edge_bramble(&empty(4)), Err(Error::EmptyBramble));
        assert_eq!(
            bramble_order(&empty(4), &Bramble::new(vec![])),
            Err(Error::EmptyBramble)
        );
    }

    #[test]
    fn edge_bramble_order_is_n_minus_independence() {
        for n in 1..=5 {
            for h in enumerate_labeled_graphs(n)
                .unwrap()
                .filter(|h| h.edge_count() > 0)
            {
                let (order, hs) = bramble_order(&h, &edge_bramble(&h).unwrap()).unwrap();
                assert_eq!(order, n - independence_number(&h));
                assert!(hs.hits(&edge_bramble(&h).unwrap()));
            }
        }
        let mut rng = generators::rng(8);
        for i in 0..500 {
            let h = sample_gnp(2 + i % 7, 0.5, &mut rng).unwrap();
            if h.edge_count() == 0 {
                continue;
            }
            assert_eq!(
                bramble_order(&h, &edge_bramble(&h).unwrap()).unwrap().0,
                h.n() - independence_number(&h)
            );
        }
    }

    #[test]
    fn general_brambles() {
        // Grid-like bramble on C6: three arcs that pairwise touch.
        let c6 = cycle(6);
        let b = Bramble::new(vec![set(&[0, 1, 2]), set(&[2, 3, 4]), set(&[4, 5, 0])]);
        assert_eq!(verify_bramble(&c6, &b), Ok(()));
        assert_eq!(bramble_order(&c6, &b).unwrap().0, 2);
        let check = lower_bound_check(&c6, &b, 2).unwrap();
        assert!(check.holds);
        assert_eq!(check.treewidth, 2);
    }

    #[test]
    fn lower_bound_examples() {
        let c5 = cycle(5);
        let b = edge_bramble(&c5).unwrap();
        let check = lower_bound_check(&c5, &b, 3).unwrap();
        assert_eq!((check.order, check.treewidth, check.holds), (3, 2, true));
        for n in 2..8 {
            let k = complete(n);
            let check = lower_bound_check(&k, &edge_bramble(&k).unwrap(), n - 1).unwrap();
            assert_eq!(check.order, n - 1);
            assert!(check.holds);
        }
        let two_k2 = cycle(4).complement();
        assert!(matches!(
            lower_bound_check(&two_k2, &edge_bramble(&two_k2).unwrap(), 1),
            Err(Error::InvalidBramble(_))
        ));
        assert!(lower_bound_check(&path(3), &edge_bramble(&path(3)).unwrap(), 3).is_err());
    }

    #[test]
    fn soundness_over_all_small_complements() {
        for n in 1..=6 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                let h = g.complement();
                let Ok(b) = edge_bramble(&h) else { continue };
                if verify_bramble(&h, &b).is_err() {
                    continue;
                }
                let (order, _) = bramble_order(&h, &b).unwrap();
                let check = lower_bound_check(&h, &b, order).unwrap();
                assert!(check.holds, "{g:?}");
            }
        }
    }
}
