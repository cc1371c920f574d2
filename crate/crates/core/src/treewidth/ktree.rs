//! k-tree recognition and completion of a graph to a k-tree.

use super::{check_permutation, filled_later_neighbors, EliminationOrder};
use crate::error::{Error, Result};
use crate::graph::{bit, low_bits, Graph, VertexSet};

/// Whether `g` is a k-tree: `K_{k+1}`, or obtained from a k-tree by adding a
/// vertex whose neighbourhood is a k-clique.
///
/// Peels degree-`k` vertices with clique neighbourhoods, lowest id first,
/// until `k + 1` vertices remain, which must form a clique. Any such vertex
/// may be peeled from a k-tree, so the greedy choice is safe.
pub fn is_ktree(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n < k + 1 {
        return false;
    }
    if g.edge_count() != k * n - k * (k + 1) / 2 {
        return false;
    }
    let rows = g.rows();
    let mut remaining = low_bits(n);
    for _ in 0..(n - k - 1) {
        let peel = VertexSet::from_bits(remaining).iter().find(|&v| {
            let nb = rows[v] & remaining;
            nb.count_ones() as usize == k && g.is_clique(VertexSet::from_bits(nb))
        });
        match peel {
            Some(v) => remaining &= !bit(v),
            None => return false,
        }
    }
    g.is_clique(VertexSet::from_bits(remaining))
}

/// The `k` for which `g` is a k-tree, if any. A k-tree on at least `k + 1`
/// vertices has minimum degree `k`.
pub fn detect_ktree(g: &Graph) -> Option<usize> {
    if g.n() == 0 {
        return None;
    }
    let k = (0..g.n()).map(|v| g.degree(v)).min()?;
    is_ktree(g, k).then_some(k)
}

/// Simplicial elimination, lowest id first; `None` if the graph is not
/// chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let rows = g.rows();
    let mut remaining = low_bits(g.n());
    let mut order = Vec::with_capacity(g.n());
    while remaining != 0 {
        let v = VertexSet::from_bits(remaining)
            .iter()
            .find(|&v| g.is_clique(VertexSet::from_bits(rows[v] & remaining)))?;
        remaining &= !bit(v);
        order.push(v);
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// A `w`-tree containing `g`, where `w` is the width of `ord` on `g`.
///
/// The filled graph of `ord` is chordal with every later-neighbourhood a
/// clique of size at most `w`. The last `w + 1` vertices of the order are
/// made a clique; then, walking the order backwards, each remaining
/// vertex's later-neighbourhood is grown to a `w`-clique among the later
/// vertices by adding common neighbours, lowest id first.
pub fn ktree_completion(g: &Graph, ord: &EliminationOrder) -> Result<Graph> {
    let n = g.n();
    let order = ord.order();
    check_permutation(n, order)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let later = filled_later_neighbors(g, order);
    let w = later.iter().map(|s| s.len()).max().unwrap_or(0);
    if n < w + 1 {
        return Err(Error::InvalidParameter(format!(
            "a {w}-tree needs {} vertices, have {n}",
            w + 1
        )));
    }
    let mut h = Graph::new(n)?;
    for (v, &nb) in later.iter().enumerate() {
        for u in nb {
            h.add_edge(v, u);
        }
    }
    let base: VertexSet = order[n - w - 1..].iter().copied().collect();
    h.add_clique(base);
    let mut after = base;
    for &v in order[..n - w - 1].iter().rev() {
        let mut clique = later[v];
        let mut candidates = after.difference(clique).bits();
        for u in clique {
            candidates &= h.rows()[u];
        }
        while clique.len() < w {
            let Some(c) = VertexSet::from_bits(candidates).first() else {
                return Err(Error::Certificate(format!(
                    "cannot extend the later neighbourhood of vertex {v} to a {w}-clique"
                )));
            };
            clique.insert(c);
            candidates &= h.rows()[c] & !bit(c);
        }
        for u in clique {
            h.add_edge(v, u);
        }
        after.insert(v);
    }
    if !is_ktree(&h, w) || !g.is_subgraph_of(&h) {
        return Err(Error::Certificate(format!(
            "completion is not a {w}-tree containing the input"
        )));
    }
    Ok(h)
}
