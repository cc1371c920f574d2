//! `Q_n^k` recognition and the complement-covering k-tree for every other
//! k-tree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::path_power_ktree;
use crate::graph::{Graph, VertexSet};
use crate::treewidth::{detect_ktree, is_ktree};

/// `Some(k)` iff `g` is `Q_n^k`: the universal vertices `D` form the clique
/// and the rest is an independent set (each member then sees exactly `D`).
/// `K_n` is `Q_n^{n-1}`; edgeless graphs (including `K_1`) are `Q_n^0`.
pub fn is_qnk(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if g.edge_count() == 0 {
        return Some(0);
    }
    let universal: VertexSet = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let rest = g.vertices().difference(universal);
    if rest.is_empty() {
        return Some(n - 1);
    }
    if !g.is_independent(rest) {
        return None;
    }
    debug_assert!(rest.iter().all(|v| g.neighbors(v) == universal));
    Some(universal.len())
}

/// A `(n-k-2)`-tree `h` containing the complement of the k-tree it was
/// built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HConstruction {
    #[serde(skip)]
    pub h: Graph,
    pub h_graph6: String,
    /// `k` of the input k-tree.
    pub k: usize,
    /// `n - k - 2`.
    pub width: usize,
    /// The `(k+1)`-clique removed from the vertex set to form the starting
    /// clique `V - separator` of `h`.
    pub separator: VertexSet,
    /// `(x, y)`: separator vertex `x` and its chosen neighbour `y` outside
    /// the separator; `x` is joined to every starting-clique vertex but `y`.
    pub partners: Vec<(usize, usize)>,
}

/// Builds the covering k-tree for a k-tree `g` that is not `Q_n^k`.
///
/// Picks the lexicographically least `(k+1)`-clique `K` whose every vertex
/// has a neighbour outside `K`, lets `A = V - K` be a clique, and joins each
/// `x` in `K` to `A - y(x)` where `y(x)` is the least neighbour of `x`
/// outside `K`. The result is checked with [`is_ktree`] and an edge-subset
/// test before it is returned.
pub fn construct_h(g: &Graph) -> Result<HConstruction> {
    let n = g.n();
    let k = detect_ktree(g).ok_or(Error::NotKTree)?;
    if let Some(q) = is_qnk(g) {
        return Err(Error::IsQnk { n, k: q });
    }
    if n < k + 3 {
        return Err(Error::InvalidParameter(format!(
            "need n >= k + 3 (n={n}, k={k})"
        )));
    }
    let separator = find_separator(g, k)
        .ok_or_else(|| Error::Certificate("no (k+1)-clique with outside neighbours".into()))?;
    let start = g.vertices().difference(separator);
    let mut h = Graph::new(n)?;
    h.add_clique(start);
    let mut partners = Vec::with_capacity(k + 1);
    for x in separator {
        let y = g
            .neighbors(x)
            .difference(separator)
            .first()
            .expect("separator vertices have outside neighbours");
        for a in start {
            if a != y {
                h.add_edge(x, a);
            }
        }
        partners.push((x, y));
    }
    let width = n - k - 2;
    if !is_ktree(&h, width) {
        return Err(Error::Certificate(format!(
            "constructed graph is not a {width}-tree"
        )));
    }
    if !g.complement().is_subgraph_of(&h) {
        return Err(Error::Certificate(
            "constructed graph misses a complement edge".into(),
        ));
    }
    Ok(HConstruction {
        h_graph6: crate::io::emit_graph6(&h),
        h,
        k,
        width,
        separator,
        partners,
    })
}

fn find_separator(g: &Graph, k: usize) -> Option<VertexSet> {
    fn extend(g: &Graph, size: usize, clique: &mut Vec<usize>, from: usize) -> Option<VertexSet> {
        if clique.len() == size {
            let set: VertexSet = clique.iter().copied().collect();
            let ok = set
                .iter()
                .all(|x| !g.neighbors(x).difference(set).is_empty());
            return ok.then_some(set);
        }
        for v in from..g.n() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                if let Some(found) = extend(g, size, clique, v + 1) {
                    return Some(found);
                }
                clique.pop();
            }
        }
        None
    }
    extend(g, k + 1, &mut Vec::with_capacity(k + 1), 0)
}

/// Graphs `g1`, `g2` on `n` vertices whose union is `K_n`, with
/// `tw(g1) = k` and `tw(g2) = n - k - 2`.
///
/// `g1` is the k-th power of the path, which differs from `Q_n^k` once
/// `n >= k + 3`; `g2` is its covering k-tree from [`construct_h`].
pub fn union_clique_witness(k: usize, n: usize) -> Result<(Graph, Graph, VertexSet)> {
    if k < 1 || n < k + 3 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 1 and n >= k + 3 (k={k}, n={n})"
        )));
    }
    let g1 = path_power_ktree(n, k)?;
    let g2 = construct_h(&g1)?.h;
    let clique = g1.vertices();
    if !g1.union(&g2)?.is_clique(clique) {
        return Err(Error::Certificate("union is not complete".into()));
    }
    Ok((g1, g2, clique))
}
