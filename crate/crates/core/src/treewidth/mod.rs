//! Treewidth: elimination orders, the exact subset DP, and certificates.
//!
//! The width of an elimination order is the largest number of later
//! neighbours any vertex has at the moment it is eliminated, where
//! eliminating a vertex turns its remaining neighbourhood into a clique.
//! Treewidth is the minimum width over all orders.

mod decomposition;
mod heuristic;
mod ktree;

pub use decomposition::{
    decomposition_from_order, verify_decomposition, TdViolation, TreeDecomposition,
};
pub use heuristic::{width_upper_heuristic, Heuristic};
pub use ktree::{detect_ktree, is_chordal, is_ktree, ktree_completion, perfect_elimination_order};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};

/// Default vertex cap for [`treewidth_exact`].
pub const DEFAULT_EXACT_CAP: usize = 20;
/// The DP table has `2^n` entries of two bytes; refuse anything past this.
pub const MAX_EXACT_CAP: usize = 26;
/// Largest input accepted by [`treewidth_oracle_bruteforce`].
pub const ORACLE_MAX_VERTICES: usize = 8;

/// A vertex elimination sequence together with its fill-in width.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrder {
    order: Vec<usize>,
    width: usize,
}

impl EliminationOrder {
    /// Checks that `order` is a permutation of `g`'s vertices and computes
    /// its width on `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self> {
        check_permutation(g.n(), &order)?;
        let width = filled_later_neighbors(g, &order)
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap_or(0);
        Ok(EliminationOrder { order, width })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `positions()[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub(crate) fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::NotAPermutation(format!(
            "length {} for a graph on {n} vertices",
            order.len()
        )));
    }
    let mut seen = VertexSet::empty();
    for &v in order {
        if v >= n {
            return Err(Error::NotAPermutation(format!("vertex {v} out of range")));
        }
        if seen.contains(v) {
            return Err(Error::NotAPermutation(format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    Ok(())
}

/// For each vertex (indexed by id), its neighbours that come later in
/// `order` at the moment it is eliminated from the progressively filled
/// graph.
pub(crate) fn filled_later_neighbors(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let mut rows = g.rows().to_vec();
    let mut out = vec![VertexSet::empty(); g.n()];
    let mut eliminated = 0u64;
    for &v in order {
        eliminated |= bit(v);
        let later = rows[v] & !eliminated;
        out[v] = VertexSet::from_bits(later);
        for u in VertexSet::from_bits(later) {
            rows[u] |= later & !bit(u);
        }
    }
    out
}

pub fn treewidth_exact(g: &Graph) -> Result<(usize, EliminationOrder)> {
    treewidth_exact_capped(g, DEFAULT_EXACT_CAP)
}

/// Exact treewidth with an optimal elimination order.
///
/// Each connected component is solved by dynamic programming over vertex
/// subsets: `best(S)` is the least width with which `S` can be eliminated
/// first, and `best(S) = min_v max(best(S - v), q(S - v, v))` where `q(T, v)`
/// counts vertices outside `T + v` reachable from `v` through `T`. Ties go to
/// the lowest vertex id. The per-component orders are concatenated.
pub fn treewidth_exact_capped(g: &Graph, cap: usize) -> Result<(usize, EliminationOrder)> {
    if cap > MAX_EXACT_CAP {
        return Err(Error::InvalidParameter(format!(
            "exact cap {cap} exceeds the supported maximum of {MAX_EXACT_CAP}"
        )));
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > cap {
        return Err(Error::OverCap { n: g.n(), cap });
    }
    let mut order = Vec::with_capacity(g.n());
    let mut width = 0;
    for comp in g.components() {
        let members = comp.to_vec();
        if members.len() <= 2 {
            width = width.max(members.len() - 1);
            order.extend(members);
            continue;
        }
        let local = g.induced_subgraph(comp)?;
        let (w, local_order) = subset_dp(&local);
        width = width.max(w);
        order.extend(local_order.into_iter().map(|i| members[i]));
    }
    let ord = EliminationOrder::new(g, order)?;
    debug_assert_eq!(ord.width(), width);
    Ok((width, ord))
}

fn subset_dp(h: &Graph) -> (usize, Vec<usize>) {
    let n = h.n();
    let rows = h.rows();
    let size = 1usize << n;
    let mut best = vec![0u8; size];
    let mut choice = vec![0u8; size];
    for s in 1..size {
        let mut best_width = u8::MAX;
        let mut best_vertex = 0u8;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let before = best[prev];
            if before >= best_width {
                continue;
            }
            let w = before.max(later_degree(rows, prev as u64, v) as u8);
            if w < best_width {
                best_width = w;
                best_vertex = v as u8;
            }
        }
        best[s] = best_width;
        choice[s] = best_vertex;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let v = choice[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    (best[size - 1] as usize, order)
}

// Vertices outside `eliminated + v` adjacent to the component of `v` in
// the subgraph induced by `eliminated + v`.
#[inline]
fn later_degree(rows: &[u64], eliminated: u64, v: usize) -> u32 {
    let mut seen = bit(v);
    let mut frontier = seen;
    let mut outside = 0u64;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = rows[u];
        outside |= nb & !eliminated;
        let new = nb & eliminated & !seen;
        seen |= new;
        frontier |= new;
    }
    (outside & !bit(v)).count_ones()
}

/// Minimum fill-in width over all `n!` elimination orders. Test oracle for
/// [`treewidth_exact`]; `n <= 8`.
pub fn treewidth_oracle_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "brute-force oracle handles at most {ORACLE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    // Heap's algorithm.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut best = order_width(g, &perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            best = best.min(order_width(g, &perm));
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

fn order_width(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut gone = vec![false; n];
    let mut width = 0;
    for &v in order {
        gone[v] = true;
        let later: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
        width = width.max(later.len());
        for &a in &later {
            for &b in &later {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
    }
    width
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_labeled_graphs;
    use crate::generators::{self, complete, cycle, empty, gen_qnk, path, petersen, sample_gnp};

    #[test]
    fn complete_graphs() {
        for n in 1..=9 {
            let (w, ord) = treewidth_exact(&complete(n)).unwrap();
            assert_eq!(w, n - 1);
            assert_eq!(ord.width(), n - 1);
        }
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(treewidth_exact(&empty(1)).unwrap().0, 0);
        assert_eq!(treewidth_exact(&empty(5)).unwrap().0, 0);
        assert_eq!(treewidth_exact(&empty(0)), Err(Error::EmptyGraph));
        assert_eq!(
            treewidth_oracle_bruteforce(&empty(0)),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn qnk_has_width_k() {
        for n in 2..12 {
            for k in 1..n {
                assert_eq!(
                    treewidth_exact(&gen_qnk(n, k).unwrap()).unwrap().0,
                    k,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn c5_matches_all_orderings() {
        assert_eq!(treewidth_oracle_bruteforce(&cycle(5)).unwrap(), 2);
        assert_eq!(treewidth_exact(&cycle(5)).unwrap().0, 2);
    }

    #[test]
    fn petersen_is_four() {
        let (w, ord) = treewidth_exact(&petersen()).unwrap();
        assert_eq!(w, 4);
        assert_eq!(
            EliminationOrder::new(&petersen(), ord.order().to_vec())
                .unwrap()
                .width(),
            4
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(treewidth_oracle_bruteforce(&complete(4)).unwrap(), 3);
        assert_eq!(treewidth_oracle_bruteforce(&path(4)).unwrap(), 1);
        assert!(treewidth_oracle_bruteforce(&path(9)).is_err());
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(
            treewidth_exact(&path(21)),
            Err(Error::OverCap { n: 21, cap: 20 })
        );
        assert_eq!(treewidth_exact_capped(&path(21), 22).unwrap().0, 1);
        assert!(treewidth_exact_capped(&path(3), MAX_EXACT_CAP + 1).is_err());
    }

    #[test]
    fn rejects_bad_orders() {
        let g = path(3);
        assert!(EliminationOrder::new(&g, vec![0, 1]).is_err());
        assert!(EliminationOrder::new(&g, vec![0, 1, 1]).is_err());
        assert!(EliminationOrder::new(&g, vec![0, 1, 3]).is_err());
        assert_eq!(EliminationOrder::new(&g, vec![1, 0, 2]).unwrap().width(), 2);
        assert_eq!(EliminationOrder::new(&g, vec![0, 1, 2]).unwrap().width(), 1);
    }

    #[test]
    fn agrees_with_oracle_exhaustively_up_to_six() {
        for n in 1..=6 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                let (w, ord) = treewidth_exact(&g).unwrap();
                assert_eq!(w, treewidth_oracle_bruteforce(&g).unwrap(), "{g:?}");
                assert_eq!(ord.width(), w);
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_random_graphs() {
        let mut rng = generators::rng(2024);
        for i in 0..500 {
            let n = 7 + i % 2;
            let g = sample_gnp(n, 0.5, &mut rng).unwrap();
            assert_eq!(
                treewidth_exact(&g).unwrap().0,
                treewidth_oracle_bruteforce(&g).unwrap()
            );
        }
    }

    #[test]
    fn width_is_max_over_components() {
        let mut rng = generators::rng(11);
        for _ in 0..50 {
            let a = sample_gnp(6, 0.6, &mut rng).unwrap();
            let b = sample_gnp(5, 0.4, &mut rng).unwrap();
            let mut g = Graph::new(11).unwrap();
            for (u, v) in a.edges() {
                g.add_edge(u, v);
            }
            for (u, v) in b.edges() {
                g.add_edge(u + 6, v + 6);
            }
            let wa = treewidth_exact(&a).unwrap().0;
            let wb = treewidth_exact(&b).unwrap().0;
            assert_eq!(treewidth_exact(&g).unwrap().0, wa.max(wb));
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_width() {
        let mut rng = generators::rng(5);
        for _ in 0..200 {
            let g = sample_gnp(9, 0.4, &mut rng).unwrap();
            let missing = g.complement().edges();
            if missing.is_empty() {
                continue;
            }
            let (u, v) = missing[rand::Rng::random_range(&mut rng, 0..missing.len())];
            let mut h = g.clone();
            h.add_edge(u, v);
            assert!(treewidth_exact(&g).unwrap().0 <= treewidth_exact(&h).unwrap().0);
        }
    }

    #[test]
    fn twenty_vertices_within_default_cap() {
        let g = generators::gen_gnp(20, 0.3, 1).unwrap();
        let (w, ord) = treewidth_exact(&g).unwrap();
        assert_eq!(ord.width(), w);
        let (hw, _) = width_upper_heuristic(&g, Heuristic::MinFill).unwrap();
        assert!(w <= hw);
    }
}
