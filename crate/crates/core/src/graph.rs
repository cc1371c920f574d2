//! Dense simple graphs on at most 64 vertices.
//!
//! Every graph in this crate is a symmetric, irreflexive adjacency relation on
//! `0..n`, stored as one `u64` row per vertex. Vertex subsets are plain
//! bitmasks wrapped in [`VertexSet`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex ids below 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} out of range");
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !bit(v);
        }
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

impl Girth {
    pub fn at_least(self, len: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= len,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.rows[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Adds `uv`; adding an existing edge is a no-op. Panics on a loop or an
    /// out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u}-{v}");
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.rows[u] &= !bit(v);
            self.rows[v] &= !bit(u);
        }
    }

    /// Makes `s` a clique.
    pub fn add_clique(&mut self, s: VertexSet) {
        for v in s {
            self.rows[v] |= s.0 & !bit(v);
        }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.0 & !bit(v) & !self.rows[v] == 0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.rows[v] & s.0 == 0)
    }

    /// Every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let all = low_bits(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect();
        Graph { n: self.n, rows }
    }

    /// Pointwise union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Graph { n: self.n, rows })
    }

    /// `G[s]` relabeled densely in ascending order of original id.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members = s.to_vec();
        let mut h = Graph::new(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let comp = self.reach(bit(v), low_bits(self.n));
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.rows[v] & within & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// `G[s]` is connected. The empty set is not.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) if v < self.n => self.reach(bit(v), s.0) == s.0,
            Some(_) => false,
        }
    }

    /// Size of a maximum clique with one maximum clique as witness.
    ///
    /// Branch and bound over candidate sets in ascending vertex order; the
    /// witness is the first maximum clique met in that order.
    pub fn clique_number(&self) -> Result<(usize, VertexSet)> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = bit(0);
        self.expand_clique(0, low_bits(self.n), &mut best);
        Ok((best.count_ones() as usize, VertexSet(best)))
    }

    fn expand_clique(&self, current: u64, mut candidates: u64, best: &mut u64) {
        if candidates == 0 {
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        while candidates != 0 {
            if current.count_ones() + candidates.count_ones() <= best.count_ones() {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.expand_clique(current | bit(v), candidates & self.rows[v], best);
        }
    }

    pub fn girth(&self) -> Girth {
        match self.shortest_cycle() {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// A shortest cycle as a vertex sequence, or `None` for forests.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::with_capacity(n);
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // Nothing shorter can be closed from deeper levels.
                if let Some(b) = &best {
                    if 2 * dist[u] + 1 >= b.len() {
                        break;
                    }
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && dist[w] >= dist[u] {
                        let len = dist[u] + dist[w] + 1;
                        if best.as_ref().is_none_or(|b| len < b.len()) {
                            best = Some(close_cycle(&parent, u, w));
                        }
                    }
                }
            }
        }
        best
    }

    /// Four vertices `(a, b, c, d)` inducing exactly the cycle a-b-c-d-a.
    pub fn induced_c4(&self) -> Option<[usize; 4]> {
        for a in 0..self.n {
            for c in (a + 1)..self.n {
                if self.has_edge(a, c) {
                    continue;
                }
                let common = self.rows[a] & self.rows[c];
                for b in VertexSet(common) {
                    let far = common & !self.rows[b] & !low_bits(b + 1);
                    if far != 0 {
                        return Some([a, b, c, far.trailing_zeros() as usize]);
                    }
                }
            }
        }
        None
    }

    pub fn has_induced_c4(&self) -> bool {
        self.induced_c4().is_some()
    }
}

// Cycle through the BFS-tree paths root..u and root..w plus the edge uw.
fn close_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path(u);
    let mut pw = path(w);
    pw.pop();
    let mut cycle: Vec<usize> = pu.into_iter().rev().collect();
    cycle.extend(pw);
    cycle
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, empty, gen_qnk, path, petersen};

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(complete(4).complement(), empty(4));
    }

    #[test]
    fn c5_is_self_complementary_on_chords() {
        let c = cycle(5).complement();
        // 0-2-4-1-3-0
        let expected = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn complement_of_q52_is_triangle_plus_isolated() {
        let c = gen_qnk(5, 2).unwrap().complement();
        assert_eq!(c.degree(0), 0);
        assert_eq!(c.degree(1), 0);
        assert!(c.is_clique(VertexSet::from_iter([2, 3, 4])));
        assert_eq!(c.edge_count(), 3);
    }

    #[test]
    fn union_examples() {
        let p3 = path(3);
        let e = Graph::from_edges(3, &[(0, 2)]).unwrap();
        assert_eq!(p3.union(&e).unwrap(), complete(3));
        let p = petersen();
        assert_eq!(p.union(&p.complement()).unwrap(), complete(10));
        assert_eq!(p.union(&empty(10)).unwrap(), p);
        assert_eq!(p.union(&empty(9)), Err(Error::SizeMismatch(10, 9)));
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        let s = VertexSet::from_iter([0, 1, 2]);
        assert_eq!(c5.induced_subgraph(s).unwrap(), path(3));
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
        let k5 = complete(5);
        assert_eq!(
            k5.induced_subgraph(VertexSet::from_iter([1, 3, 4]))
                .unwrap(),
            complete(3)
        );
        assert_eq!(
            c5.induced_subgraph(VertexSet::from_iter([0, 7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        );
    }

    #[test]
    fn induced_subgraph_relabels_ascending() {
        let g = Graph::from_edges(5, &[(1, 4), (3, 4)]).unwrap();
        let h = g.induced_subgraph(VertexSet::from_iter([4, 1, 3])).unwrap();
        assert_eq!(h, Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap());
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(cycle(5).clique_number().unwrap().0, 2);
        for (n, k) in [(5, 2), (7, 3), (4, 1), (6, 5)] {
            let (w, witness) = gen_qnk(n, k).unwrap().clique_number().unwrap();
            assert_eq!(w, k + 1);
            assert!(gen_qnk(n, k).unwrap().is_clique(witness));
        }
        assert_eq!(empty(3).clique_number().unwrap().0, 1);
        assert_eq!(
            Graph::new(0).unwrap().clique_number(),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn petersen_is_triangle_free_by_enumeration() {
        let p = petersen();
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    assert!(!(p.has_edge(a, b) && p.has_edge(b, c) && p.has_edge(a, c)));
                }
            }
        }
        assert_eq!(p.clique_number().unwrap().0, 2);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).girth(), Girth::Finite(5));
        assert_eq!(path(6).girth(), Girth::Infinite);
        assert_eq!(empty(3).girth(), Girth::Infinite);
        assert_eq!(complete(4).girth(), Girth::Finite(3));
        assert_eq!(petersen().girth(), Girth::Finite(5));
        assert_eq!(cycle(4).girth(), Girth::Finite(4));
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        for g in [petersen(), cycle(7), complete(5), gen_qnk(6, 2).unwrap()] {
            let c = g.shortest_cycle().unwrap();
            let set: VertexSet = c.iter().copied().collect();
            assert_eq!(set.len(), c.len());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn induced_c4_examples() {
        assert_eq!(cycle(4).induced_c4(), Some([0, 1, 2, 3]));
        assert_eq!(complete(4).induced_c4(), None);
        assert_eq!(cycle(5).induced_c4(), None);
        let [a, b, c, d] = petersen().complement().induced_c4().unwrap();
        let g = petersen().complement();
        assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a));
        assert!(!g.has_edge(a, c) && !g.has_edge(b, d));
    }

    #[test]
    fn vertex_set_serializes_as_array() {
        let s = VertexSet::from_iter([3, 0, 5]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3,5]");
        let back: VertexSet = serde_json::from_str("[5,3,0]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }
}
