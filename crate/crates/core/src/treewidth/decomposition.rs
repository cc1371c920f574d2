use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_permutation, filled_later_neighbors, EliminationOrder};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Bags indexed `0..bags.len()` joined by `edges` into a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { bags, edges }
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }
}

/// First violated tree-decomposition condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    NoBags,
    BagIndexOutOfRange {
        edge: (usize, usize),
    },
    VertexOutOfRange {
        bag: usize,
        vertex: usize,
    },
    /// Edge count differs from bags - 1, or the bag graph has a cycle.
    NotATree,
    Disconnected,
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    /// The bags holding this vertex do not form a subtree.
    SubtreeBroken(usize),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::NoBags => write!(f, "decomposition has no bags"),
            TdViolation::BagIndexOutOfRange { edge: (a, b) } => {
                write!(f, "tree edge {a}-{b} names a missing bag")
            }
            TdViolation::VertexOutOfRange { bag, vertex } => {
                write!(
                    f,
                    "bag {bag} holds vertex {vertex}, which is not in the graph"
                )
            }
            TdViolation::NotATree => write!(f, "bag graph is not a tree"),
            TdViolation::Disconnected => write!(f, "bag graph is disconnected"),
            TdViolation::VertexUncovered(v) => write!(f, "vertex {v} uncovered"),
            TdViolation::EdgeUncovered(u, v) => write!(f, "edge {u}-{v} uncovered"),
            TdViolation::SubtreeBroken(v) => {
                write!(f, "bags containing vertex {v} are not connected")
            }
        }
    }
}

impl std::error::Error for TdViolation {}

pub fn verify_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
) -> std::result::Result<(), TdViolation> {
    let nb = td.bags.len();
    if nb == 0 {
        return Err(TdViolation::NoBags);
    }
    for (i, bag) in td.bags.iter().enumerate() {
        if let Some(v) = bag.difference(g.vertices()).first() {
            return Err(TdViolation::VertexOutOfRange { bag: i, vertex: v });
        }
    }
    let mut adj = vec![Vec::new(); nb];
    for &(a, b) in &td.edges {
        if a >= nb || b >= nb {
            return Err(TdViolation::BagIndexOutOfRange { edge: (a, b) });
        }
        if a == b {
            return Err(TdViolation::NotATree);
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    if td.edges.len() != nb - 1 {
        return Err(TdViolation::NotATree);
    }
    // n - 1 edges: connected iff acyclic.
    if reachable(&adj, 0, |_| true).len() != nb {
        return Err(TdViolation::Disconnected);
    }
    for v in 0..g.n() {
        if !td.bags.iter().any(|b| b.contains(v)) {
            return Err(TdViolation::VertexUncovered(v));
        }
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Err(TdViolation::EdgeUncovered(u, v));
        }
    }
    for v in 0..g.n() {
        let holders: Vec<usize> = (0..nb).filter(|&i| td.bags[i].contains(v)).collect();
        if reachable(&adj, holders[0], |i| td.bags[i].contains(v)).len() != holders.len() {
            return Err(TdViolation::SubtreeBroken(v));
        }
    }
    Ok(())
}

fn reachable(adj: &[Vec<usize>], start: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    let mut out = Vec::new();
    seen[start] = true;
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in &adj[x] {
            if !seen[y] && keep(y) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    out
}

/// Tree decomposition with one bag per vertex, `{v} + later(v)`, hung below
/// the bag of the earliest-eliminated later neighbour; bags without a later
/// neighbour hang below the last vertex's bag. Bags contained in a
/// neighbouring bag are then contracted away.
pub fn decomposition_from_order(g: &Graph, ord: &EliminationOrder) -> Result<TreeDecomposition> {
    let order = ord.order();
    check_permutation(g.n(), order)?;
    let n = g.n();
    if n == 0 {
        return Ok(TreeDecomposition::new(Vec::new(), Vec::new()));
    }
    let later = filled_later_neighbors(g, order);
    let pos = ord.positions();
    let bags: Vec<VertexSet> = order
        .iter()
        .map(|&v| {
            let mut b = later[v];
            b.insert(v);
            b
        })
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for (i, &v) in order.iter().enumerate().take(n - 1) {
        let parent = later[v].iter().map(|u| pos[u]).min().unwrap_or(n - 1);
        edges.push((i, parent));
    }
    Ok(contract_subset_bags(TreeDecomposition::new(bags, edges)))
}

fn contract_subset_bags(td: TreeDecomposition) -> TreeDecomposition {
    let nb = td.bags.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for &(a, b) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut alive = vec![true; nb];
    loop {
        let found = (0..nb).filter(|&a| alive[a]).find_map(|a| {
            adj[a]
                .iter()
                .find(|&&b| td.bags[a].is_subset(td.bags[b]))
                .map(|&b| (a, b))
        });
        let Some((a, b)) = found else { break };
        alive[a] = false;
        let moved = std::mem::take(&mut adj[a]);
        for c in moved {
            adj[c].retain(|&x| x != a);
            if c != b {
                adj[c].push(b);
                adj[b].push(c);
            }
        }
    }
    let mut index = vec![usize::MAX; nb];
    let mut bags = Vec::new();
    for i in (0..nb).filter(|&i| alive[i]) {
        index[i] = bags.len();
        bags.push(td.bags[i]);
    }
    let mut edges = Vec::new();
    for a in 0..nb {
        for &b in &adj[a] {
            if a < b {
                edges.push((index[a], index[b]));
            }
        }
    }
    edges.sort_unstable();
    TreeDecomposition::new(bags, edges)
}
