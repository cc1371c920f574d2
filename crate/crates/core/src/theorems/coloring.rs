use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{bit, low_bits, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// Colour of each vertex, `0..count`.
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    /// The first monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .into_iter()
            .find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && self.conflict(g).is_none()
    }
}

/// Smallest-last greedy colouring of `g1 ∪ g2`.
///
/// Repeatedly removes a vertex of minimum degree in what is left of the
/// union (lowest id on ties), then colours vertices in reverse removal
/// order with the least colour unused by already-coloured neighbours.
pub fn greedy_union_coloring(g1: &Graph, g2: &Graph) -> Result<Coloring> {
    let union = g1.union(g2)?;
    Ok(smallest_last_coloring(&union))
}

pub fn smallest_last_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut remaining = low_bits(n);
    let mut removal = Vec::with_capacity(n);
    while remaining != 0 {
        let v = VertexSet::from_bits(remaining)
            .iter()
            .min_by_key(|&v| ((g.neighbors(v).bits() & remaining).count_ones(), v))
            .expect("non-empty");
        remaining &= !bit(v);
        removal.push(v);
    }
    let mut colors = vec![usize::MAX; n];
    let mut count = 0;
    for &v in removal.iter().rev() {
        let used: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|u| colors[u])
            .filter(|&c| c != usize::MAX)
            .collect();
        let c = (0..).find(|c| !used.contains(c)).expect("unbounded range");
        colors[v] = c;
        count = count.max(c + 1);
    }
    Coloring { colors, count }
}
