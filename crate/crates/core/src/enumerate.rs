//! Exhaustive enumeration of labeled graphs on a few vertices.
//!
//! Graph number `i` on `n` vertices contains the `p`-th pair of the graph6
//! pair order `(0,1), (0,2), (1,2), (0,3), ...` iff bit `m - 1 - p` of `i`
//! is set, where `m = n(n-1)/2`. Enumerating `i = 0, 1, ..` therefore walks
//! the graphs in lexicographic order of their adjacency bit strings, which
//! is also the lexicographic order of their graph6 encodings.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_VERTICES: usize = 7;

pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Graph number `index` in the enumeration order above.
pub fn labeled_graph(n: usize, index: u64) -> Graph {
    assert!(n <= MAX_ENUMERATION_VERTICES && index < labeled_graph_count(n));
    let m = n * n.saturating_sub(1) / 2;
    let mut g = Graph::new(n).expect("small n");
    let mut p = 0;
    for v in 1..n {
        for u in 0..v {
            if index >> (m - 1 - p) & 1 == 1 {
                g.add_edge(u, v);
            }
            p += 1;
        }
    }
    g
}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::EnumerationTooLarge(n));
    }
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: labeled_graph_count(n),
    })
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = labeled_graph(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::emit_graph6;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().count(), 1024);
        assert_eq!(enumerate_labeled_graphs(7).unwrap().len(), 2_097_152);
    }

    #[test]
    fn over_cap_rejected() {
        assert_eq!(
            enumerate_labeled_graphs(8).unwrap_err(),
            Error::EnumerationTooLarge(8)
        );
        assert!(Error::EnumerationTooLarge(8).to_string().contains("graph6"));
    }

    #[test]
    fn distinct_and_lexicographic() {
        for n in 1..=5 {
            let codes: Vec<String> = enumerate_labeled_graphs(n)
                .unwrap()
                .map(|g| emit_graph6(&g))
                .collect();
            let unique: HashSet<_> = codes.iter().collect();
            assert_eq!(unique.len() as u64, labeled_graph_count(n));
            assert!(codes.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn endpoints() {
        let all: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(all[0].edge_count(), 0);
        assert_eq!(all[63].edge_count(), 6);
        assert_eq!(all[1].edges(), vec![(2, 3)]);
        assert_eq!(all[32].edges(), vec![(0, 1)]);
    }
}
