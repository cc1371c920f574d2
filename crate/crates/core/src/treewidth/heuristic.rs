use serde::{Deserialize, Serialize};

use super::EliminationOrder;
use crate::error::{Error, Result};
use crate::graph::{bit, low_bits, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Heuristic {
    MinDegree,
    MinFill,
}

/// Greedy elimination: repeatedly eliminate the vertex with the fewest
/// remaining neighbours (or the fewest missing edges among them), lowest
/// id first on ties. The width is an upper bound on treewidth.
pub fn width_upper_heuristic(g: &Graph, strategy: Heuristic) -> Result<(usize, EliminationOrder)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rows = g.rows().to_vec();
    let mut remaining = low_bits(n);
    let mut order = Vec::with_capacity(n);
    while remaining != 0 {
        let score = |v: usize| -> usize {
            let nb = rows[v] & remaining;
            match strategy {
                Heuristic::MinDegree => nb.count_ones() as usize,
                Heuristic::MinFill => {
                    VertexSet::from_bits(nb)
                        .iter()
                        .map(|u| (nb & !rows[u] & !bit(u)).count_ones() as usize)
                        .sum::<usize>()
                        / 2
                }
            }
        };
        let v = VertexSet::from_bits(remaining)
            .iter()
            .min_by_key(|&v| (score(v), v))
            .expect("remaining is non-empty");
        let nb = rows[v] & remaining & !bit(v);
        for u in VertexSet::from_bits(nb) {
            rows[u] |= nb & !bit(u);
        }
        remaining &= !bit(v);
        order.push(v);
    }
    let ord = EliminationOrder::new(g, order)?;
    Ok((ord.width(), ord))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, complete, gen_random_ktree, path, sample_gnp, star};
    use crate::treewidth::treewidth_exact;

    #[test]
    fn trees_give_width_one() {
        for h in [Heuristic::MinDegree, Heuristic::MinFill] {
            assert_eq!(width_upper_heuristic(&path(9), h).unwrap().0, 1);
            assert_eq!(width_upper_heuristic(&star(7), h).unwrap().0, 1);
            let (t, _) = gen_random_ktree(15, 1, 3).unwrap();
            assert_eq!(width_upper_heuristic(&t, h).unwrap().0, 1);
        }
    }

    #[test]
    fn complete_graph_is_tight() {
        for n in 1..8 {
            assert_eq!(
                width_upper_heuristic(&complete(n), Heuristic::MinDegree)
                    .unwrap()
                    .0,
                n - 1
            );
        }
    }

    #[test]
    fn upper_bounds_exact_width() {
        let mut rng = generators::rng(31);
        for i in 0..500 {
            let n = 1 + i % 10;
            let g = sample_gnp(n, 0.5, &mut rng).unwrap();
            let tw = treewidth_exact(&g).unwrap().0;
            for h in [Heuristic::MinDegree, Heuristic::MinFill] {
                let (w, ord) = width_upper_heuristic(&g, h).unwrap();
                assert!(w >= tw);
                assert_eq!(ord.width(), w);
            }
        }
    }

    #[test]
    fn ktrees_are_solved_exactly_by_min_fill() {
        for seed in 0..20 {
            let (g, _) = gen_random_ktree(30, 3, seed).unwrap();
            assert_eq!(width_upper_heuristic(&g, Heuristic::MinFill).unwrap().0, 3);
        }
    }
}
