//! Named graphs and seeded random families.
//!
//! Random generators use `ChaCha8Rng::seed_from_u64(seed)`; the generator
//! name is exported as [`RNG_NAME`] so reports can record it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::treewidth::EliminationOrder;

pub const RNG_NAME: &str = "ChaCha8Rng::seed_from_u64";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn checked(n: usize) -> Graph {
    assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
    Graph::new(n).expect("size checked")
}

pub fn empty(n: usize) -> Graph {
    checked(n)
}

pub fn complete(n: usize) -> Graph {
    let mut g = checked(n);
    g.add_clique(g.vertices());
    g
}

/// Path 0-1-..-(n-1).
pub fn path(n: usize) -> Graph {
    let mut g = checked(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle 0-1-..-(n-1)-0, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Star with center 0.
pub fn star(n: usize) -> Graph {
    let mut g = checked(n);
    for v in 1..n {
        g.add_edge(0, v);
    }
    g
}

/// Petersen graph: outer 5-cycle 0..4, spokes i-(i+5), inner pentagram.
pub fn petersen() -> Graph {
    let mut g = checked(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// `Q_n^k`: the clique `C = {0..k-1}` plus vertices `k..n-1`, each adjacent
/// exactly to `C`.
pub fn gen_qnk(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || k + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "Q_n^k needs 1 <= k <= n-1 (n={n}, k={k})"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = checked(n);
    let clique = VertexSet::full(k);
    g.add_clique(clique);
    for v in k..n {
        for c in clique {
            g.add_edge(v, c);
        }
    }
    Ok(g)
}

/// Random k-tree on `n` vertices, labeled in construction order.
///
/// Starts from the clique on `0..=k`; vertex `v > k` is joined to a k-clique
/// drawn uniformly from every k-clique created so far. The returned
/// elimination order is the reverse construction order (width `k`).
pub fn gen_random_ktree(n: usize, k: usize, seed: u64) -> Result<(Graph, EliminationOrder)> {
    if n < k + 1 {
        return Err(Error::InvalidParameter(format!(
            "a {k}-tree needs at least {} vertices",
            k + 1
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut rng = rng(seed);
    let mut g = checked(n);
    let base = VertexSet::full(k + 1);
    g.add_clique(base);
    let mut cliques: Vec<VertexSet> = base
        .iter()
        .map(|v| base.difference(VertexSet::from_iter([v])))
        .collect();
    for v in (k + 1)..n {
        let c = cliques[rng.random_range(0..cliques.len())];
        for u in c {
            g.add_edge(u, v);
        }
        for u in c {
            let mut next = c;
            next.remove(u);
            next.insert(v);
            cliques.push(next);
        }
    }
    let order = EliminationOrder::new(&g, (0..n).rev().collect())?;
    debug_assert_eq!(order.width(), k);
    Ok((g, order))
}

/// k-th power of a path: clique on `0..=k`, then vertex `v` joined to
/// `v-k..v-1`.
pub fn path_power_ktree(n: usize, k: usize) -> Result<Graph> {
    if n < k + 1 {
        return Err(Error::InvalidParameter(format!(
            "a {k}-tree needs at least {} vertices",
            k + 1
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = checked(n);
    for v in 0..n {
        for u in v.saturating_sub(k)..v {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Erdos-Renyi `G(n, p)`; pairs are sampled in graph6 order
/// (0,1), (0,2), (1,2), (0,3), ...
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    sample_gnp(n, p, &mut rng(seed))
}

/// `G(n, p)` drawn from an existing generator, for sampling several graphs
/// from one seed.
pub fn sample_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut g = Graph::new(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treewidth::is_ktree;

    #[test]
    fn qnk_edge_count_and_degrees() {
        let q = gen_qnk(5, 2).unwrap();
        assert_eq!(q.edge_count(), 7);
        let degrees: Vec<_> = (0..5).map(|v| q.degree(v)).collect();
        assert_eq!(degrees, vec![4, 4, 2, 2, 2]);
        for n in 2..12 {
            for k in 1..n {
                let q = gen_qnk(n, k).unwrap();
                assert_eq!(q.edge_count(), k * (k - 1) / 2 + k * (n - k));
                assert_eq!(
                    (0..n).filter(|&v| q.degree(v) == n - 1).count(),
                    if k == n - 1 { n } else { k }
                );
                assert!((k..n).all(|v| q.degree(v) == k));
            }
        }
    }

    #[test]
    fn qnk_special_cases() {
        assert_eq!(gen_qnk(4, 3).unwrap(), complete(4));
        assert_eq!(gen_qnk(6, 1).unwrap(), star(6));
        assert!(gen_qnk(4, 0).is_err());
        assert!(gen_qnk(4, 4).is_err());
    }

    #[test]
    fn random_ktree_base_case_is_clique() {
        for seed in 0..5 {
            assert_eq!(gen_random_ktree(4, 3, seed).unwrap().0, complete(4));
        }
    }

    #[test]
    fn random_ktree_edge_count() {
        let (g, ord) = gen_random_ktree(10, 3, 42).unwrap();
        assert_eq!(g.edge_count(), 24);
        assert_eq!(ord.width(), 3);
        assert!(is_ktree(&g, 3));
    }

    #[test]
    fn random_ktrees_are_ktrees() {
        for k in 0..5 {
            for n in (k + 1)..14 {
                for seed in 0..5 {
                    let (g, _) = gen_random_ktree(n, k, seed).unwrap();
                    assert!(is_ktree(&g, k), "n={n} k={k} seed={seed}");
                    assert_eq!(g.edge_count(), k * n - k * (k + 1) / 2);
                }
            }
        }
    }

    #[test]
    fn random_ktree_is_deterministic() {
        assert_eq!(
            gen_random_ktree(12, 2, 9).unwrap().0,
            gen_random_ktree(12, 2, 9).unwrap().0
        );
    }

    #[test]
    fn path_power_is_ktree() {
        assert_eq!(path_power_ktree(5, 1).unwrap(), path(5));
        for k in 1..5 {
            for n in (k + 1)..12 {
                assert!(is_ktree(&path_power_ktree(n, k).unwrap(), k));
            }
        }
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(gen_gnp(9, 0.0, 3).unwrap(), empty(9));
        assert_eq!(gen_gnp(9, 1.0, 3).unwrap(), complete(9));
        assert_eq!(gen_gnp(16, 0.5, 7).unwrap(), gen_gnp(16, 0.5, 7).unwrap());
        assert!(gen_gnp(4, 1.5, 0).is_err());
        assert!(gen_gnp(4, -0.1, 0).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
