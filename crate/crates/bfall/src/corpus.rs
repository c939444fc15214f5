//! Seeded random graph corpora shared by the property tests and the claim
//! reproduction suite. Everything is deterministic in the seed.

use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_for_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with the given edge probability.
pub fn random_graph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graphs with 1..=max_n vertices and mixed densities.
pub fn graph_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = rng_for_seed(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.15..0.85);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// Random graphs guaranteed to contain at least one edge (2..=max_n
/// vertices). Factor corpora use this: the product corollaries for the direct
/// product assume factors with edges.
pub fn random_graph_with_edge(rng: &mut impl Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.3..0.85);
        let g = random_graph(rng, n, p);
        if g.edge_count() > 0 {
            return g;
        }
    }
}

/// Pairs of factors for product corollaries, each with at least one edge.
pub fn factor_pairs(seed: u64, count: usize, max_n: usize) -> Vec<(Graph, Graph)> {
    let mut rng = rng_for_seed(seed);
    (0..count)
        .map(|_| {
            (
                random_graph_with_edge(&mut rng, max_n),
                random_graph_with_edge(&mut rng, max_n),
            )
        })
        .collect()
}

/// Triples (G, H, F) for the lifting lemmas; no structural restrictions.
pub fn triples(seed: u64, count: usize, max_n: usize) -> Vec<(Graph, Graph, Graph)> {
    let mut rng = rng_for_seed(seed);
    (0..count)
        .map(|_| {
            let mut next = || {
                let n = rng.gen_range(1..=max_n);
                let p = rng.gen_range(0.2..0.8);
                random_graph(&mut rng, n, p)
            };
            (next(), next(), next())
        })
        .collect()
}
