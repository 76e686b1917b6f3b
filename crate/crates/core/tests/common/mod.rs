#![allow(dead_code)]

use signed_indices::generators::{random_signed, RandomGraphSpec, SignPattern};
use signed_indices::{Sign, SignedGraph};

pub fn p3() -> SignedGraph {
    SignedGraph::build(3, [(0, 1, Sign::Plus), (1, 2, Sign::Minus)]).unwrap()
}

pub fn c4_alternating() -> SignedGraph {
    SignedGraph::build(
        4,
        [
            (0, 1, Sign::Plus),
            (1, 2, Sign::Minus),
            (2, 3, Sign::Plus),
            (0, 3, Sign::Minus),
        ],
    )
    .unwrap()
}

/// Every signed graph on `n` labelled vertices: each of the n(n-1)/2 pairs
/// is absent, positive or negative.
pub fn all_signed_graphs(n: usize) -> Vec<SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut edges = Vec::new();
            for &(u, v) in &pairs {
                match code % 3 {
                    1 => edges.push((u, v, Sign::Plus)),
                    2 => edges.push((u, v, Sign::Minus)),
                    _ => {}
                }
                code /= 3;
            }
            SignedGraph::build(n, edges).unwrap()
        })
        .collect()
}

/// The exhaustive corpus for n = 0..=4 (761 graphs).
pub fn exhaustive_corpus() -> Vec<SignedGraph> {
    (0..=4).flat_map(all_signed_graphs).collect()
}

/// `count` seeded random connected graphs with 5 <= n <= 12.
pub fn random_connected_corpus(count: usize, base_seed: u64) -> Vec<SignedGraph> {
    (0..count)
        .map(|i| {
            let seed = base_seed + i as u64;
            random_signed(&RandomGraphSpec {
                n: 5 + i % 8,
                edge_probability: 0.3 + 0.1 * (i % 6) as f64,
                pattern: SignPattern::Random {
                    p_plus: 0.1 + 0.2 * (i % 5) as f64,
                    seed,
                },
                seed,
                require_connected: true,
            })
            .unwrap()
        })
        .collect()
}

/// Seeded random graphs that are usually disconnected.
pub fn random_sparse_corpus(count: usize, base_seed: u64) -> Vec<SignedGraph> {
    (0..count)
        .map(|i| {
            let seed = base_seed + i as u64;
            random_signed(&RandomGraphSpec {
                n: 1 + i % 16,
                edge_probability: 0.15,
                pattern: SignPattern::Random { p_plus: 0.5, seed },
                seed,
                require_connected: false,
            })
            .unwrap()
        })
        .collect()
}
