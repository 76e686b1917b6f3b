//! All-pairs hop distances and the distance-weighted Schultz and Gutman
//! families.
//!
//! Distances are those of the underlying graph (signs never affect a path
//! length). Both families sum over unordered pairs of distinct vertices.
//! The mixed Gutman term is symmetrized, `(d⁺(u)d⁻(v) + d⁻(u)d⁺(v))·d(u,v)`,
//! so that `G(G) = G⁺ + G⁻ + G*` and `G(S) = G⁺ + G⁻ − G*` hold exactly.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DegreeTriple, SignedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("graph is disconnected; distance-based indices are undefined")]
    DisconnectedGraph,
}

/// Dense symmetric matrix of hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SchultzReport {
    pub s_pos: u64,
    pub s_neg: u64,
    pub s_net: i64,
    pub s_underlying: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct GutmanReport {
    pub g_pos: u64,
    pub g_neg: u64,
    pub g_mixed: u64,
    pub g_net: i64,
    pub g_underlying: u64,
}

fn bfs_row(graph: &SignedGraph, source: usize, row: &mut [u32]) {
    row.fill(u32::MAX);
    row[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &w in graph.neighbors(u) {
            if row[w] == u32::MAX {
                row[w] = next;
                queue.push_back(w);
            }
        }
    }
}

/// Breadth-first search from every vertex; rows are filled in parallel.
pub fn all_pairs_distances(graph: &SignedGraph) -> Result<DistanceMatrix, DistanceError> {
    if !graph.is_connected() {
        return Err(DistanceError::DisconnectedGraph);
    }
    let n = graph.vertex_count();
    let mut d = vec![0u32; n * n];
    if n > 0 {
        d.par_chunks_mut(n)
            .enumerate()
            .for_each(|(source, row)| bfs_row(graph, source, row));
    }
    Ok(DistanceMatrix { n, d })
}

/// Per-vertex degree columns as signed integers, one per degree kind.
struct Columns {
    pos: Vec<i64>,
    neg: Vec<i64>,
    net: Vec<i64>,
    underlying: Vec<i64>,
}

impl Columns {
    fn of(graph: &SignedGraph) -> Columns {
        let degrees = graph.degrees();
        let column = |f: fn(&DegreeTriple) -> i64| degrees.iter().map(f).collect();
        Columns {
            pos: column(|d| d.pos as i64),
            neg: column(|d| d.neg as i64),
            net: column(|d| d.net),
            underlying: column(|d| d.underlying() as i64),
        }
    }
}

/// Row sums `D(u) = Σ_v d(u,v)`.
fn transmissions(dist: &DistanceMatrix) -> Vec<i64> {
    (0..dist.vertex_count())
        .map(|u| dist.row(u).iter().map(|&x| x as i64).sum())
        .collect()
}

pub fn schultz(graph: &SignedGraph) -> Result<SchultzReport, DistanceError> {
    let dist = all_pairs_distances(graph)?;
    Ok(schultz_with(graph, &dist))
}

/// Over unordered pairs, Σ (a(u) + a(v))·d(u,v) collapses to Σ_u a(u)·D(u).
pub fn schultz_with(graph: &SignedGraph, dist: &DistanceMatrix) -> SchultzReport {
    let cols = Columns::of(graph);
    let trans = transmissions(dist);
    let weighted = |a: &[i64]| -> i64 { a.iter().zip(&trans).map(|(x, t)| x * t).sum() };
    SchultzReport {
        s_pos: weighted(&cols.pos) as u64,
        s_neg: weighted(&cols.neg) as u64,
        s_net: weighted(&cols.net),
        s_underlying: weighted(&cols.underlying) as u64,
    }
}

pub fn gutman(graph: &SignedGraph) -> Result<GutmanReport, DistanceError> {
    let dist = all_pairs_distances(graph)?;
    Ok(gutman_with(graph, &dist))
}

pub fn gutman_with(graph: &SignedGraph, dist: &DistanceMatrix) -> GutmanReport {
    let cols = Columns::of(graph);
    let n = dist.vertex_count();
    // [pos·pos, neg·neg, pos·neg + neg·pos, net·net, underlying·underlying]
    // per row, summed over v > u.
    let sums = (0..n)
        .into_par_iter()
        .map(|u| {
            let row = dist.row(u);
            let (pu, mu, nu, gu) = (cols.pos[u], cols.neg[u], cols.net[u], cols.underlying[u]);
            let mut acc = [0i64; 5];
            let tail = u + 1..n;
            let others = row[tail.clone()]
                .iter()
                .zip(&cols.pos[tail.clone()])
                .zip(&cols.neg[tail.clone()])
                .zip(&cols.net[tail.clone()])
                .zip(&cols.underlying[tail]);
            for ((((&d, &pv), &mv), &nv), &gv) in others {
                let d = d as i64;
                acc[0] += pu * pv * d;
                acc[1] += mu * mv * d;
                acc[2] += (pu * mv + mu * pv) * d;
                acc[3] += nu * nv * d;
                acc[4] += gu * gv * d;
            }
            acc
        })
        .reduce(
            || [0i64; 5],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    GutmanReport {
        g_pos: sums[0] as u64,
        g_neg: sums[1] as u64,
        g_mixed: sums[2] as u64,
        g_net: sums[3],
        g_underlying: sums[4] as u64,
    }
}
