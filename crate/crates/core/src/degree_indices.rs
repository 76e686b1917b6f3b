//! Degree-based indices: Zagreb families, edge imbalances, irregularity.
//!
//! Every quantity is computed for four degree kinds side by side: positive
//! `d⁺`, negative `d⁻`, net `d̂ = d⁺ − d⁻`, and the underlying degree
//! `d⁺ + d⁻`. All arithmetic is exact.
//!
//! The mixed second Zagreb index uses the symmetric per-edge term
//! `d⁺(u)d⁻(v) + d⁻(u)d⁺(v)`; with that convention both
//! `M₂(G) = M₂⁺ + M₂⁻ + M₂*` and `M₂(G) = M₂(S) + 2M₂*` are identities.

use serde::Serialize;

use crate::graph::{DegreeTriple, SignedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct FirstZagrebReport {
    pub m1_pos: u64,
    pub m1_neg: u64,
    pub m1_mixed: u64,
    pub m1_net: u64,
    pub m1_underlying: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SecondZagrebReport {
    pub m2_pos: u64,
    pub m2_neg: u64,
    pub m2_mixed: u64,
    /// Can be negative.
    pub m2_net: i64,
    pub m2_underlying: u64,
}

/// Per-edge absolute degree differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeImbalance {
    pub edge: (usize, usize),
    pub imb_pos: u64,
    pub imb_neg: u64,
    pub imb_net: u64,
    pub imb_underlying: u64,
}

/// `irr_*` sums edge imbalances; `irrt_*` sums absolute degree differences
/// over unordered pairs of distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct IrregularityReport {
    pub irr_pos: u64,
    pub irr_neg: u64,
    pub irr_net: u64,
    pub irr_underlying: u64,
    pub irrt_pos: u64,
    pub irrt_neg: u64,
    pub irrt_net: u64,
    pub irrt_underlying: u64,
}

pub fn first_zagreb(graph: &SignedGraph) -> FirstZagrebReport {
    graph
        .degrees()
        .iter()
        .fold(FirstZagrebReport::default(), |mut acc, d| {
            let (p, m) = (d.pos as u64, d.neg as u64);
            acc.m1_pos += p * p;
            acc.m1_neg += m * m;
            acc.m1_mixed += p * m;
            acc.m1_net += d.net.unsigned_abs().pow(2);
            acc.m1_underlying += (p + m) * (p + m);
            acc
        })
}

pub fn second_zagreb(graph: &SignedGraph) -> SecondZagrebReport {
    let degrees = graph.degrees();
    let mut report = SecondZagrebReport::default();
    for e in graph.edges() {
        let (a, b) = (&degrees[e.u], &degrees[e.v]);
        let (ap, am, bp, bm) = (a.pos as u64, a.neg as u64, b.pos as u64, b.neg as u64);
        report.m2_pos += ap * bp;
        report.m2_neg += am * bm;
        report.m2_mixed += ap * bm + am * bp;
        report.m2_net += a.net * b.net;
        report.m2_underlying += (ap + am) * (bp + bm);
    }
    report
}

fn imbalance(a: &DegreeTriple, b: &DegreeTriple, edge: (usize, usize)) -> EdgeImbalance {
    EdgeImbalance {
        edge,
        imb_pos: a.pos.abs_diff(b.pos) as u64,
        imb_neg: a.neg.abs_diff(b.neg) as u64,
        imb_net: a.net.abs_diff(b.net),
        imb_underlying: a.underlying().abs_diff(b.underlying()) as u64,
    }
}

/// One entry per edge, in canonical edge order.
pub fn edge_imbalances(graph: &SignedGraph) -> Vec<EdgeImbalance> {
    let degrees = graph.degrees();
    graph
        .edges()
        .iter()
        .map(|e| imbalance(&degrees[e.u], &degrees[e.v], (e.u, e.v)))
        .collect()
}

/// Σ_{i<j} |x_i − x_j| in O(n log n): after sorting, the k-th smallest value
/// exceeds each of the k values before it.
fn pairwise_abs_diff_sum(mut values: Vec<i64>) -> u64 {
    values.sort_unstable();
    let mut prefix: i128 = 0;
    let mut total: i128 = 0;
    for (k, &x) in values.iter().enumerate() {
        total += x as i128 * k as i128 - prefix;
        prefix += x as i128;
    }
    total as u64
}

pub fn irregularity(graph: &SignedGraph) -> IrregularityReport {
    let degrees = graph.degrees();
    let mut report = IrregularityReport::default();
    for e in graph.edges() {
        let imb = imbalance(&degrees[e.u], &degrees[e.v], (e.u, e.v));
        report.irr_pos += imb.imb_pos;
        report.irr_neg += imb.imb_neg;
        report.irr_net += imb.imb_net;
        report.irr_underlying += imb.imb_underlying;
    }

    let column = |f: fn(&DegreeTriple) -> i64| degrees.iter().map(f).collect::<Vec<_>>();
    report.irrt_pos = pairwise_abs_diff_sum(column(|d| d.pos as i64));
    report.irrt_neg = pairwise_abs_diff_sum(column(|d| d.neg as i64));
    report.irrt_net = pairwise_abs_diff_sum(column(|d| d.net));
    report.irrt_underlying = pairwise_abs_diff_sum(column(|d| d.underlying() as i64));
    report
}
