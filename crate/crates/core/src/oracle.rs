//! Brute-force reference indices and machine checks of the identities and
//! inequalities relating the signed indices to the underlying-graph ones.
//!
//! [`reference_indices`] transcribes each definition literally. It recounts
//! degrees by scanning the edge list once per vertex, sums over ordered pairs
//! (halving where the unordered convention requires it), and takes distances
//! from Floyd–Warshall. It shares no degree or distance code with the main
//! implementations.

use serde::Serialize;

use crate::degree_indices::{
    edge_imbalances, first_zagreb, irregularity, second_zagreb, FirstZagrebReport,
    IrregularityReport, SecondZagrebReport,
};
use crate::distance::{
    all_pairs_distances, gutman_with, schultz_with, GutmanReport, SchultzReport,
};
use crate::graph::{Sign, SignedGraph};
use crate::IndexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Equal,
    LessOrEqual,
    GreaterOrEqual,
}

impl Relation {
    pub fn evaluate(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Equal => lhs == rhs,
            Relation::LessOrEqual => lhs <= rhs,
            Relation::GreaterOrEqual => lhs >= rhs,
        }
    }
}

/// One instance of an identity or inequality on a concrete graph.
///
/// Per-edge clauses are aggregated: `lhs`/`rhs` are the two sides at the
/// edge with the least slack, and `witness` names that edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

impl IdentityCheck {
    fn new(name: &'static str, lhs: i64, relation: Relation, rhs: i64) -> Self {
        IdentityCheck {
            name,
            lhs,
            rhs,
            relation,
            holds: relation.evaluate(lhs, rhs),
            witness: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub positive: usize,
    pub negative: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph_summary: GraphSummary,
    pub checks: Vec<IdentityCheck>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn signed(x: u64) -> i64 {
    i64::try_from(x).expect("index value exceeds i64")
}

/// (d⁺, d⁻) of every vertex by rescanning all edges for each vertex.
fn naive_degrees(graph: &SignedGraph) -> Vec<(i64, i64)> {
    (0..graph.vertex_count())
        .map(|v| {
            let mut pos = 0;
            let mut neg = 0;
            for e in graph.edges() {
                if e.u == v || e.v == v {
                    match e.sign {
                        Sign::Plus => pos += 1,
                        Sign::Minus => neg += 1,
                    }
                }
            }
            (pos, neg)
        })
        .collect()
}

/// Floyd–Warshall over the sign-forgetting adjacency; `None` if disconnected.
pub fn floyd_warshall(graph: &SignedGraph) -> Option<Vec<Vec<i64>>> {
    let n = graph.vertex_count();
    let inf = i64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for e in graph.edges() {
        d[e.u][e.v] = 1;
        d[e.v][e.u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = d[i][k] + d[k][j];
                if through < d[i][j] {
                    d[i][j] = through;
                }
            }
        }
    }
    d.iter().flatten().all(|&x| x < inf).then_some(d)
}

/// Every index from its literal definition. The distance families are
/// absent when the graph is disconnected.
pub fn reference_indices(graph: &SignedGraph) -> IndexSet {
    let n = graph.vertex_count();
    let deg = naive_degrees(graph);
    let pos = |v: usize| deg[v].0;
    let neg = |v: usize| deg[v].1;
    let net = |v: usize| deg[v].0 - deg[v].1;
    let und = |v: usize| deg[v].0 + deg[v].1;
    let vertices = || 0..n;
    let ordered_pairs = || (0..n).flat_map(move |u| (0..n).map(move |v| (u, v)));
    let edges = || graph.edges().iter().map(|e| (e.u, e.v));

    let first = FirstZagrebReport {
        m1_pos: vertices().map(|v| pos(v) * pos(v)).sum::<i64>() as u64,
        m1_neg: vertices().map(|v| neg(v) * neg(v)).sum::<i64>() as u64,
        m1_mixed: vertices().map(|v| pos(v) * neg(v)).sum::<i64>() as u64,
        m1_net: vertices().map(|v| net(v) * net(v)).sum::<i64>() as u64,
        m1_underlying: vertices().map(|v| und(v) * und(v)).sum::<i64>() as u64,
    };

    // Mixed term: both orientations of each undirected edge.
    let second = SecondZagrebReport {
        m2_pos: edges().map(|(i, j)| pos(i) * pos(j)).sum::<i64>() as u64,
        m2_neg: edges().map(|(i, j)| neg(i) * neg(j)).sum::<i64>() as u64,
        m2_mixed: edges()
            .flat_map(|(i, j)| [(i, j), (j, i)])
            .map(|(i, j)| pos(i) * neg(j))
            .sum::<i64>() as u64,
        m2_net: edges().map(|(i, j)| net(i) * net(j)).sum(),
        m2_underlying: edges().map(|(i, j)| und(i) * und(j)).sum::<i64>() as u64,
    };

    let irr = |f: &dyn Fn(usize) -> i64| -> u64 {
        edges().map(|(u, v)| (f(u) - f(v)).abs()).sum::<i64>() as u64
    };
    let irrt = |f: &dyn Fn(usize) -> i64| -> u64 {
        let twice: i64 = ordered_pairs().map(|(u, v)| (f(u) - f(v)).abs()).sum();
        (twice / 2) as u64
    };
    let irregularity = IrregularityReport {
        irr_pos: irr(&pos),
        irr_neg: irr(&neg),
        irr_net: irr(&net),
        irr_underlying: irr(&und),
        irrt_pos: irrt(&pos),
        irrt_neg: irrt(&neg),
        irrt_net: irrt(&net),
        irrt_underlying: irrt(&und),
    };

    let (schultz, gutman) = match floyd_warshall(graph) {
        Some(d) => {
            let schultz_of = |f: &dyn Fn(usize) -> i64| -> i64 {
                ordered_pairs()
                    .map(|(u, v)| (f(u) + f(v)) * d[u][v])
                    .sum::<i64>()
                    / 2
            };
            let gutman_of = |f: &dyn Fn(usize) -> i64, g: &dyn Fn(usize) -> i64| -> i64 {
                ordered_pairs().map(|(u, v)| f(u) * g(v) * d[u][v]).sum()
            };
            let schultz = SchultzReport {
                s_pos: schultz_of(&pos) as u64,
                s_neg: schultz_of(&neg) as u64,
                s_net: schultz_of(&net),
                s_underlying: schultz_of(&und) as u64,
            };
            // Same-kind products count each unordered pair twice over ordered
            // pairs; the mixed product d⁺(u)d⁻(v) over ordered pairs already
            // equals the symmetrized unordered sum.
            let gutman = GutmanReport {
                g_pos: (gutman_of(&pos, &pos) / 2) as u64,
                g_neg: (gutman_of(&neg, &neg) / 2) as u64,
                g_mixed: gutman_of(&pos, &neg) as u64,
                g_net: gutman_of(&net, &net) / 2,
                g_underlying: (gutman_of(&und, &und) / 2) as u64,
            };
            (Some(schultz), Some(gutman))
        }
        None => (None, None),
    };

    IndexSet {
        first_zagreb: Some(first),
        second_zagreb: Some(second),
        irregularity: Some(irregularity),
        schultz,
        gutman,
    }
}

/// Picks the edge with the least slack for a per-edge inequality.
fn per_edge_check(
    name: &'static str,
    relation: Relation,
    sides: impl Iterator<Item = ((usize, usize), i64, i64)>,
) -> IdentityCheck {
    let slack = |lhs: i64, rhs: i64| match relation {
        Relation::LessOrEqual => rhs - lhs,
        Relation::GreaterOrEqual => lhs - rhs,
        Relation::Equal => -(lhs - rhs).abs(),
    };
    let worst = sides.fold(
        None,
        |best: Option<((usize, usize), i64, i64)>, cur| match best {
            Some(b) if slack(b.1, b.2) <= slack(cur.1, cur.2) => Some(b),
            _ => Some(cur),
        },
    );
    match worst {
        Some((edge, lhs, rhs)) => IdentityCheck {
            witness: Some(edge),
            ..IdentityCheck::new(name, lhs, relation, rhs)
        },
        None => IdentityCheck::new(name, 0, relation, 0),
    }
}

/// Evaluates every identity and inequality on the main implementations'
/// outputs.
///
/// Degree-based checks are always present (10). The five Schultz and two
/// Gutman checks appear only for connected graphs, and the two
/// zero-irregularity checks only for net-regular graphs.
pub fn check_identities(graph: &SignedGraph) -> VerificationReport {
    use Relation::*;

    let z1 = first_zagreb(graph);
    let z2 = second_zagreb(graph);
    let irr = irregularity(graph);
    let imbalances = edge_imbalances(graph);
    let s = signed;

    let mut checks = vec![
        IdentityCheck::new(
            "zagreb1_decomposition",
            s(z1.m1_underlying),
            Equal,
            s(z1.m1_pos) + s(z1.m1_neg) + 2 * s(z1.m1_mixed),
        ),
        IdentityCheck::new(
            "zagreb2_decomposition",
            s(z2.m2_underlying),
            Equal,
            s(z2.m2_pos) + s(z2.m2_neg) + s(z2.m2_mixed),
        ),
        IdentityCheck::new(
            "zagreb1_net_decomposition",
            s(z1.m1_underlying),
            Equal,
            s(z1.m1_net) + 4 * s(z1.m1_mixed),
        ),
        IdentityCheck::new(
            "zagreb2_net_decomposition",
            s(z2.m2_underlying),
            Equal,
            z2.m2_net + 2 * s(z2.m2_mixed),
        ),
        per_edge_check(
            "edge_imbalance_subadditive",
            LessOrEqual,
            imbalances
                .iter()
                .map(|i| (i.edge, s(i.imb_underlying), s(i.imb_pos) + s(i.imb_neg))),
        ),
        IdentityCheck::new(
            "irregularity_subadditive",
            s(irr.irr_underlying),
            LessOrEqual,
            s(irr.irr_pos) + s(irr.irr_neg),
        ),
        IdentityCheck::new(
            "total_irregularity_subadditive",
            s(irr.irrt_underlying),
            LessOrEqual,
            s(irr.irrt_pos) + s(irr.irrt_neg),
        ),
        per_edge_check(
            "edge_net_imbalance_lower_bound",
            GreaterOrEqual,
            imbalances
                .iter()
                .map(|i| (i.edge, s(i.imb_net), s(i.imb_pos) - s(i.imb_neg))),
        ),
        IdentityCheck::new(
            "net_irregularity_lower_bound",
            s(irr.irr_net),
            GreaterOrEqual,
            s(irr.irr_pos) - s(irr.irr_neg),
        ),
        IdentityCheck::new(
            "net_total_irregularity_lower_bound",
            s(irr.irrt_net),
            GreaterOrEqual,
            s(irr.irrt_pos) - s(irr.irrt_neg),
        ),
    ];

    if let Ok(dist) = all_pairs_distances(graph) {
        let sc = schultz_with(graph, &dist);
        let gu = gutman_with(graph, &dist);
        checks.extend([
            IdentityCheck::new(
                "schultz_decomposition",
                s(sc.s_underlying),
                Equal,
                s(sc.s_pos) + s(sc.s_neg),
            ),
            IdentityCheck::new(
                "schultz_net_difference",
                sc.s_net,
                Equal,
                s(sc.s_pos) - s(sc.s_neg),
            ),
            IdentityCheck::new(
                "schultz_sum_is_twice_positive",
                s(sc.s_underlying) + sc.s_net,
                Equal,
                2 * s(sc.s_pos),
            ),
            IdentityCheck::new(
                "schultz_difference_is_twice_negative",
                s(sc.s_underlying) - sc.s_net,
                Equal,
                2 * s(sc.s_neg),
            ),
            IdentityCheck::new(
                "schultz_underlying_dominates_net",
                s(sc.s_underlying),
                GreaterOrEqual,
                sc.s_net,
            ),
            IdentityCheck::new(
                "gutman_decomposition",
                s(gu.g_underlying),
                Equal,
                s(gu.g_pos) + s(gu.g_neg) + s(gu.g_mixed),
            ),
            IdentityCheck::new(
                "gutman_net_decomposition",
                gu.g_net,
                Equal,
                s(gu.g_pos) + s(gu.g_neg) - s(gu.g_mixed),
            ),
        ]);
    }

    if graph.is_net_regular().is_some() {
        checks.extend([
            IdentityCheck::new("net_regular_zero_irregularity", s(irr.irr_net), Equal, 0),
            IdentityCheck::new(
                "net_regular_zero_total_irregularity",
                s(irr.irrt_net),
                Equal,
                0,
            ),
        ]);
    }

    VerificationReport {
        graph_summary: GraphSummary {
            n: graph.vertex_count(),
            edges: graph.edge_count(),
            positive: graph.positive_edge_count(),
            negative: graph.negative_edge_count(),
        },
        all_pass: checks.iter().all(|c| c.holds),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Minus, Plus};

    fn p3() -> SignedGraph {
        SignedGraph::build(3, [(0, 1, Plus), (1, 2, Minus)]).unwrap()
    }

    fn c4_alternating() -> SignedGraph {
        SignedGraph::build(
            4,
            [(0, 1, Plus), (1, 2, Minus), (2, 3, Plus), (0, 3, Minus)],
        )
        .unwrap()
    }

    #[test]
    fn reference_values_for_p3() {
        let r = reference_indices(&p3());
        assert_eq!(
            r.first_zagreb,
            Some(FirstZagrebReport {
                m1_pos: 2,
                m1_neg: 2,
                m1_mixed: 1,
                m1_net: 2,
                m1_underlying: 6
            })
        );
        assert_eq!(
            r.gutman,
            Some(GutmanReport {
                g_pos: 1,
                g_neg: 1,
                g_mixed: 4,
                g_net: -2,
                g_underlying: 6
            })
        );
        assert_eq!(r, IndexSet::compute(&p3()));
    }

    #[test]
    fn reference_on_edgeless_graph() {
        let g = SignedGraph::build(3, []).unwrap();
        let r = reference_indices(&g);
        assert_eq!(r.first_zagreb, Some(FirstZagrebReport::default()));
        assert_eq!(r.second_zagreb, Some(SecondZagrebReport::default()));
        assert_eq!(r.irregularity, Some(IrregularityReport::default()));
        assert_eq!(r.schultz, None);
        assert_eq!(r.gutman, None);
    }

    #[test]
    fn p3_passes_seventeen_checks() {
        let report = check_identities(&p3());
        assert_eq!(report.checks.len(), 17);
        assert!(report.all_pass);
        assert!(!report
            .checks
            .iter()
            .any(|c| c.name.starts_with("net_regular")));
        assert_eq!(
            report.graph_summary,
            GraphSummary {
                n: 3,
                edges: 2,
                positive: 1,
                negative: 1
            }
        );
    }

    #[test]
    fn c4_alternating_includes_net_regular_checks() {
        let report = check_identities(&c4_alternating());
        assert_eq!(report.checks.len(), 19);
        assert!(report.all_pass);
        let zero = report
            .checks
            .iter()
            .find(|c| c.name == "net_regular_zero_irregularity")
            .unwrap();
        assert_eq!((zero.lhs, zero.rhs), (0, 0));
    }

    #[test]
    fn disconnected_graph_gets_degree_checks_only() {
        let g = SignedGraph::build(5, [(0, 1, Plus), (2, 3, Minus), (3, 4, Plus)]).unwrap();
        let report = check_identities(&g);
        assert_eq!(report.checks.len(), 10);
        assert!(report.all_pass);
    }

    #[test]
    fn per_edge_check_reports_tightest_edge() {
        let check = per_edge_check(
            "x",
            Relation::LessOrEqual,
            [((0, 1), 1, 5), ((1, 2), 2, 2), ((2, 3), 0, 9)].into_iter(),
        );
        assert_eq!(check.witness, Some((1, 2)));
        assert!(check.holds);

        let failing = per_edge_check(
            "y",
            Relation::GreaterOrEqual,
            [((0, 1), 3, 1), ((0, 2), 1, 4)].into_iter(),
        );
        assert_eq!(failing.witness, Some((0, 2)));
        assert!(!failing.holds);
    }

    #[test]
    fn relation_evaluation() {
        assert!(Relation::Equal.evaluate(3, 3));
        assert!(!Relation::Equal.evaluate(3, 4));
        assert!(Relation::LessOrEqual.evaluate(3, 4));
        assert!(!Relation::GreaterOrEqual.evaluate(3, 4));
    }
}
