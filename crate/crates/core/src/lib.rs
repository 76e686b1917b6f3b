//! Topological indices of signed graphs.
//!
//! A signed graph carries a `+` or `-` on every edge. Splitting each vertex
//! degree into its positive part `d⁺`, negative part `d⁻` and net degree
//! `d̂ = d⁺ − d⁻` gives signed versions of the classic degree- and
//! distance-based indices:
//!
//! * first and second Zagreb indices ([`degree_indices::first_zagreb`],
//!   [`degree_indices::second_zagreb`]),
//! * edge imbalance, irregularity and total irregularity
//!   ([`degree_indices::irregularity`]),
//! * Schultz and Gutman indices ([`distance::schultz`], [`distance::gutman`]).
//!
//! [`oracle`] recomputes everything from the definitions by brute force and
//! checks the identities tying the signed indices to those of the underlying
//! unsigned graph.
//!
//! ```
//! use signed_indices::{degree_indices, io};
//!
//! let graph = io::parse_sgl("3\n0 1 +\n1 2 -\n").unwrap();
//! let z1 = degree_indices::first_zagreb(&graph);
//! assert_eq!(z1.m1_underlying, z1.m1_pos + z1.m1_neg + 2 * z1.m1_mixed);
//! ```

use serde::Serialize;

pub mod cli;
pub mod degree_indices;
pub mod distance;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;

pub use degree_indices::{FirstZagrebReport, IrregularityReport, SecondZagrebReport};
pub use distance::{DistanceError, DistanceMatrix, GutmanReport, SchultzReport};
pub use graph::{DegreeTriple, Edge, GraphError, Sign, SignedGraph};
pub use oracle::{IdentityCheck, Relation, VerificationReport};

/// Results for every index family. A family is `None` when it was not
/// requested or, for the distance families, when the graph is disconnected.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IndexSet {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_zagreb: Option<FirstZagrebReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_zagreb: Option<SecondZagrebReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irregularity: Option<IrregularityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schultz: Option<SchultzReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gutman: Option<GutmanReport>,
}

impl IndexSet {
    /// Every family via the main implementations; distances are computed once.
    pub fn compute(graph: &SignedGraph) -> IndexSet {
        let dist = distance::all_pairs_distances(graph).ok();
        IndexSet {
            first_zagreb: Some(degree_indices::first_zagreb(graph)),
            second_zagreb: Some(degree_indices::second_zagreb(graph)),
            irregularity: Some(degree_indices::irregularity(graph)),
            schultz: dist.as_ref().map(|d| distance::schultz_with(graph, d)),
            gutman: dist.as_ref().map(|d| distance::gutman_with(graph, d)),
        }
    }
}
