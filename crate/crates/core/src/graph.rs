//! Signed simple undirected graphs and their degree machinery.
//!
//! A [`SignedGraph`] is immutable once built. Edges are stored canonically
//! (`u < v`, sorted lexicographically) next to a sign-forgetting CSR
//! adjacency, so the underlying unsigned graph never needs its own type.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Edge sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge on vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {id} out of range for graph with {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
}

/// Positive, negative and net degree of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct DegreeTriple {
    pub pos: usize,
    pub neg: usize,
    pub net: i64,
}

impl DegreeTriple {
    pub fn new(pos: usize, neg: usize) -> Self {
        DegreeTriple {
            pos,
            neg,
            net: pos as i64 - neg as i64,
        }
    }

    /// Degree in the sign-forgetting graph.
    pub fn underlying(&self) -> usize {
        self.pos + self.neg
    }
}

/// Incremental validator used by [`SignedGraph::build`] and the text parser.
///
/// Each rejected edge is reported at the call that introduced it, which lets
/// callers attach their own context (line numbers, for instance).
#[derive(Debug)]
pub struct SignedGraphBuilder {
    n: usize,
    seen: HashSet<(usize, usize)>,
    edges: Vec<Edge>,
}

impl SignedGraphBuilder {
    pub fn new(n: usize) -> Self {
        SignedGraphBuilder {
            n,
            seen: HashSet::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<(), GraphError> {
        for id in [u, v] {
            if id >= self.n {
                return Err(GraphError::VertexOutOfRange { id, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if !self.seen.insert((a, b)) {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.edges.push(Edge { u: a, v: b, sign });
        Ok(())
    }

    pub fn finish(self) -> SignedGraph {
        SignedGraph::from_canonical(self.n, self.edges)
    }
}

/// Finite simple undirected graph with a sign on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl SignedGraph {
    /// Validates and canonicalizes an edge list. Input order does not matter.
    pub fn build<I>(n: usize, edges: I) -> Result<SignedGraph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut builder = SignedGraphBuilder::new(n);
        for (u, v, sign) in edges {
            builder.add_edge(u, v, sign)?;
        }
        Ok(builder.finish())
    }

    /// Edges must already be oriented `u < v`, in range and pairwise distinct.
    fn from_canonical(n: usize, mut edges: Vec<Edge>) -> SignedGraph {
        edges.sort_unstable();

        let mut offsets = vec![0usize; n + 1];
        for e in &edges {
            offsets[e.u + 1] += 1;
            offsets[e.v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0usize; 2 * edges.len()];
        for e in &edges {
            targets[cursor[e.u]] = e.v;
            cursor[e.u] += 1;
            targets[cursor[e.v]] = e.u;
            cursor[e.v] += 1;
        }

        SignedGraph {
            n,
            edges,
            offsets,
            targets,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn positive_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign == Sign::Plus).count()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.len() - self.positive_edge_count()
    }

    /// Neighbours of `v` in the underlying graph, ascending.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// The same graph with every sign flipped.
    pub fn negated(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                sign: e.sign.negate(),
                ..*e
            })
            .collect();
        SignedGraph::from_canonical(self.n, edges)
    }

    pub fn degrees(&self) -> Vec<DegreeTriple> {
        let mut pos = vec![0usize; self.n];
        let mut neg = vec![0usize; self.n];
        for e in &self.edges {
            let counts = match e.sign {
                Sign::Plus => &mut pos,
                Sign::Minus => &mut neg,
            };
            counts[e.u] += 1;
            counts[e.v] += 1;
        }
        pos.into_iter()
            .zip(neg)
            .map(|(p, m)| DegreeTriple::new(p, m))
            .collect()
    }

    pub fn underlying_degree(&self, v: usize) -> Result<usize, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { id: v, n: self.n });
        }
        Ok(self.offsets[v + 1] - self.offsets[v])
    }

    /// The common net-degree, if every vertex shares one.
    pub fn is_net_regular(&self) -> Option<i64> {
        let degrees = self.degrees();
        let first = degrees.first()?.net;
        degrees.iter().all(|d| d.net == first).then_some(first)
    }

    /// Connectivity of the underlying graph. A single vertex is connected;
    /// so, vacuously, is the empty graph.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn p3() -> SignedGraph {
        SignedGraph::build(3, [(0, 1, Plus), (1, 2, Minus)]).unwrap()
    }

    fn k3_plus() -> SignedGraph {
        SignedGraph::build(3, [(0, 1, Plus), (1, 2, Plus), (0, 2, Plus)]).unwrap()
    }

    fn c4_alternating() -> SignedGraph {
        SignedGraph::build(
            4,
            [(0, 1, Plus), (1, 2, Minus), (2, 3, Plus), (0, 3, Minus)],
        )
        .unwrap()
    }

    #[test]
    fn build_canonicalizes() {
        let g = SignedGraph::build(3, [(2, 1, Minus), (1, 0, Plus)]).unwrap();
        assert_eq!(g, p3());
        assert_eq!(
            g.edges(),
            &[
                Edge {
                    u: 0,
                    v: 1,
                    sign: Plus
                },
                Edge {
                    u: 1,
                    v: 2,
                    sign: Minus
                }
            ]
        );
    }

    #[test]
    fn build_rejects_loop() {
        assert_eq!(
            SignedGraph::build(2, [(0, 0, Plus)]),
            Err(GraphError::LoopEdge(0))
        );
    }

    #[test]
    fn build_rejects_duplicate_with_other_sign() {
        assert_eq!(
            SignedGraph::build(2, [(0, 1, Plus), (1, 0, Minus)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            SignedGraph::build(2, [(0, 2, Plus)]),
            Err(GraphError::VertexOutOfRange { id: 2, n: 2 })
        );
    }

    #[test]
    fn degrees_of_small_graphs() {
        assert_eq!(
            p3().degrees(),
            vec![
                DegreeTriple {
                    pos: 1,
                    neg: 0,
                    net: 1
                },
                DegreeTriple {
                    pos: 1,
                    neg: 1,
                    net: 0
                },
                DegreeTriple {
                    pos: 0,
                    neg: 1,
                    net: -1
                },
            ]
        );
        let edgeless = SignedGraph::build(4, []).unwrap();
        assert_eq!(edgeless.degrees(), vec![DegreeTriple::default(); 4]);
        assert_eq!(k3_plus().degrees(), vec![DegreeTriple::new(2, 0); 3]);
    }

    #[test]
    fn underlying_degree() {
        assert_eq!(p3().underlying_degree(1), Ok(2));
        assert_eq!(
            SignedGraph::build(1, []).unwrap().underlying_degree(0),
            Ok(0)
        );
        for v in 0..3 {
            assert_eq!(k3_plus().underlying_degree(v), Ok(2));
        }
        assert_eq!(
            p3().underlying_degree(3),
            Err(GraphError::VertexOutOfRange { id: 3, n: 3 })
        );
    }

    #[test]
    fn net_regularity() {
        assert_eq!(c4_alternating().is_net_regular(), Some(0));
        assert_eq!(p3().is_net_regular(), None);
        assert_eq!(k3_plus().is_net_regular(), Some(2));
    }

    #[test]
    fn connectivity() {
        assert!(p3().is_connected());
        let two_edges = SignedGraph::build(4, [(0, 1, Plus), (2, 3, Plus)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(SignedGraph::build(1, []).unwrap().is_connected());
    }

    #[test]
    fn negation_is_an_involution() {
        let g = c4_alternating();
        assert_ne!(g.negated(), g);
        assert_eq!(g.negated().negated(), g);
    }
}
