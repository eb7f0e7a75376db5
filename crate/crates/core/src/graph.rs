//! Simple undirected graphs on dense vertices `0..n-1`.
//!
//! A [`Graph`] is immutable after construction: every operation in this
//! crate is a pure function over it, so values can be shared freely
//! across threads. Adjacency is stored as a full symmetric boolean
//! matrix, which keeps `adjacent` and `degree` O(1) at the graph orders
//! this toolkit targets (products of small factors, a few hundred
//! vertices at most).

use std::fmt;

use thiserror::Error;

/// Errors from graph construction and parameter extraction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is not a vertex of the graph.
    #[error("edge ({u}, {v}) out of range for a graph on {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    /// Self-loops are not representable.
    #[error("self-loop at vertex {u} is not allowed in a simple graph")]
    SelfLoop { u: usize },
    /// The operation needs at least one vertex.
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    /// A hand-supplied parameter tuple violates a degree/size constraint.
    #[error("invalid graph parameters: {0}")]
    InvalidParams(String),
}

/// Immutable simple undirected graph.
///
/// Vertices are `0..n`. No self-loops, no multi-edges; duplicate edges
/// passed to [`Graph::from_edges`] collapse silently.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    degrees: Vec<usize>,
    size: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Duplicate edges (in either orientation) are collapsed. Endpoints
    /// must satisfy `u, v < n` and `u != v`; `n = 0` with an empty edge
    /// list is accepted.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u });
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_adjacency(n, adj))
    }

    /// Assembles a graph from a row-major adjacency matrix assumed to be
    /// symmetric with a zero diagonal.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        let degrees: Vec<usize> = (0..n)
            .map(|u| adj[u * n..(u + 1) * n].iter().filter(|&&b| b).count())
            .collect();
        let size = degrees.iter().sum::<usize>() / 2;
        Graph {
            n,
            adj,
            degrees,
            size,
        }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(n, vec![false; n * n])
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut adj = vec![true; n * n];
        for u in 0..n {
            adj[u * n + u] = false;
        }
        Self::from_adjacency(n, adj)
    }

    /// Cycle C_n. Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// Path P_n on `n` vertices (n-1 edges). Panics if `n == 0`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "path needs at least 1 vertex");
        let edges: Vec<(usize, usize)> = (1..n).map(|u| (u - 1, u)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Complete bipartite graph K_{a,b} with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let n = a + b;
        let mut adj = vec![false; n * n];
        for u in 0..a {
            for v in a..n {
                adj[u * n + v] = true;
                adj[v * n + u] = true;
            }
        }
        Self::from_adjacency(n, adj)
    }

    /// Circulant graph on `n` vertices: `i ~ j` iff `|i-j| mod n` is a
    /// jump. Jumps must lie in `1..=n/2`. Panics on an invalid jump.
    pub fn circulant(n: usize, jumps: &[usize]) -> Self {
        let mut adj = vec![false; n * n];
        for &j in jumps {
            assert!(j >= 1 && 2 * j <= n, "jump {j} out of range for order {n}");
            for u in 0..n {
                let v = (u + j) % n;
                adj[u * n + v] = true;
                adj[v * n + u] = true;
            }
        }
        Self::from_adjacency(n, adj)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Whether `u` and `v` are adjacent. Panics if either is out of range.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.n + v]
    }

    /// Degree of `u`: the number of edges incident to it.
    /// Panics if `u` is out of range.
    pub fn degree(&self, u: usize) -> usize {
        assert!(u < self.n, "vertex {u} out of range for order {}", self.n);
        self.degrees[u]
    }

    /// Degrees of all vertices, indexed by vertex.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Edges in lexicographic order: `(0,1), (0,2), ..., (1,2), ...`
    /// with `u < v`. Index sums iterate in exactly this order so that
    /// floating-point accumulation is reproducible.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| {
            (u + 1..n).filter_map(move |v| self.adj[u * n + v].then_some((u, v)))
        })
    }

    /// Summary parameters (order, size, degree extremes).
    ///
    /// Rejects the vertex-free graph: degree extremes are undefined there.
    pub fn params(&self) -> Result<GraphParams, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let max_deg = *self.degrees.iter().max().expect("n >= 1");
        let min_deg = *self.degrees.iter().min().expect("n >= 1");
        Ok(GraphParams {
            order: self.n,
            size: self.size,
            max_deg,
            min_deg,
            regular_deg: (max_deg == min_deg).then_some(max_deg),
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Summary tuple fed to the bound formulas: order n, size m, maximum
/// degree, minimum degree, and the common degree r when the graph is
/// regular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphParams {
    pub order: usize,
    pub size: usize,
    pub max_deg: usize,
    pub min_deg: usize,
    /// Present exactly when `max_deg == min_deg`, and then equal to both.
    pub regular_deg: Option<usize>,
}

impl GraphParams {
    /// Validates a hand-supplied parameter tuple and derives `regular_deg`.
    ///
    /// Checks `min <= max <= n-1`, `m <= n(n-1)/2`, and in the regular
    /// case the handshake identity `2m = n*r`.
    pub fn new(
        order: usize,
        size: usize,
        max_deg: usize,
        min_deg: usize,
    ) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if min_deg > max_deg {
            return Err(GraphError::InvalidParams(format!(
                "min degree {min_deg} exceeds max degree {max_deg}"
            )));
        }
        if max_deg > order - 1 {
            return Err(GraphError::InvalidParams(format!(
                "max degree {max_deg} exceeds n-1 = {}",
                order - 1
            )));
        }
        if size > order * (order - 1) / 2 {
            return Err(GraphError::InvalidParams(format!(
                "size {size} exceeds n(n-1)/2 = {}",
                order * (order - 1) / 2
            )));
        }
        let regular_deg = if max_deg == min_deg {
            if 2 * size != order * max_deg {
                return Err(GraphError::InvalidParams(format!(
                    "regular degree {max_deg} inconsistent with 2m = {} (handshake)",
                    2 * size
                )));
            }
            Some(max_deg)
        } else {
            None
        };
        Ok(GraphParams {
            order,
            size,
            max_deg,
            min_deg,
            regular_deg,
        })
    }

    /// Whether the parameters describe a regular graph.
    pub fn is_regular(&self) -> bool {
        self.regular_deg.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 1);
        assert!(g.adjacent(0, 1));
        assert!(g.adjacent(1, 0));
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn edgeless() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(g.size(), 0);
        assert!(g.degrees().iter().all(|&d| d == 0));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_out_of_range() {
        let err = Graph::from_edges(3, &[(0, 3)]).unwrap_err();
        assert_eq!(err, GraphError::EdgeOutOfRange { u: 0, v: 3, n: 3 });
    }

    #[test]
    fn rejects_self_loop() {
        let err = Graph::from_edges(3, &[(1, 1)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { u: 1 });
    }

    #[test]
    fn degree_examples() {
        assert_eq!(Graph::path(3).degree(1), 2);
        let c4 = Graph::cycle(4);
        for u in 0..4 {
            assert_eq!(c4.degree(u), 2);
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn degree_rejects_out_of_range_vertex() {
        Graph::cycle(4).degree(4);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn adjacent_rejects_out_of_range_vertex() {
        Graph::cycle(4).adjacent(0, 9);
    }

    #[test]
    fn handshake() {
        for g in [
            Graph::cycle(5),
            Graph::complete(6),
            Graph::path(4),
            Graph::empty(3),
        ] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        }
    }

    #[test]
    fn params_examples() {
        let p = Graph::cycle(4).params().unwrap();
        assert_eq!(
            p,
            GraphParams {
                order: 4,
                size: 4,
                max_deg: 2,
                min_deg: 2,
                regular_deg: Some(2)
            }
        );

        let p = Graph::path(3).params().unwrap();
        assert_eq!(
            p,
            GraphParams {
                order: 3,
                size: 2,
                max_deg: 2,
                min_deg: 1,
                regular_deg: None
            }
        );

        let p = Graph::complete(5).params().unwrap();
        assert_eq!(
            p,
            GraphParams {
                order: 5,
                size: 10,
                max_deg: 4,
                min_deg: 4,
                regular_deg: Some(4)
            }
        );
    }

    #[test]
    fn params_rejects_empty() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(g.params().unwrap_err(), GraphError::EmptyGraph);
    }

    #[test]
    fn params_new_validates() {
        assert!(GraphParams::new(4, 4, 2, 2).is_ok());
        assert!(GraphParams::new(0, 0, 0, 0).is_err());
        assert!(GraphParams::new(3, 2, 1, 2).is_err()); // min > max
        assert!(GraphParams::new(3, 2, 3, 1).is_err()); // max > n-1
        assert!(GraphParams::new(3, 4, 2, 1).is_err()); // m too large
        assert!(GraphParams::new(4, 3, 2, 2).is_err()); // handshake fails for regular
    }

    #[test]
    fn families() {
        assert_eq!(
            Graph::complete_bipartite(3, 3)
                .params()
                .unwrap()
                .regular_deg,
            Some(3)
        );
        assert_eq!(
            Graph::circulant(8, &[1, 2]).params().unwrap().regular_deg,
            Some(4)
        );
        assert_eq!(
            Graph::circulant(8, &[1, 4]).params().unwrap().regular_deg,
            Some(3)
        );
        assert_eq!(Graph::circulant(6, &[1]), Graph::cycle(6));
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (0, 3)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
    }
}
