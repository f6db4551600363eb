//! Molecular graph representation: a simple, undirected, connected graph
//! whose vertices are labelled `1..=n`.

use std::collections::VecDeque;

use thiserror::Error;

/// Validation failures when constructing a [`MolecularGraph`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("edge endpoint {vertex} out of range 1..={vertex_count}")]
    EndpointOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 1")]
    Disconnected(usize),
}

/// A simple, undirected, connected graph with vertices `1..=n`.
///
/// Vertices stand for heavy atoms and edges for bonds; bonds are unweighted.
/// Construction validates simplicity and connectedness, so every value of
/// this type satisfies those invariants. Values are immutable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolecularGraph {
    n: usize,
    /// 0-indexed, each pair ordered `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    /// 0-indexed sorted adjacency lists.
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl MolecularGraph {
    /// Builds a validated graph from 1-indexed edge pairs.
    pub fn new(
        vertex_count: usize,
        edges: &[(usize, usize)],
        name: Option<String>,
    ) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(v) - 1, u.max(v) - 1));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0 + 1,
                v: w[0].1 + 1,
            });
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = MolecularGraph {
            n: vertex_count,
            edges: norm,
            adj,
            name,
        };
        if let Some(v) = g.first_unreachable() {
            return Err(GraphError::Disconnected(v + 1));
        }
        Ok(g)
    }

    /// The path graph on `n` vertices: edges `{i, i+1}` for `i = 1..n-1`.
    ///
    /// This is the skeleton of the unbranched alkane with `n` carbons.
    pub fn path(n: usize, name: Option<String>) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &edges, name)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Edges as 1-indexed pairs with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1))
    }

    /// 1-indexed neighbours of a 1-indexed vertex, ascending.
    ///
    /// # Panics
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(v >= 1 && v <= self.n, "vertex {v} out of range");
        self.adj[v - 1].iter().map(|&u| u + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n, "vertex {v} out of range");
        self.adj[v - 1].len()
    }

    /// Returns a copy of this graph carrying a different name.
    pub fn with_name(&self, name: Option<String>) -> Self {
        let mut g = self.clone();
        g.name = name;
        g
    }

    pub(crate) fn adjacency0(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub(crate) fn edges0(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Dense 0-indexed adjacency matrix, row-major.
    pub(crate) fn adjacency_matrix(&self) -> Vec<bool> {
        let n = self.n;
        let mut m = vec![false; n * n];
        for &(u, v) in &self.edges {
            m[u * n + v] = true;
            m[v * n + u] = true;
        }
        m
    }

    /// First vertex (0-indexed) not reachable from vertex 0, if any.
    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }
}

/// The worked-example octane isomer used across the test suite: the skeleton
/// of 2-methyl-3-ethyl-pentane with its conventional vertex numbering.
#[cfg(test)]
pub(crate) fn methyl_ethyl_pentane() -> MolecularGraph {
    MolecularGraph::new(
        8,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7), (7, 8)],
        Some("2-methyl-3-ethyl-pentane".into()),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ethane_is_valid() {
        let g = MolecularGraph::new(2, &[(1, 2)], Some("ethane".into())).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.name(), Some("ethane"));
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let err = MolecularGraph::new(3, &[(1, 2)], None).unwrap_err();
        assert_eq!(err, GraphError::Disconnected(3));
    }

    #[test]
    fn worked_example_graph_is_valid() {
        let g = methyl_ethyl_pentane();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(2), 3);
        assert_eq!(g.degree(3), 3);
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![2, 4, 7]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            MolecularGraph::new(2, &[(1, 1), (1, 2)], None).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn rejects_duplicate_edge_regardless_of_orientation() {
        assert_eq!(
            MolecularGraph::new(2, &[(1, 2), (2, 1)], None).unwrap_err(),
            GraphError::DuplicateEdge { u: 1, v: 2 }
        );
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        assert_eq!(
            MolecularGraph::new(2, &[(1, 3)], None).unwrap_err(),
            GraphError::EndpointOutOfRange {
                vertex: 3,
                vertex_count: 2
            }
        );
        assert_eq!(
            MolecularGraph::new(2, &[(0, 1)], None).unwrap_err(),
            GraphError::EndpointOutOfRange {
                vertex: 0,
                vertex_count: 2
            }
        );
    }

    #[test]
    fn rejects_zero_vertices() {
        assert_eq!(
            MolecularGraph::new(0, &[], None).unwrap_err(),
            GraphError::NoVertices
        );
    }

    #[test]
    fn single_vertex_path() {
        let g = MolecularGraph::path(1, None).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn path_graphs() {
        let butane = MolecularGraph::path(4, None).unwrap();
        assert_eq!(
            butane.edges().collect::<Vec<_>>(),
            vec![(1, 2), (2, 3), (3, 4)]
        );
        let dotriacontane = MolecularGraph::path(32, None).unwrap();
        assert_eq!(dotriacontane.vertex_count(), 32);
        assert_eq!(dotriacontane.edge_count(), 31);
    }
}
