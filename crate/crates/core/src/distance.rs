//! All-pairs shortest-path hop counts via Floyd-Warshall.

use crate::graph::MolecularGraph;

/// All-pairs shortest-path distances (hop counts) of a connected graph.
///
/// Satisfies `d[i][i] = 0`, symmetry, the triangle inequality, and
/// `d[i][j] >= 1` for `i != j` (connectedness is guaranteed by the graph
/// type).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    /// Row-major, 0-indexed.
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distance between 1-indexed vertices.
    ///
    /// # Panics
    /// Panics if either vertex is out of range.
    pub fn get(&self, u: usize, v: usize) -> u32 {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n);
        self.d[(u - 1) * self.n + (v - 1)]
    }

    pub(crate) fn get0(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// 0-indexed row of distances from vertex `u`.
    pub(crate) fn row0(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

impl MolecularGraph {
    /// Computes all-pairs shortest-path hop counts with Floyd-Warshall,
    /// O(n^3) time and O(n^2) space.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.vertex_count();
        const INF: u32 = u32::MAX / 2;
        let mut d = vec![INF; n * n];
        for i in 0..n {
            d[i * n + i] = 0;
        }
        for &(u, v) in self.edges0() {
            d[u * n + v] = 1;
            d[v * n + u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                let dik = d[i * n + k];
                if dik == INF {
                    continue;
                }
                for j in 0..n {
                    let via = dik + d[k * n + j];
                    if via < d[i * n + j] {
                        d[i * n + j] = via;
                    }
                }
            }
        }
        debug_assert!(
            d.iter().all(|&x| x < INF),
            "graph type guarantees connectivity"
        );
        DistanceMatrix { n, d }
    }
}
