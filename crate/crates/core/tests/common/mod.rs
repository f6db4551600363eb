//! Shared helpers for the integration suites: an independent BFS distance
//! oracle and a seeded random-connected-graph generator.

use std::collections::VecDeque;

use gpindex_core::MolecularGraph;
use rand::rngs::StdRng;
use rand::Rng;

/// Breadth-first-search distances from every source; independent of the
/// library's Floyd-Warshall path.
pub fn bfs_distances(g: &MolecularGraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut all = Vec::with_capacity(n);
    for s in 1..=n {
        let mut dist = vec![u32::MAX; n + 1];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        all.push(dist[1..].to_vec());
    }
    all
}

/// A uniform random spanning tree plus a few random extra edges; always
/// connected and simple.
pub fn random_connected_graph(rng: &mut StdRng, n: usize) -> MolecularGraph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 2..=n {
        let parent = rng.random_range(1..v);
        edges.push((parent, v));
    }
    if n >= 3 {
        let extra = rng.random_range(0..=n / 2);
        for _ in 0..extra {
            let u = rng.random_range(1..=n);
            let v = rng.random_range(1..=n);
            if u != v {
                let e = (u.min(v), u.max(v));
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
    }
    MolecularGraph::new(n, &edges, None).expect("generator yields valid graphs")
}
