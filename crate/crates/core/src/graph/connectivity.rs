use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use super::{suppress_degree_two, Graph, VertexId};

/// A graph on at most one vertex counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    connected_after_removing(&simple_adjacency(g), &BTreeSet::new())
}

fn simple_adjacency(g: &Graph) -> BTreeMap<VertexId, BTreeSet<VertexId>> {
    let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> =
        g.vertices().map(|v| (v, BTreeSet::new())).collect();
    for (_, (a, b)) in g.edges() {
        if a != b {
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
    }
    adj
}

fn connected_after_removing(
    adj: &BTreeMap<VertexId, BTreeSet<VertexId>>,
    removed: &BTreeSet<VertexId>,
) -> bool {
    let Some(&start) = adj.keys().find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[&u] {
            if !removed.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() + removed.len() == adj.len()
}

/// Vertex `k`-connectivity by exhaustive removal of every vertex set of size
/// below `k`. Loops and parallel edges are ignored.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "connectivity order must be at least 1");
    if g.vertex_count() <= k {
        return false;
    }
    let adj = simple_adjacency(g);
    let vertices: Vec<VertexId> = g.vertices().collect();
    (0..k).all(|size| {
        vertices.iter().copied().combinations(size).all(|cut| {
            let cut: BTreeSet<VertexId> = cut.into_iter().collect();
            connected_after_removing(&adj, &cut)
        })
    })
}

/// Subdivision of a 3-connected graph.
pub fn is_top_3_connected(g: &Graph) -> bool {
    match suppress_degree_two(g) {
        Ok((h, _)) => h.is_simple() && is_k_connected(&h, 3),
        Err(_) => false,
    }
}

/// Subdivision of K4.
pub fn is_top_k4(g: &Graph) -> bool {
    match suppress_degree_two(g) {
        Ok((h, _)) => {
            h.vertex_count() == 4
                && h.edge_count() == 6
                && h.is_simple()
                && h.degrees().values().all(|&d| d == 3)
        }
        Err(_) => false,
    }
}
