//! Multigraphs with stable edge identities.
//!
//! Every [`Graph`] carries an edge *universe*: the number of edge ids that
//! were ever handed out for it. Deleting or contracting edges never
//! renumbers the survivors, so an edge id names the same edge in a graph and
//! in every minor derived from it, and [`EdgeSet`]s move freely between them.

mod blocks;
mod connectivity;
mod edgeset;
mod threads;

use std::collections::{BTreeMap, BTreeSet};

pub use blocks::{blocks, BlockDecomposition};
pub use connectivity::{is_connected, is_k_connected, is_top_3_connected, is_top_k4};
pub use edgeset::{EdgeSet, Iter as EdgeSetIter};
pub use threads::{suppress_degree_two, threads, Thread};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// An undirected multigraph `(V, E, ψ)`.
///
/// Graphs built with [`build_graph`] are simple. Contraction may produce
/// loops and parallel edges; those are kept, with their original ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    universe: usize,
}

/// Builds a simple graph on vertices `0..vertex_count`. Edge `i` is
/// `edge_pairs[i]`.
pub fn build_graph(vertex_count: usize, edge_pairs: &[(VertexId, VertexId)]) -> Result<Graph> {
    let mut seen = BTreeSet::new();
    let mut edges = BTreeMap::new();
    for (id, &(u, v)) in edge_pairs.iter().enumerate() {
        for w in [u, v] {
            if w >= vertex_count {
                return Err(Error::DanglingVertexId {
                    vertex: w,
                    vertex_count,
                });
            }
        }
        if u == v {
            return Err(Error::LoopRejected(u));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge((u, v)));
        }
        edges.insert(id, (u.min(v), u.max(v)));
    }
    Ok(Graph {
        vertices: (0..vertex_count).collect(),
        edges,
        universe: edge_pairs.len(),
    })
}

impl Graph {
    /// Builds a multigraph with explicit vertex ids, edge ids and universe.
    /// Loops and parallel edges are accepted.
    pub fn multigraph(
        vertices: impl IntoIterator<Item = VertexId>,
        universe: usize,
        edges: impl IntoIterator<Item = (EdgeId, (VertexId, VertexId))>,
    ) -> Result<Graph> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut map = BTreeMap::new();
        for (id, (u, v)) in edges {
            if id >= universe || map.contains_key(&id) {
                return Err(Error::UnknownEdge(id));
            }
            for w in [u, v] {
                if !vertices.contains(&w) {
                    return Err(Error::DanglingVertexId {
                        vertex: w,
                        vertex_count: vertices.len(),
                    });
                }
            }
            map.insert(id, (u.min(v), u.max(v)));
        }
        Ok(Graph {
            vertices,
            edges: map,
            universe,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Edges in ascending id order, with endpoints `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, (VertexId, VertexId))> + '_ {
        self.edges.iter().map(|(&e, &ends)| (e, ends))
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&e).copied()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    /// The vertex at the other end of `e` from `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        let (a, b) = self.endpoints(e)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    pub fn edge_set(&self) -> EdgeSet {
        let mut set = EdgeSet::empty(self.universe);
        for &e in self.edges.keys() {
            set.insert(e);
        }
        set
    }

    /// Loops count twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .values()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(a, b) in self.edges.values() {
            *deg.get_mut(&a).unwrap() += 1;
            *deg.get_mut(&b).unwrap() += 1;
        }
        deg
    }

    /// Incidence lists: for every vertex, `(edge, other end)` in ascending edge
    /// order. A loop appears once.
    pub fn incidence(&self) -> BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> {
        let mut inc: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (&e, &(a, b)) in &self.edges {
            inc.get_mut(&a).unwrap().push((e, b));
            if a != b {
                inc.get_mut(&b).unwrap().push((e, a));
            }
        }
        inc
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .values()
            .all(|&(a, b)| a != b && seen.insert((a, b)))
    }

    /// Vertices touched by the edges of `x`.
    pub fn vertices_of(&self, x: &EdgeSet) -> BTreeSet<VertexId> {
        x.iter()
            .filter_map(|e| self.endpoints(e))
            .flat_map(|(a, b)| [a, b])
            .collect()
    }

    fn check_universe(&self, z: &EdgeSet) -> Result<()> {
        if z.universe() == self.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.universe,
                right: z.universe(),
            })
        }
    }

    /// `G ∖ Z`: drop the edges of `z`, keep every vertex.
    pub fn delete_edges(&self, z: &EdgeSet) -> Result<Graph> {
        self.check_universe(z)?;
        Ok(Graph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(e, _)| !z.contains(**e))
                .map(|(&e, &ends)| (e, ends))
                .collect(),
            universe: self.universe,
        })
    }

    /// Removes vertices together with every edge incident to them.
    pub fn remove_vertices(&self, gone: &BTreeSet<VertexId>) -> Graph {
        Graph {
            vertices: self.vertices.difference(gone).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(_, (a, b))| !gone.contains(a) && !gone.contains(b))
                .map(|(&e, &ends)| (e, ends))
                .collect(),
            universe: self.universe,
        }
    }

    /// `G / Z`: every component of the spanning subgraph `(V, Z)` collapses to
    /// its lowest vertex id. Returns the minor and the vertex map.
    pub fn contract_edges(&self, z: &EdgeSet) -> Result<(Graph, BTreeMap<VertexId, VertexId>)> {
        self.check_universe(z)?;
        let index: BTreeMap<VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let order: Vec<VertexId> = self.vertices.iter().copied().collect();
        let mut dsu = Dsu::new(order.len());
        for e in z {
            if let Some((a, b)) = self.endpoints(e) {
                dsu.union(index[&a], index[&b]);
            }
        }
        // The root of every class is its lowest index, hence its lowest id.
        let vertex_map: BTreeMap<VertexId, VertexId> = order
            .iter()
            .map(|&v| (v, order[dsu.find(index[&v])]))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|(e, _)| !z.contains(**e))
            .map(|(&e, &(a, b))| {
                let (a, b) = (vertex_map[&a], vertex_map[&b]);
                (e, (a.min(b), a.max(b)))
            })
            .collect();
        let graph = Graph {
            vertices: vertex_map.values().copied().collect(),
            edges,
            universe: self.universe,
        };
        Ok((graph, vertex_map))
    }

    /// Stable 64-bit FNV-1a digest of the vertex set, universe and `ψ`.
    pub fn fingerprint(&self) -> String {
        let mut text = format!("u{};v", self.universe);
        for v in &self.vertices {
            text.push_str(&format!("{v},"));
        }
        text.push_str(";e");
        for (e, (a, b)) in &self.edges {
            text.push_str(&format!("{e}:{a}-{b},"));
        }
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in text.bytes() {
            hash ^= byte as u64;
            hash = hash.wrapping_mul(0x0100_0000_01b3);
        }
        format!("{hash:016x}")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .field("universe", &self.universe)
            .finish()
    }
}

/// Union-find with union by lower index.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}
