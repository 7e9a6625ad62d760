use std::collections::BTreeSet;

use serde::Serialize;

use super::{EdgeId, EdgeSet, Graph, VertexId};
use crate::error::{Error, Result};

/// A maximal path whose inner vertices have degree two and whose ends do not.
///
/// Threads are oriented so that the first vertex does not exceed the last.
/// A closed thread (both ends on the same vertex) only occurs in graphs with
/// a cycle hanging off a single vertex, never in a top 3-connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Thread {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl Thread {
    pub fn edge_sequence(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn vertex_sequence(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn inner_vertices(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        let (a, b) = self.endpoints();
        a == b
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self, universe: usize) -> EdgeSet {
        EdgeSet::from_ids(universe, self.edges.iter().copied()).expect("thread edges in universe")
    }

    fn sorted_edges(&self) -> Vec<EdgeId> {
        let mut ids = self.edges.clone();
        ids.sort_unstable();
        ids
    }

    /// The thread of `g` with exactly these edges, in any order.
    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Result<Thread> {
        let mut wanted = edges.to_vec();
        wanted.sort_unstable();
        let not_a_thread = || Error::NotAThread(wanted.clone());
        threads(g)
            .map_err(|_| not_a_thread())?
            .into_iter()
            .find(|t| t.sorted_edges() == wanted)
            .ok_or_else(not_a_thread)
    }

    /// `true` if this is one of the threads of `g`.
    pub fn is_thread_of(&self, g: &Graph) -> bool {
        Thread::from_edges(g, &self.edges).is_ok_and(|t| t == *self)
    }

    fn canonical(mut self) -> Thread {
        let (a, b) = self.endpoints();
        let flip = a > b || (a == b && self.edges.first() > self.edges.last());
        if flip {
            self.edges.reverse();
            self.vertices.reverse();
        }
        self
    }
}

impl Ord for Thread {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sorted_edges()
            .cmp(&other.sorted_edges())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Thread {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Partition of the edges into maximal threads, sorted by edge ids.
///
/// Fails with [`Error::AllDegreesTwo`] when some component is a bare cycle.
pub fn threads(g: &Graph) -> Result<Vec<Thread>> {
    let degree = g.degrees();
    let incidence = g.incidence();
    let mut used = EdgeSet::empty(g.universe());
    let mut found = Vec::new();

    for (&start, incident) in &incidence {
        if degree[&start] == 2 {
            continue;
        }
        for &(first, _) in incident {
            if used.contains(first) {
                continue;
            }
            let mut edges = Vec::new();
            let mut vertices = vec![start];
            let (mut here, mut edge) = (start, first);
            loop {
                used.insert(edge);
                edges.push(edge);
                let next = g.opposite(edge, here).expect("incident edge");
                vertices.push(next);
                if degree[&next] != 2 {
                    break;
                }
                edge = incidence[&next]
                    .iter()
                    .map(|&(e, _)| e)
                    .find(|&e| e != edge)
                    .expect("degree-two vertex has a second edge");
                here = next;
            }
            found.push(Thread { edges, vertices }.canonical());
        }
    }
    if used.len() != g.edge_count() {
        return Err(Error::AllDegreesTwo);
    }
    found.sort();
    Ok(found)
}

/// Replaces every thread by a single edge. The new graph keeps the branch
/// vertices' ids; its edge `i` stands for `thread_map[i]`.
pub fn suppress_degree_two(g: &Graph) -> Result<(Graph, Vec<Thread>)> {
    let all = threads(g)?;
    let degree = g.degrees();
    let h = Graph::multigraph(
        g.vertices().filter(|v| degree[v] != 2),
        all.len(),
        all.iter().enumerate().map(|(i, t)| (i, t.endpoints())),
    )?;
    Ok((h, all))
}

impl Graph {
    /// `G − (T)`: removes the thread's edges and inner vertices.
    pub fn thread_delete(&self, t: &Thread) -> Result<Graph> {
        if !t.is_thread_of(self) {
            return Err(Error::NotAThread(t.sorted_edges()));
        }
        let without = self.delete_edges(&t.edge_set(self.universe()))?;
        Ok(without.remove_vertices(&t.inner_vertices().iter().copied().collect()))
    }
}
