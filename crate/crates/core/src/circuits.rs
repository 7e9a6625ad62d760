//! Circuits, the separating test, and path-chords.
//!
//! A circuit `C` is *separating* when contracting it raises the number of
//! blocks: `G / C` has more blocks than `G`. A chord of `C` turns into a loop
//! under contraction, and loops are blocks of their own, so every circuit
//! with a chord is separating.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

use crate::cycle_space::{is_cycle_space_member, Gf2Matrix};
use crate::error::{Error, Result};
use crate::graph::{blocks, is_connected, EdgeId, EdgeSet, Graph, Thread, VertexId};

/// Cap used when callers do not pick one.
pub const DEFAULT_CIRCUIT_CAP: usize = 100_000;

/// The edge set of a cycle, with its cyclic vertex order.
#[derive(Debug, Clone)]
pub struct Circuit {
    edges: EdgeSet,
    vertex_cycle: Vec<VertexId>,
    // edge_cycle[i] joins vertex_cycle[i] and vertex_cycle[i + 1] (cyclically)
    edge_cycle: Vec<EdgeId>,
}

impl Circuit {
    /// Checks that `edges` is the edge set of a cycle of `g`. The walk starts
    /// at the lowest vertex and leaves it by its lowest edge.
    pub fn from_edges(g: &Graph, edges: EdgeSet) -> Result<Circuit> {
        let reject = || Error::NotACircuit(edges.ids());
        if edges.is_empty() || edges.universe() != g.universe() {
            return Err(reject());
        }
        let mut incident: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
        for e in &edges {
            let (a, b) = g.endpoints(e).ok_or_else(reject)?;
            incident.entry(a).or_default().push(e);
            incident.entry(b).or_default().push(e);
        }
        if incident.values().any(|es| es.len() != 2) {
            return Err(reject());
        }
        let (&start, first) = incident.iter().next().unwrap();
        let mut vertex_cycle = vec![start];
        let mut edge_cycle = vec![first[0].min(first[1])];
        let mut here = g.opposite(edge_cycle[0], start).unwrap();
        while here != start {
            vertex_cycle.push(here);
            let last = *edge_cycle.last().unwrap();
            let pair = &incident[&here];
            let next = if pair[0] == last { pair[1] } else { pair[0] };
            edge_cycle.push(next);
            here = g.opposite(next, here).unwrap();
        }
        if edge_cycle.len() != edges.len() {
            return Err(reject());
        }
        Ok(Circuit {
            edges,
            vertex_cycle,
            edge_cycle,
        })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn vertex_cycle(&self) -> &[VertexId] {
        &self.vertex_cycle
    }

    pub fn edge_cycle(&self) -> &[EdgeId] {
        &self.edge_cycle
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertex_cycle.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.edge_cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl PartialEq for Circuit {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
    }
}

impl Eq for Circuit {}

impl std::hash::Hash for Circuit {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.edges.hash(state);
    }
}

impl Ord for Circuit {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.edges.cmp(&other.edges)
    }
}

impl PartialOrd for Circuit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Circuit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.edges.serialize(serializer)
    }
}

struct CycleSearch<'a> {
    g: &'a Graph,
    incidence: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
    start: VertexId,
    on_path: BTreeSet<VertexId>,
    path: Vec<EdgeId>,
    found: Vec<Circuit>,
    cap: usize,
}

impl CycleSearch<'_> {
    fn extend(&mut self, here: VertexId) -> Result<()> {
        let steps = self.incidence[&here].clone();
        for (e, w) in steps {
            if w == here || self.path.last() == Some(&e) {
                continue;
            }
            if w == self.start {
                // Each cycle is reached in both directions; keep one.
                if self.path[0] < e {
                    let edges =
                        EdgeSet::from_ids(self.g.universe(), self.path.iter().copied().chain([e]))?;
                    self.push(Circuit::from_edges(self.g, edges)?)?;
                }
            } else if w > self.start && !self.on_path.contains(&w) {
                self.on_path.insert(w);
                self.path.push(e);
                self.extend(w)?;
                self.path.pop();
                self.on_path.remove(&w);
            }
        }
        Ok(())
    }

    fn push(&mut self, c: Circuit) -> Result<()> {
        if self.found.len() == self.cap {
            return Err(Error::CircuitExplosion { cap: self.cap });
        }
        self.found.push(c);
        Ok(())
    }
}

/// Every circuit of `g`, sorted by edge ids. Loops and pairs of parallel
/// edges are circuits too.
pub fn enumerate_circuits(g: &Graph, cap: usize) -> Result<Vec<Circuit>> {
    let mut search = CycleSearch {
        g,
        incidence: g.incidence(),
        start: 0,
        on_path: BTreeSet::new(),
        path: Vec::new(),
        found: Vec::new(),
        cap,
    };
    for (e, (a, b)) in g.edges() {
        if a == b {
            search.push(Circuit::from_edges(
                g,
                EdgeSet::from_ids(g.universe(), [e])?,
            )?)?;
        }
    }
    for s in g.vertices() {
        search.start = s;
        search.on_path = BTreeSet::from([s]);
        search.extend_from_start()?;
    }
    let mut found = search.found;
    found.sort();
    Ok(found)
}

impl CycleSearch<'_> {
    fn extend_from_start(&mut self) -> Result<()> {
        let s = self.start;
        let steps = self.incidence[&s].clone();
        for (e, w) in steps {
            if w > s {
                self.on_path.insert(w);
                self.path.push(e);
                self.extend(w)?;
                self.path.pop();
                self.on_path.remove(&w);
            }
        }
        Ok(())
    }
}

/// `G / C` has more blocks than `G`.
pub fn is_separating(g: &Graph, c: &Circuit) -> Result<bool> {
    let c = Circuit::from_edges(g, c.edges.clone())?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let (minor, _) = g.contract_edges(&c.edges)?;
    Ok(blocks(&minor).block_count() > blocks(g).block_count())
}

/// The non-separating circuits of a graph, tied to that graph's fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcCatalog {
    members: Vec<Circuit>,
    graph_fingerprint: String,
    universe: usize,
}

impl NcCatalog {
    pub fn members(&self) -> &[Circuit] {
        &self.members
    }

    pub fn graph_fingerprint(&self) -> &str {
        &self.graph_fingerprint
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, edges: &EdgeSet) -> bool {
        self.members
            .binary_search_by(|c| c.edges.cmp(edges))
            .is_ok()
    }

    pub fn to_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::new(
            self.universe,
            self.members.iter().map(|c| c.edges.clone()).collect(),
        )
        .expect("catalog members share the graph's universe")
    }
}

impl Serialize for NcCatalog {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

pub fn non_separating_circuits(g: &Graph, cap: usize) -> Result<NcCatalog> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let base = blocks(g).block_count();
    let mut members = Vec::new();
    for c in enumerate_circuits(g, cap)? {
        let (minor, _) = g.contract_edges(&c.edges)?;
        if blocks(&minor).block_count() <= base {
            members.push(c);
        }
    }
    Ok(NcCatalog {
        members,
        graph_fingerprint: g.fingerprint(),
        universe: g.universe(),
    })
}

/// `t` meets `c` in exactly its two (distinct) ends and shares no edge.
pub fn is_path_chord(g: &Graph, c: &Circuit, t: &Thread) -> Result<bool> {
    if !t.is_thread_of(g) {
        return Err(Error::NotAThread(t.edge_sequence().to_vec()));
    }
    let c = Circuit::from_edges(g, c.edges.clone())?;
    let (a, b) = t.endpoints();
    let on_cycle = c.vertex_set();
    Ok(a != b
        && on_cycle.contains(&a)
        && on_cycle.contains(&b)
        && t.inner_vertices().iter().all(|v| !on_cycle.contains(v))
        && t.edge_sequence().iter().all(|&e| !c.edges.contains(e)))
}

/// The two circuits of `C ∪ T` other than `C`. The first one returned
/// contains the lowest edge of `C`.
pub fn split_on_path_chord(g: &Graph, c: &Circuit, t: &Thread) -> Result<(Circuit, Circuit)> {
    if !is_path_chord(g, c, t)? {
        return Err(Error::NotAPathChord);
    }
    let (a, b) = t.endpoints();
    let pos = |v: VertexId| c.vertex_cycle.iter().position(|&w| w == v).unwrap();
    let (i, j) = (pos(a).min(pos(b)), pos(a).max(pos(b)));
    let thread = t.edge_set(g.universe());
    let inside = EdgeSet::from_ids(g.universe(), c.edge_cycle[i..j].iter().copied())?;
    let outside = &c.edges - &inside;
    let lowest = c.edges.first().unwrap();
    let (first, second) = if inside.contains(lowest) {
        (inside, outside)
    } else {
        (outside, inside)
    };
    Ok((
        Circuit::from_edges(g, &first | &thread)?,
        Circuit::from_edges(g, &second | &thread)?,
    ))
}

/// Splits an even edge set into edge-disjoint circuits. Each round starts
/// from the lowest remaining edge and follows the lowest unused edge until
/// the walk closes on itself.
pub fn even_subgraph_to_circuits(g: &Graph, x: &EdgeSet) -> Result<Vec<Circuit>> {
    if !is_cycle_space_member(g, x)? {
        return Err(Error::NotEven);
    }
    let mut remaining = x.clone();
    let mut out = Vec::new();
    while let Some(first) = remaining.first() {
        let (start, _) = g.endpoints(first).unwrap();
        let mut walk_edges = vec![first];
        let mut seen_at = BTreeMap::from([(start, 0usize)]);
        let mut here = g.opposite(first, start).unwrap();
        while !seen_at.contains_key(&here) {
            seen_at.insert(here, walk_edges.len());
            let last = *walk_edges.last().unwrap();
            let next = remaining
                .iter()
                .find(|&e| e != last && g.opposite(e, here).is_some())
                .expect("even degree leaves an exit");
            walk_edges.push(next);
            here = g.opposite(next, here).unwrap();
        }
        let cycle = EdgeSet::from_ids(g.universe(), walk_edges[seen_at[&here]..].iter().copied())?;
        remaining = &remaining - &cycle;
        out.push(Circuit::from_edges(g, cycle)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{k4, path, prism, subdivide, wheel};
    use crate::graph::build_graph;

    fn circuit(g: &Graph, ids: &[EdgeId]) -> Circuit {
        Circuit::from_edges(
            g,
            EdgeSet::from_ids(g.universe(), ids.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn circuit_validation() {
        let g = k4();
        let c = circuit(&g, &[0, 2, 3, 5]);
        assert_eq!(c.vertex_cycle(), &[0, 1, 2, 3]);
        assert_eq!(c.edge_cycle(), &[0, 3, 5, 2]);
        for bad in [&[][..], &[0, 3, 5], &[0, 1, 2]] {
            let set = EdgeSet::from_ids(6, bad.iter().copied()).unwrap();
            assert!(matches!(
                Circuit::from_edges(&g, set),
                Err(Error::NotACircuit(_))
            ));
        }
        // Two disjoint triangles are even but not a single circuit.
        let p = prism();
        let both = EdgeSet::from_ids(9, [0, 1, 2, 3, 4, 5]).unwrap();
        assert!(Circuit::from_edges(&p, both).is_err());
    }

    #[test]
    fn enumeration() {
        let all = enumerate_circuits(&k4(), 100).unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(all.iter().filter(|c| c.len() == 3).count(), 4);
        assert!(enumerate_circuits(&path(5), 100).unwrap().is_empty());
        let triangle = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(enumerate_circuits(&triangle, 100).unwrap().len(), 1);
        assert_eq!(
            enumerate_circuits(&k4(), 6),
            Err(Error::CircuitExplosion { cap: 6 })
        );
    }

    #[test]
    fn enumeration_in_multigraphs() {
        let g = Graph::multigraph(0..2, 3, [(0, (0, 1)), (1, (0, 1)), (2, (1, 1))]).unwrap();
        let ids: Vec<Vec<EdgeId>> = enumerate_circuits(&g, 10)
            .unwrap()
            .iter()
            .map(|c| c.edges().ids())
            .collect();
        assert_eq!(ids, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn separating_in_k4_and_wheel() {
        let g = k4();
        assert!(!is_separating(&g, &circuit(&g, &[0, 1, 3])).unwrap());
        assert!(is_separating(&g, &circuit(&g, &[0, 2, 3, 5])).unwrap());
        let w = wheel(4);
        assert!(!is_separating(&w, &circuit(&w, &[0, 1, 2, 3])).unwrap());
    }

    #[test]
    fn catalogues() {
        assert_eq!(non_separating_circuits(&k4(), 100).unwrap().len(), 4);
        let w = non_separating_circuits(&wheel(4), 100).unwrap();
        assert_eq!(w.len(), 5);
        assert!(w.contains(&EdgeSet::from_ids(8, [0, 1, 2, 3]).unwrap()));
        let p = non_separating_circuits(&prism(), 100).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.members().iter().filter(|c| c.len() == 3).count(), 2);
        assert_eq!(p.members().iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn path_chords() {
        let g = k4();
        let triangle = circuit(&g, &[0, 1, 3]);
        let square = circuit(&g, &[0, 2, 3, 5]);
        let t = |e| Thread::from_edges(&g, &[e]).unwrap();
        assert!(!is_path_chord(&g, &triangle, &t(2)).unwrap());
        assert!(is_path_chord(&g, &square, &t(1)).unwrap());
        assert!(!is_path_chord(&g, &triangle, &t(0)).unwrap());

        let (r, s) = split_on_path_chord(&g, &square, &t(1)).unwrap();
        assert_eq!(r.edges().ids(), vec![0, 1, 3]);
        assert_eq!(s.edges().ids(), vec![1, 2, 5]);
        assert_eq!(&r.edges ^ &s.edges, square.edges);
        assert_eq!(
            split_on_path_chord(&g, &triangle, &t(2)),
            Err(Error::NotAPathChord)
        );
    }

    #[test]
    fn long_thread_chord() {
        // Subdivided K4: K4 edge k becomes threads 2k, 2k+1.
        let g = subdivide(&k4());
        let square = circuit(&g, &[0, 1, 6, 7, 10, 11, 4, 5]);
        let on_cycle = Thread::from_edges(&g, &[6, 7]).unwrap();
        assert!(!is_path_chord(&g, &square, &on_cycle).unwrap());
        let chord = Thread::from_edges(&g, &[8, 9]).unwrap();
        assert!(is_path_chord(&g, &square, &chord).unwrap());
        let (r, s) = split_on_path_chord(&g, &square, &chord).unwrap();
        let th = chord.edge_set(g.universe());
        assert!(th.is_subset(r.edges()).unwrap() && th.is_subset(s.edges()).unwrap());
        assert_eq!(&r.edges ^ &s.edges, square.edges);
        assert_eq!(&(&r.edges | &s.edges) - &th, square.edges);
        assert!(r.edges().contains(0));
    }

    #[test]
    fn peeling() {
        let g = prism();
        assert!(even_subgraph_to_circuits(&g, &EdgeSet::empty(9))
            .unwrap()
            .is_empty());
        let tri = EdgeSet::from_ids(9, [0, 1, 2]).unwrap();
        assert_eq!(
            even_subgraph_to_circuits(&g, &tri).unwrap()[0].edges(),
            &tri
        );
        let both = EdgeSet::from_ids(9, [0, 1, 2, 3, 4, 5]).unwrap();
        let parts = even_subgraph_to_circuits(&g, &both).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts[0].edges().is_disjoint(parts[1].edges()).unwrap());
        assert_eq!(&parts[0].edges | &parts[1].edges, both);
        assert_eq!(
            even_subgraph_to_circuits(&g, &EdgeSet::from_ids(9, [0]).unwrap()),
            Err(Error::NotEven)
        );
    }
}
