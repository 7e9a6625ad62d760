//! Bonds, and recovering them from the non-separating circuits alone.
//!
//! A bond (cocircuit) is a minimal edge cut. Every bond meets every circuit
//! in an even number of edges, so no bond meets a non-separating circuit in
//! exactly one edge. For a 3-connected graph the converse holds at the level
//! of minimal sets: the inclusion-minimal nonempty edge sets meeting no
//! non-separating circuit exactly once are precisely the bonds. The cycle
//! structure of a 3-connected graph is therefore determined by its
//! non-separating circuits.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::circuits::{non_separating_circuits, Circuit, NcCatalog, DEFAULT_CIRCUIT_CAP};
use crate::error::{Error, Result};
use crate::graph::{build_graph, is_connected, is_k_connected, EdgeSet, Graph, VertexId};

/// Vertex bound for exhaustive bipartition enumeration.
pub const MAX_BOND_VERTICES: usize = 16;
/// Edge bound for exhaustive subset enumeration.
pub const MAX_SUBSET_EDGES: usize = 20;

/// A minimal edge cut `δ(S)`; both `S` and its complement induce connected
/// subgraphs. `side` holds the lowest vertex of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bond {
    pub edges: EdgeSet,
    pub side: BTreeSet<VertexId>,
}

impl Serialize for Bond {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.edges.serialize(serializer)
    }
}

fn induces_connected(g: &Graph, side: &BTreeSet<VertexId>) -> bool {
    let outside: BTreeSet<VertexId> = g.vertices().filter(|v| !side.contains(v)).collect();
    is_connected(&g.remove_vertices(&outside))
}

/// All bonds of a connected graph, sorted by edge ids.
pub fn bonds(g: &Graph) -> Result<Vec<Bond>> {
    if g.vertex_count() > MAX_BOND_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the bond enumeration bound of {MAX_BOND_VERTICES}",
            g.vertex_count()
        )));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let vertices: Vec<VertexId> = g.vertices().collect();
    let n = vertices.len();
    let mut found: Vec<Bond> = Vec::new();
    if n < 2 {
        return Ok(found);
    }
    // Bit 0 (the lowest vertex) always sits in `side`; the complement is nonempty.
    for mask in (1u32..(1 << n) - 1).step_by(2) {
        let side: BTreeSet<VertexId> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vertices[i])
            .collect();
        let other: BTreeSet<VertexId> = vertices
            .iter()
            .copied()
            .filter(|v| !side.contains(v))
            .collect();
        if !induces_connected(g, &side) || !induces_connected(g, &other) {
            continue;
        }
        let cut = EdgeSet::from_ids(
            g.universe(),
            g.edges()
                .filter(|(_, (a, b))| side.contains(a) != side.contains(b))
                .map(|(e, _)| e),
        )?;
        if !found.iter().any(|b| b.edges == cut) {
            found.push(Bond { edges: cut, side });
        }
    }
    found.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(found)
}

/// `x` is nonempty and meets no member of `nc` in exactly one edge.
pub fn in_kprime(x: &EdgeSet, nc: &NcCatalog) -> Result<bool> {
    if x.universe() != nc.universe() {
        return Err(Error::UniverseMismatch {
            left: nc.universe(),
            right: x.universe(),
        });
    }
    if x.is_empty() {
        return Ok(false);
    }
    for c in nc.members() {
        if c.edges().meet_count(x)? == 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Inclusion-minimal members of K′, by subset size with superset pruning.
///
/// `size_cap` limits the subset sizes examined; without it every subset of
/// `E(g)` is considered, which needs `|E| ≤ 20`.
pub fn kprime_minimal(g: &Graph, nc: &NcCatalog, size_cap: Option<usize>) -> Result<Vec<EdgeSet>> {
    let edges: Vec<usize> = g.edges().map(|(e, _)| e).collect();
    let m = edges.len();
    if (size_cap.is_none() && m > MAX_SUBSET_EDGES) || m > 63 {
        return Err(Error::TooLarge(format!(
            "{m} edges exceeds the subset enumeration bound of {MAX_SUBSET_EDGES}"
        )));
    }
    if nc.universe() != g.universe() {
        return Err(Error::UniverseMismatch {
            left: g.universe(),
            right: nc.universe(),
        });
    }
    // Work on local bit masks over E(g).
    let local = |set: &EdgeSet| -> u64 {
        edges
            .iter()
            .enumerate()
            .filter(|(_, &e)| set.contains(e))
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    };
    let circuits: Vec<u64> = nc.members().iter().map(|c| local(c.edges())).collect();
    let mut minimal: Vec<u64> = Vec::new();
    let top = size_cap.unwrap_or(m).min(m);
    for size in 1..=top {
        let mut subset: u64 = (1u64 << size) - 1;
        let limit: u64 = 1u64 << m;
        while subset < limit {
            let pruned = minimal.iter().any(|&f| f & !subset == 0);
            if !pruned && circuits.iter().all(|&c| (c & subset).count_ones() != 1) {
                minimal.push(subset);
            }
            // Next subset of the same size.
            let low = subset & subset.wrapping_neg();
            let ripple = subset + low;
            subset = (((ripple ^ subset) >> 2) / low) | ripple;
        }
    }
    let mut out: Vec<EdgeSet> = minimal
        .into_iter()
        .map(|mask| {
            EdgeSet::from_ids(
                g.universe(),
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]),
            )
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// Why no pair of witnesses exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub x: EdgeSet,
    /// Non-separating circuits meeting `x` in exactly one edge.
    pub qualifying: Vec<Circuit>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossingOutcome {
    Found(Circuit, Circuit),
    Counterexample(CounterexampleReport),
}

/// For a 3-connected `g` and a nonempty `x` whose removal keeps `g`
/// connected, the first two non-separating circuits that each meet `x` in
/// exactly one edge.
pub fn single_crossing_witnesses(
    g: &Graph,
    x: &EdgeSet,
    nc: &NcCatalog,
) -> Result<CrossingOutcome> {
    if x.is_empty() {
        return Err(Error::EmptyX);
    }
    if !is_k_connected(g, 3) {
        return Err(Error::NotThreeConnected);
    }
    if !is_connected(&g.delete_edges(x)?) {
        return Err(Error::Disconnected);
    }
    let mut qualifying = Vec::new();
    for c in nc.members() {
        if c.edges().meet_count(x)? == 1 {
            qualifying.push(c.clone());
            if qualifying.len() == 2 {
                let b = qualifying.pop().unwrap();
                let a = qualifying.pop().unwrap();
                return Ok(CrossingOutcome::Found(a, b));
            }
        }
    }
    Ok(CrossingOutcome::Counterexample(CounterexampleReport {
        x: x.clone(),
        qualifying,
    }))
}

/// Minimal members of K′ and the bonds, as sorted edge-set families.
pub fn cocircuit_families(g: &Graph, nc: &NcCatalog) -> Result<(Vec<EdgeSet>, Vec<EdgeSet>)> {
    let recovered = kprime_minimal(g, nc, None)?;
    let mut cuts: Vec<EdgeSet> = bonds(g)?.into_iter().map(|b| b.edges).collect();
    cuts.sort();
    Ok((recovered, cuts))
}

/// The minimal members of K′ are exactly the bonds.
pub fn verify_cocircuit_identity(g: &Graph) -> Result<bool> {
    if !is_k_connected(g, 3) {
        return Err(Error::NotThreeConnected);
    }
    let nc = non_separating_circuits(g, DEFAULT_CIRCUIT_CAP)?;
    let (recovered, cuts) = cocircuit_families(g, &nc)?;
    Ok(recovered == cuts)
}

/// Brute-force bonds: inclusion-minimal edge sets whose removal disconnects.
/// Only for tiny graphs; used to cross-check [`bonds`].
pub fn minimal_cuts_by_subsets(g: &Graph) -> Result<Vec<EdgeSet>> {
    let edges: Vec<usize> = g.edges().map(|(e, _)| e).collect();
    let m = edges.len();
    if m > MAX_SUBSET_EDGES {
        return Err(Error::TooLarge(format!("{m} edges")));
    }
    let to_set = |mask: u32| {
        EdgeSet::from_ids(
            g.universe(),
            (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]),
        )
    };
    let mut cuts: Vec<u32> = Vec::new();
    let mut masks: Vec<u32> = (1u32..1 << m).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        if cuts.iter().any(|&c| c & !mask == 0) {
            continue;
        }
        if !is_connected(&g.delete_edges(&to_set(mask)?)?) {
            cuts.push(mask);
        }
    }
    let mut out: Vec<EdgeSet> = cuts.into_iter().map(to_set).collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

#[allow(dead_code)]
fn triangle() -> Graph {
    build_graph(3, &[(0, 1), (1, 2), (0, 2)]).expect("triangle")
}
