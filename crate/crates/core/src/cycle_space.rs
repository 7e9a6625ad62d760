//! Linear algebra over GF(2) on edge sets.
//!
//! Elimination always pivots on the lowest edge id of a row, so every
//! certificate produced here is reproducible bit for bit.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSet, Graph, VertexId};

/// `X + Y`, the symmetric difference.
pub fn sym_diff(x: &EdgeSet, y: &EdgeSet) -> Result<EdgeSet> {
    x.sym_diff(y)
}

/// `true` iff every vertex has even degree in `(V, x)`. An edge set that
/// mentions edges missing from `g` is not a member.
pub fn is_cycle_space_member(g: &Graph, x: &EdgeSet) -> Result<bool> {
    if x.universe() != g.universe() {
        return Err(Error::UniverseMismatch {
            left: g.universe(),
            right: x.universe(),
        });
    }
    let mut odd: BTreeSet<VertexId> = BTreeSet::new();
    for e in x {
        let Some((a, b)) = g.endpoints(e) else {
            return Ok(false);
        };
        for v in [a, b] {
            if !odd.remove(&v) {
                odd.insert(v);
            }
        }
    }
    Ok(odd.is_empty())
}

/// `|E| − |V| + 1`, the dimension of the cycle space of a connected graph.
pub fn cyclomatic_number(g: &Graph) -> Result<usize> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    Ok(g.edge_count() + 1 - g.vertex_count())
}

/// Fundamental circuits of the breadth-first spanning tree rooted at the
/// lowest vertex, scanning incident edges by ascending id. One circuit per
/// non-tree edge, in ascending order of that edge.
pub fn fundamental_basis(g: &Graph) -> Result<Vec<EdgeSet>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let Some(root) = g.vertices().next() else {
        return Ok(Vec::new());
    };
    let incidence = g.incidence();
    let mut parent: BTreeMap<VertexId, Option<(usize, VertexId)>> = BTreeMap::from([(root, None)]);
    let mut tree = EdgeSet::empty(g.universe());
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &(e, w) in &incidence[&u] {
            if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(w) {
                slot.insert(Some((e, u)));
                tree.insert(e);
                queue.push_back(w);
            }
        }
    }
    let path_to_root = |mut v: VertexId| {
        let mut edges = EdgeSet::empty(g.universe());
        while let Some((e, up)) = parent[&v] {
            edges.insert(e);
            v = up;
        }
        edges
    };
    Ok(g.edges()
        .filter(|(e, _)| !tree.contains(*e))
        .map(|(e, (a, b))| {
            let mut circuit = &path_to_root(a) ^ &path_to_root(b);
            circuit.insert(e);
            circuit
        })
        .collect())
}

/// Rows of edge sets over one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<EdgeSet>,
    universe: usize,
}

impl Gf2Matrix {
    pub fn new(universe: usize, rows: Vec<EdgeSet>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.universe() != universe) {
            return Err(Error::UniverseMismatch {
                left: universe,
                right: bad.universe(),
            });
        }
        Ok(Gf2Matrix { rows, universe })
    }

    pub fn rows(&self) -> &[EdgeSet] {
        &self.rows
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Sum of the selected rows.
    pub fn combine(&self, indices: &[usize]) -> EdgeSet {
        let mut sum = EdgeSet::empty(self.universe);
        for &i in indices {
            sum.toggle_all(&self.rows[i]);
        }
        sum
    }
}

/// A row of the echelon form together with the original rows summing to it.
struct Pivot {
    row: EdgeSet,
    combo: Vec<bool>,
}

/// Incremental echelon form keyed by pivot column.
struct Echelon {
    pivots: BTreeMap<usize, Pivot>,
    width: usize,
}

impl Echelon {
    fn build(matrix: &Gf2Matrix) -> Self {
        let mut echelon = Echelon {
            pivots: BTreeMap::new(),
            width: matrix.rows.len(),
        };
        for (i, row) in matrix.rows.iter().enumerate() {
            let mut combo = vec![false; echelon.width];
            combo[i] = true;
            let (row, combo) = echelon.reduce(row.clone(), combo);
            if let Some(lead) = row.first() {
                echelon.pivots.insert(lead, Pivot { row, combo });
            }
        }
        echelon
    }

    /// Clears leading bits while a pivot exists for them. Each step raises the
    /// lowest set bit, so this terminates.
    fn reduce(&self, mut row: EdgeSet, mut combo: Vec<bool>) -> (EdgeSet, Vec<bool>) {
        while let Some(lead) = row.first() {
            let Some(pivot) = self.pivots.get(&lead) else {
                break;
            };
            row.toggle_all(&pivot.row);
            for (c, &p) in combo.iter_mut().zip(&pivot.combo) {
                *c ^= p;
            }
        }
        (row, combo)
    }
}

pub fn gf2_rank(matrix: &Gf2Matrix) -> usize {
    Echelon::build(matrix).pivots.len()
}

/// Generators whose sum is `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanCertificate {
    /// Sorted row indices.
    pub coefficients: Vec<usize>,
    pub target: EdgeSet,
}

impl SpanCertificate {
    pub fn replay(&self, generators: &Gf2Matrix) -> bool {
        generators.combine(&self.coefficients) == self.target
    }
}

impl Serialize for SpanCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coefficients.serialize(serializer)
    }
}

/// Writes `target` as a sum of generators, or reports [`Error::NotInSpan`].
pub fn express_in_span(target: &EdgeSet, generators: &Gf2Matrix) -> Result<SpanCertificate> {
    if target.universe() != generators.universe {
        return Err(Error::UniverseMismatch {
            left: generators.universe,
            right: target.universe(),
        });
    }
    let echelon = Echelon::build(generators);
    let (rest, combo) = echelon.reduce(target.clone(), vec![false; echelon.width]);
    if !rest.is_empty() {
        return Err(Error::NotInSpan);
    }
    Ok(SpanCertificate {
        coefficients: combo
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| i)
            .collect(),
        target: target.clone(),
    })
}
