//! Writing cycle-space elements as sums of non-separating circuits.
//!
//! The decomposition follows the induction on threads. A top 3-connected
//! graph `G` that is not a subdivided K4 has a thread `T` such that
//! `G' = G − (T)` is still top 3-connected ([`find_reducible_thread`]).
//!
//! * A circuit avoiding `T` is a circuit of `G'`. Decompose it there, then
//!   lift each part back to `G`: a part that does not have `T` as a
//!   path-chord stays non-separating in `G`; a part that does is replaced by
//!   the two circuits `R`, `S` of `C ∪ T` other than `C`, which are
//!   non-separating in `G` and sum to `C` ([`lift_circuit`]).
//! * A circuit `A` through `T` is paired with one circuit `P` of a
//!   [`theta_pair`] for `T`. `A + P` avoids `T`, so it lies in the cycle
//!   space of `G'` and is handled as above; adding `P` back gives `A`.
//!
//! At a subdivided K4 the four non-separating circuits span the
//! three-dimensional cycle space and the target is solved for directly.

mod ears;
mod theta;

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

pub use ears::{count_threads, ear_sequence, find_reducible_thread, EarSequence, EarStep};
pub use theta::{theta_pair, theta_pair_with_cap, ThetaPair, ThetaSource};

use crate::circuits::{
    even_subgraph_to_circuits, is_path_chord, is_separating, non_separating_circuits,
    split_on_path_chord, Circuit, DEFAULT_CIRCUIT_CAP,
};
use crate::cycle_space::{express_in_span, is_cycle_space_member, Gf2Matrix};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Thread};

/// Non-separating circuits of a host graph summing to a target edge set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionCertificate {
    pub target: EdgeSet,
    /// Sorted by edge ids, no repeats.
    pub parts: Vec<Circuit>,
    pub host_fingerprint: String,
}

impl DecompositionCertificate {
    /// The GF(2) sum of the parts.
    pub fn replay(&self) -> EdgeSet {
        let mut sum = EdgeSet::empty(self.target.universe());
        for part in &self.parts {
            sum.toggle_all(part.edges());
        }
        sum
    }

    /// Replays the sum and re-checks every part against `host`.
    pub fn verify(&self, host: &Graph) -> Result<bool> {
        if host.fingerprint() != self.host_fingerprint || self.replay() != self.target {
            return Ok(false);
        }
        for part in &self.parts {
            if is_separating(host, part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Replaces a non-separating circuit of `G − (T)` by non-separating circuits
/// of `G` with the same sum.
pub fn lift_circuit(g: &Graph, t: &Thread, q: &Circuit) -> Result<Vec<Circuit>> {
    let reduced = g.thread_delete(t)?;
    let in_reduced =
        Circuit::from_edges(&reduced, q.edges().clone()).map_err(|_| Error::NotInNcOfReduced)?;
    if is_separating(&reduced, &in_reduced)? {
        return Err(Error::NotInNcOfReduced);
    }
    lift(g, t, q)
}

fn lift(g: &Graph, t: &Thread, q: &Circuit) -> Result<Vec<Circuit>> {
    if is_path_chord(g, q, t)? {
        let (r, s) = split_on_path_chord(g, q, t)?;
        Ok(vec![r, s])
    } else {
        Ok(vec![q.clone()])
    }
}

fn toggle(parts: &mut BTreeSet<Circuit>, c: Circuit) {
    if !parts.remove(&c) {
        parts.insert(c);
    }
}

/// Reusable decomposition engine for one host graph.
///
/// Building it runs the thread reduction once. Theta circuits are computed
/// on first use and every solved (level, circuit) pair is remembered, so
/// decomposing many targets on the same host stays cheap.
pub struct Decomposer {
    host_fingerprint: String,
    levels: Vec<ears::EarStep>,
    terminal: Graph,
    base: Vec<Circuit>,
    anchors: Vec<Option<Circuit>>,
    memo: HashMap<(usize, EdgeSet), Vec<Circuit>>,
    cap: usize,
}

impl Decomposer {
    pub fn new(g: &Graph) -> Result<Self> {
        Decomposer::with_cap(g, DEFAULT_CIRCUIT_CAP)
    }

    pub fn with_cap(g: &Graph, cap: usize) -> Result<Self> {
        let sequence = ear_sequence(g)?;
        let base = non_separating_circuits(&sequence.terminal, cap)?
            .members()
            .to_vec();
        Ok(Decomposer {
            host_fingerprint: g.fingerprint(),
            anchors: vec![None; sequence.steps.len()],
            levels: sequence.steps,
            terminal: sequence.terminal,
            base,
            memo: HashMap::new(),
            cap,
        })
    }

    /// Number of thread removals between the host and its subdivided K4.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    fn graph_at(&self, level: usize) -> &Graph {
        self.levels
            .get(level)
            .map_or(&self.terminal, |step| &step.graph)
    }

    pub fn host(&self) -> &Graph {
        self.graph_at(0)
    }

    pub fn decompose_circuit(&mut self, a: &Circuit) -> Result<DecompositionCertificate> {
        let a = Circuit::from_edges(self.host(), a.edges().clone())?;
        let parts = self.solve(0, &a)?;
        Ok(self.certificate(a.edges().clone(), parts))
    }

    pub fn decompose_cs_element(&mut self, x: &EdgeSet) -> Result<DecompositionCertificate> {
        if !is_cycle_space_member(self.host(), x)? {
            return Err(Error::NotEven);
        }
        let mut parts = BTreeSet::new();
        for piece in even_subgraph_to_circuits(self.host(), x)? {
            for c in self.solve(0, &piece)? {
                toggle(&mut parts, c);
            }
        }
        Ok(self.certificate(x.clone(), parts.into_iter().collect()))
    }

    fn certificate(&self, target: EdgeSet, parts: Vec<Circuit>) -> DecompositionCertificate {
        DecompositionCertificate {
            target,
            parts,
            host_fingerprint: self.host_fingerprint.clone(),
        }
    }

    fn anchor(&mut self, level: usize) -> Result<Circuit> {
        if let Some(p) = &self.anchors[level] {
            return Ok(p.clone());
        }
        let step = &self.levels[level];
        let p = theta_pair_with_cap(&step.graph, &step.thread, self.cap)?.p;
        self.anchors[level] = Some(p.clone());
        Ok(p)
    }

    fn solve(&mut self, level: usize, a: &Circuit) -> Result<Vec<Circuit>> {
        let key = (level, a.edges().clone());
        if let Some(done) = self.memo.get(&key) {
            return Ok(done.clone());
        }
        let parts = if level == self.levels.len() {
            let generators = Gf2Matrix::new(
                self.terminal.universe(),
                self.base.iter().map(|c| c.edges().clone()).collect(),
            )?;
            express_in_span(a.edges(), &generators)?
                .coefficients
                .into_iter()
                .map(|i| self.base[i].clone())
                .collect()
        } else {
            let g = self.levels[level].graph.clone();
            let t = self.levels[level].thread.clone();
            let thread_edges = t.edge_set(g.universe());
            let mut parts = BTreeSet::new();
            let pieces = if thread_edges.is_subset(a.edges())? {
                let p = self.anchor(level)?;
                let rest = a.edges() ^ p.edges();
                toggle(&mut parts, p);
                even_subgraph_to_circuits(self.graph_at(level + 1), &rest)?
            } else {
                vec![a.clone()]
            };
            for piece in pieces {
                for q in self.solve(level + 1, &piece)? {
                    for lifted in lift(&g, &t, &q)? {
                        toggle(&mut parts, lifted);
                    }
                }
            }
            parts.into_iter().collect()
        };
        self.memo.insert(key, parts);
        Ok(self.memo[&(level, a.edges().clone())].clone())
    }
}

/// Non-separating circuits of `g` summing to the circuit `a`.
pub fn decompose_circuit(g: &Graph, a: &Circuit) -> Result<DecompositionCertificate> {
    Circuit::from_edges(g, a.edges().clone())?;
    Decomposer::new(g)?.decompose_circuit(a)
}

/// Non-separating circuits of `g` summing to the cycle-space element `x`.
pub fn decompose_cs_element(g: &Graph, x: &EdgeSet) -> Result<DecompositionCertificate> {
    if !is_cycle_space_member(g, x)? {
        return Err(Error::NotEven);
    }
    Decomposer::new(g)?.decompose_cs_element(x)
}
