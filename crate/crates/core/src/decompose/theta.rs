use std::collections::BTreeSet;

use serde::Serialize;

use crate::circuits::{
    enumerate_circuits, is_separating, non_separating_circuits, Circuit, DEFAULT_CIRCUIT_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{blocks, is_top_3_connected, EdgeSet, Graph, Thread, VertexId};

/// How a [`ThetaPair`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaSource {
    /// Block-size maximisation over circuits meeting a reference circuit in
    /// exactly the thread.
    Maximization,
    /// Exhaustive search over the non-separating circuits, used when the
    /// maximisation result does not verify.
    Exhaustive,
}

/// Two non-separating circuits meeting exactly in a thread, in edges and in
/// vertices.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaPair {
    pub p: Circuit,
    pub q: Circuit,
    pub thread: Thread,
    pub source: ThetaSource,
}

struct ThreadView {
    edges: EdgeSet,
    vertices: BTreeSet<VertexId>,
}

impl ThreadView {
    /// `a ∩ b = T` as subgraphs.
    fn meets_exactly(&self, a: &Circuit, b: &Circuit) -> bool {
        a.edges() & b.edges() == self.edges
            && a.vertex_set()
                .intersection(&b.vertex_set())
                .copied()
                .collect::<BTreeSet<_>>()
                == self.vertices
    }
}

/// Size of the block of `G / C` holding the edges of `reference − (T)`.
fn alpha(g: &Graph, c: &Circuit, reference: &Circuit, thread: &ThreadView) -> Result<usize> {
    let (minor, _) = g.contract_edges(c.edges())?;
    let outside = reference.edges() - &thread.edges;
    let Some(e) = outside.first() else {
        return Ok(0);
    };
    Ok(blocks(&minor).block_of(e).map_or(0, EdgeSet::len))
}

/// Among circuits meeting `reference` exactly in the thread, the first one of
/// maximum `alpha`.
fn maximise<'a>(
    g: &Graph,
    through: &'a [Circuit],
    reference: &Circuit,
    thread: &ThreadView,
) -> Result<Option<&'a Circuit>> {
    let mut best: Option<(usize, &Circuit)> = None;
    for c in through
        .iter()
        .filter(|c| thread.meets_exactly(c, reference))
    {
        let a = alpha(g, c, reference, thread)?;
        if best.is_none_or(|(b, _)| a > b) {
            best = Some((a, c));
        }
    }
    Ok(best.map(|(_, c)| c))
}

/// [`theta_pair_with_cap`] with the default circuit cap.
pub fn theta_pair(g: &Graph, t: &Thread) -> Result<ThetaPair> {
    theta_pair_with_cap(g, t, DEFAULT_CIRCUIT_CAP)
}

/// Two non-separating circuits `P`, `Q` with `P ∩ Q = T`.
///
/// Picks the first pair of circuits `R`, `S` meeting exactly in `t`, then
/// maximises, over circuits `C` with `C ∩ R = T`, the size of the block of
/// `G / C` that holds `R − (T)`. The winner is `P`; the same step with `P` as
/// reference gives `Q`. If that pair fails verification the non-separating
/// circuits are searched exhaustively instead.
pub fn theta_pair_with_cap(g: &Graph, t: &Thread, cap: usize) -> Result<ThetaPair> {
    if !is_top_3_connected(g) {
        return Err(Error::NotTop3Connected);
    }
    if !t.is_thread_of(g) {
        return Err(Error::NotAThread(t.edge_sequence().to_vec()));
    }
    let view = ThreadView {
        edges: t.edge_set(g.universe()),
        vertices: t.vertex_set(),
    };
    let through: Vec<Circuit> = enumerate_circuits(g, cap)?
        .into_iter()
        .filter(|c| view.edges.is_subset(c.edges()).unwrap())
        .collect();

    let first_pair = through.iter().enumerate().find_map(|(i, r)| {
        through[i + 1..]
            .iter()
            .any(|s| view.meets_exactly(r, s))
            .then_some(r)
    });
    if let Some(r) = first_pair {
        if let Some(p) = maximise(g, &through, r, &view)? {
            if let Some(q) = maximise(g, &through, p, &view)? {
                let verified =
                    !is_separating(g, p)? && !is_separating(g, q)? && view.meets_exactly(p, q);
                if verified {
                    return Ok(ThetaPair {
                        p: p.clone(),
                        q: q.clone(),
                        thread: t.clone(),
                        source: ThetaSource::Maximization,
                    });
                }
            }
        }
    }

    let nc = non_separating_circuits(g, cap)?;
    let members: Vec<&Circuit> = nc
        .members()
        .iter()
        .filter(|c| view.edges.is_subset(c.edges()).unwrap())
        .collect();
    for (i, p) in members.iter().enumerate() {
        for q in &members[i + 1..] {
            if view.meets_exactly(p, q) {
                return Ok(ThetaPair {
                    p: (*p).clone(),
                    q: (*q).clone(),
                    thread: t.clone(),
                    source: ThetaSource::Exhaustive,
                });
            }
        }
    }
    Err(Error::VerificationFailed(format!(
        "no theta pair for thread {:?}",
        t.edge_sequence()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{k4, wheel};

    #[test]
    fn k4_edge() {
        let g = k4();
        let t = Thread::from_edges(&g, &[0]).unwrap();
        let pair = theta_pair(&g, &t).unwrap();
        let mut got = vec![pair.p.edges().ids(), pair.q.edges().ids()];
        got.sort();
        // Triangles 012 and 013.
        assert_eq!(got, vec![vec![0, 1, 3], vec![0, 2, 4]]);
        assert_eq!(pair.source, ThetaSource::Maximization);
    }

    #[test]
    fn wheel_spoke() {
        let g = wheel(4);
        // Spoke 0-1 has id 4.
        let t = Thread::from_edges(&g, &[4]).unwrap();
        let pair = theta_pair(&g, &t).unwrap();
        assert_eq!(pair.p.len(), 3);
        assert_eq!(pair.q.len(), 3);
        assert_eq!((pair.p.edges() & pair.q.edges()).ids(), vec![4]);
    }
}
