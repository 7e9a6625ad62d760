use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{is_top_3_connected, is_top_k4, threads, Graph, Thread};

/// Number of threads of a top 3-connected graph. Six exactly for top K4.
pub fn count_threads(g: &Graph) -> Result<usize> {
    if !is_top_3_connected(g) {
        return Err(Error::NotTop3Connected);
    }
    Ok(threads(g)?.len())
}

/// The first thread (by sorted edge ids) whose removal leaves a top
/// 3-connected graph.
pub fn find_reducible_thread(g: &Graph) -> Result<Thread> {
    if !is_top_3_connected(g) {
        return Err(Error::NotTop3Connected);
    }
    if is_top_k4(g) {
        return Err(Error::IsTopK4);
    }
    for t in threads(g)? {
        if is_top_3_connected(&g.thread_delete(&t)?) {
            return Ok(t);
        }
    }
    Err(Error::VerificationFailed(format!(
        "no reducible thread in top 3-connected graph {}",
        g.fingerprint()
    )))
}

/// One reduction: the graph before it and the thread removed from it.
#[derive(Debug, Clone)]
pub struct EarStep {
    pub graph: Graph,
    pub thread: Thread,
}

/// Repeated thread removal from a top 3-connected graph down to a top K4.
#[derive(Debug, Clone)]
pub struct EarSequence {
    pub steps: Vec<EarStep>,
    pub terminal: Graph,
}

impl EarSequence {
    /// Graphs from the input down to the terminal, inclusive.
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.steps
            .iter()
            .map(|s| &s.graph)
            .chain(std::iter::once(&self.terminal))
    }
}

pub fn ear_sequence(g: &Graph) -> Result<EarSequence> {
    if !is_top_3_connected(g) {
        return Err(Error::NotTop3Connected);
    }
    let mut steps = Vec::new();
    let mut current = g.clone();
    while !is_top_k4(&current) {
        let thread = find_reducible_thread(&current)?;
        let next = current.thread_delete(&thread)?;
        steps.push(EarStep {
            graph: current,
            thread,
        });
        current = next;
    }
    Ok(EarSequence {
        steps,
        terminal: current,
    })
}

#[derive(Serialize)]
struct StepView<'a> {
    fingerprint: String,
    thread: &'a [usize],
    vertices: &'a [usize],
}

impl Serialize for EarSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            steps: Vec<StepView<'a>>,
            terminal_fingerprint: String,
            terminal_edges: Vec<usize>,
        }
        View {
            steps: self
                .steps
                .iter()
                .map(|s| StepView {
                    fingerprint: s.graph.fingerprint(),
                    thread: s.thread.edge_sequence(),
                    vertices: s.thread.vertex_sequence(),
                })
                .collect(),
            terminal_fingerprint: self.terminal.fingerprint(),
            terminal_edges: self.terminal.edges().map(|(e, _)| e).collect(),
        }
        .serialize(serializer)
    }
}
