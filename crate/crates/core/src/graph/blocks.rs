use std::collections::{BTreeMap, BTreeSet};

use super::{EdgeId, EdgeSet, Graph, VertexId};

/// Partition of the edges of a graph into blocks.
///
/// Loops and bridges are singleton blocks; parallel edges share a block.
/// A cut vertex is a vertex lying on two or more blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<EdgeSet>,
    pub cut_vertices: BTreeSet<VertexId>,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, e: EdgeId) -> Option<&EdgeSet> {
        self.blocks.iter().find(|b| b.contains(e))
    }
}

struct Tarjan<'a> {
    adj: &'a [Vec<(usize, EdgeId)>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<EdgeId>,
    blocks: Vec<Vec<EdgeId>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent_edge: Option<EdgeId>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for &(w, e) in &self.adj[u] {
            if Some(e) == parent_edge {
                continue;
            }
            if self.disc[w] == 0 {
                self.stack.push(e);
                self.visit(w, Some(e));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some(f) = self.stack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push(e);
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Block decomposition of a multigraph (Hopcroft–Tarjan on edges).
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); index.len()];
    let mut loops = Vec::new();
    for (e, (a, b)) in g.edges() {
        if a == b {
            loops.push(e);
        } else {
            adj[index[&a]].push((index[&b], e));
            adj[index[&b]].push((index[&a], e));
        }
    }
    let mut tarjan = Tarjan {
        adj: &adj,
        disc: vec![0; index.len()],
        low: vec![0; index.len()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for root in 0..index.len() {
        if tarjan.disc[root] == 0 {
            tarjan.visit(root, None);
        }
    }
    let mut found: Vec<EdgeSet> = tarjan
        .blocks
        .into_iter()
        .chain(loops.into_iter().map(|e| vec![e]))
        .map(|ids| EdgeSet::from_ids(g.universe(), ids).expect("edge ids come from the graph"))
        .collect();
    found.sort();

    let mut membership: BTreeMap<VertexId, usize> = BTreeMap::new();
    for block in &found {
        for v in g.vertices_of(block) {
            *membership.entry(v).or_default() += 1;
        }
    }
    BlockDecomposition {
        blocks: found,
        cut_vertices: membership
            .into_iter()
            .filter(|&(_, n)| n >= 2)
            .map(|(v, _)| v)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{k4, path};
    use crate::graph::{build_graph, is_connected};

    #[test]
    fn k4_is_one_block() {
        let d = blocks(&k4());
        assert_eq!(d.block_count(), 1);
        assert_eq!(d.blocks[0].len(), 6);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn path_bridges_are_blocks() {
        let d = blocks(&path(4));
        assert_eq!(d.block_count(), 3);
        assert!(d.blocks.iter().all(|b| b.len() == 1));
        assert_eq!(d.cut_vertices, BTreeSet::from([1, 2]));
    }

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let g = build_graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = blocks(&g);
        assert_eq!(d.block_count(), 2);
        // Oracle: a vertex is a cut vertex iff removing it disconnects the rest.
        let brute: BTreeSet<VertexId> = g
            .vertices()
            .filter(|&v| !is_connected(&g.remove_vertices(&BTreeSet::from([v]))))
            .collect();
        assert_eq!(d.cut_vertices, brute);
        assert_eq!(brute, BTreeSet::from([2]));
    }

    #[test]
    fn loops_and_parallels() {
        // Two parallel edges 0-1, a loop at 1 and a pendant edge 1-2.
        let g = Graph::multigraph(
            0..3,
            4,
            [(0, (0, 1)), (1, (0, 1)), (2, (1, 1)), (3, (1, 2))],
        )
        .unwrap();
        let d = blocks(&g);
        let ids: Vec<Vec<EdgeId>> = d.blocks.iter().map(EdgeSet::ids).collect();
        assert_eq!(ids, vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(d.cut_vertices, BTreeSet::from([1]));
    }

    #[test]
    fn isolated_vertices_have_no_blocks() {
        let g = Graph::multigraph(0..3, 0, []).unwrap();
        assert_eq!(blocks(&g).block_count(), 0);
    }
}
