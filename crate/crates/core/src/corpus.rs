//! Named graphs used throughout the tests, the book and the command line.
//!
//! | name            | graph                                                   |
//! |-----------------|---------------------------------------------------------|
//! | `kN`            | complete graph on `N` vertices (`k4`, `k5`, `k6`, ...)  |
//! | `k33`           | complete bipartite `K3,3`                               |
//! | `wheel-N`       | hub `0` joined to a rim cycle `1..=N` (`N ≥ 3`)         |
//! | `prism`         | triangular prism                                        |
//! | `petersen`      | Petersen graph                                          |
//! | `random3c-N`    | random 3-connected graph on `N ≥ 4` vertices, by seed   |
//! | `sub-NAME`      | `NAME` with every edge subdivided once                  |

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{build_graph, is_k_connected, Graph, VertexId};

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build_graph(n, &pairs).expect("complete graph")
}

/// Edges `(0,1) (0,2) (0,3) (1,2) (1,3) (2,3)` with ids `0..6`.
pub fn k4() -> Graph {
    complete(4)
}

pub fn k33() -> Graph {
    let pairs: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    build_graph(6, &pairs).expect("K3,3")
}

/// Cycle `0-1-...-(n-1)-0`; edge `i` joins `i` and `i+1`.
pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build_graph(n, &pairs).expect("cycle")
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build_graph(n, &pairs).expect("path")
}

/// Hub `0`, rim `1..=spokes`. Rim edges come first (ids `0..spokes`, edge `i`
/// joins `i+1` and `i+2`), then spokes (id `spokes + i` joins `0` and `i+1`).
pub fn wheel(spokes: usize) -> Graph {
    let rim = (0..spokes).map(|i| (1 + i, 1 + (i + 1) % spokes));
    let hub = (0..spokes).map(|i| (0, 1 + i));
    build_graph(spokes + 1, &rim.chain(hub).collect::<Vec<_>>()).expect("wheel")
}

/// Triangles `0 1 2` and `3 4 5` with rungs `0-3`, `1-4`, `2-5`.
pub fn prism() -> Graph {
    build_graph(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("prism")
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    build_graph(10, &outer.chain(spokes).chain(inner).collect::<Vec<_>>()).expect("Petersen")
}

/// Two vertices joined by `paths` internally disjoint paths of `length` edges.
pub fn theta(paths: usize, length: usize) -> Graph {
    let mut pairs = Vec::new();
    let mut next = 2;
    for _ in 0..paths {
        let mut prev = 0;
        for _ in 1..length {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
        pairs.push((prev, 1));
    }
    build_graph(next, &pairs).expect("theta graph")
}

/// Subdivides every edge once. Edge `e = (u, v)` becomes `2e = (u, w)` and
/// `2e + 1 = (w, v)` for a fresh vertex `w`.
pub fn subdivide(g: &Graph) -> Graph {
    let index: Vec<VertexId> = g.vertices().collect();
    let n = index.len();
    let pos = |v: VertexId| index.binary_search(&v).expect("vertex");
    let mut pairs = Vec::new();
    for (k, (_, (u, v))) in g.edges().enumerate() {
        pairs.push((pos(u), n + k));
        pairs.push((n + k, pos(v)));
    }
    build_graph(n + g.edge_count(), &pairs).expect("subdivision")
}

/// Grows a 3-connected graph from K4 by vertex splits, edge subdivisions
/// joined to a third vertex, and edge additions; each preserves
/// 3-connectivity. The result is checked before it is returned.
pub fn random_3_connected(vertices: usize, seed: u64) -> Result<Graph> {
    if vertices < 4 {
        return Err(Error::GenerationFailed(format!(
            "a 3-connected graph needs at least 4 vertices, got {vertices}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: BTreeSet<(VertexId, VertexId)> = (0..4)
        .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
        .collect();
    let mut n = 4;
    let norm = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
    let neighbours = |edges: &BTreeSet<(VertexId, VertexId)>, v: VertexId| -> Vec<VertexId> {
        edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    };

    while n < vertices {
        let roll: f64 = rng.gen();
        let splittable: Vec<VertexId> = (0..n)
            .filter(|&v| neighbours(&edges, v).len() >= 4)
            .collect();
        if roll < 0.15 {
            let missing: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|p| !edges.contains(p))
                .collect();
            if let Some(&p) = missing.choose(&mut rng) {
                edges.insert(p);
            }
        } else if roll < 0.55 && !splittable.is_empty() {
            let v = *splittable.choose(&mut rng).unwrap();
            let mut nbrs = neighbours(&edges, v);
            nbrs.shuffle(&mut rng);
            let keep = rng.gen_range(2..=nbrs.len() - 2);
            let w = n;
            n += 1;
            for &b in &nbrs[keep..] {
                edges.remove(&norm(v, b));
                edges.insert(norm(w, b));
            }
            edges.insert(norm(v, w));
        } else {
            let all: Vec<_> = edges.iter().copied().collect();
            let (x, y) = *all.choose(&mut rng).unwrap();
            let others: Vec<VertexId> = (0..n).filter(|&z| z != x && z != y).collect();
            let z = *others.choose(&mut rng).unwrap();
            let w = n;
            n += 1;
            edges.remove(&(x, y));
            edges.extend([norm(x, w), norm(w, y), norm(w, z)]);
        }
    }
    let g = build_graph(n, &edges.into_iter().collect::<Vec<_>>())?;
    if is_k_connected(&g, 3) {
        Ok(g)
    } else {
        Err(Error::GenerationFailed(format!(
            "random3c-{vertices} with seed {seed} is not 3-connected"
        )))
    }
}

/// Looks up a named graph; see the module docs for the names.
pub fn gen_corpus(name: &str, seed: u64) -> Result<Graph> {
    let unknown = || Error::UnknownName(name.to_string());
    let number = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if let Some(rest) = name.strip_prefix("sub-") {
        return Ok(subdivide(&gen_corpus(rest, seed)?));
    }
    match name {
        "k33" => Ok(k33()),
        "prism" => Ok(prism()),
        "petersen" => Ok(petersen()),
        _ => {
            if let Some(n) = name.strip_prefix("wheel-") {
                let n = number(n)?;
                if n < 3 {
                    return Err(unknown());
                }
                Ok(wheel(n))
            } else if let Some(n) = name.strip_prefix("random3c-") {
                random_3_connected(number(n)?, seed)
            } else if let Some(n) = name.strip_prefix('k') {
                Ok(complete(number(n)?))
            } else {
                Err(unknown())
            }
        }
    }
}

/// A corpus entry: display name, generator name, seed and graph.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub label: String,
    pub name: String,
    pub seed: u64,
    pub graph: Graph,
}

/// `k4 k5 k6 k33 wheel-4..7 prism petersen` and `random3c-8..12` with seeds
/// `0..5`.
pub fn standard_corpus() -> Vec<CorpusGraph> {
    let fixed = [
        "k4", "k5", "k6", "k33", "wheel-4", "wheel-5", "wheel-6", "wheel-7", "prism", "petersen",
    ];
    let mut out: Vec<CorpusGraph> = fixed
        .iter()
        .map(|&name| CorpusGraph {
            label: name.to_string(),
            name: name.to_string(),
            seed: 0,
            graph: gen_corpus(name, 0).expect("fixed corpus graph"),
        })
        .collect();
    for n in 8..=12 {
        for seed in 0..5 {
            let name = format!("random3c-{n}");
            out.push(CorpusGraph {
                label: format!("{name}@{seed}"),
                graph: gen_corpus(&name, seed).expect("random corpus graph"),
                name,
                seed,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_graphs() {
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.degrees().values().all(|&d| d == 3));
        assert_eq!(wheel(4).edge_count(), 8);
        assert_eq!(k33().edge_count(), 9);
        assert_eq!(gen_corpus("k4", 0).unwrap(), k4());
        assert_eq!(gen_corpus("k6", 0).unwrap().edge_count(), 15);
        assert_eq!(gen_corpus("sub-k4", 0).unwrap().edge_count(), 12);
    }

    #[test]
    fn unknown_names() {
        for name in ["", "cube", "wheel-2", "wheel-x", "kx", "random3c-"] {
            assert!(
                matches!(gen_corpus(name, 0), Err(Error::UnknownName(_))),
                "{name}"
            );
        }
        assert!(matches!(
            gen_corpus("random3c-3", 0),
            Err(Error::GenerationFailed(_))
        ));
    }

    #[test]
    fn random_graphs_are_three_connected_and_reproducible() {
        for n in 4..=12 {
            for seed in 0..5 {
                let g = random_3_connected(n, seed).unwrap();
                assert_eq!(g.vertex_count(), n);
                assert!(is_k_connected(&g, 3));
                assert_eq!(g, random_3_connected(n, seed).unwrap());
            }
        }
    }
}
