use std::collections::BTreeSet;

use proptest::prelude::*;

use cyclespan::circuits::{
    enumerate_circuits, even_subgraph_to_circuits, is_separating, non_separating_circuits,
};
use cyclespan::cocircuits::{bonds, in_kprime, kprime_minimal};
use cyclespan::corpus::{random_3_connected, subdivide};
use cyclespan::cycle_space::{
    cyclomatic_number, express_in_span, fundamental_basis, gf2_rank, is_cycle_space_member,
    Gf2Matrix,
};
use cyclespan::decompose::{ear_sequence, theta_pair, Decomposer};
use cyclespan::format::{parse_edge_list, to_edge_list};
use cyclespan::graph::{
    blocks, is_top_3_connected, is_top_k4, suppress_degree_two, threads, EdgeSet, Graph,
};

fn host() -> impl Strategy<Value = Graph> {
    (4usize..=8, any::<u64>()).prop_map(|(n, seed)| random_3_connected(n, seed).unwrap())
}

/// A host together with a bit mask choosing basis elements or edges.
fn host_and_mask() -> impl Strategy<Value = (Graph, u64)> {
    (host(), any::<u64>())
}

fn combine(basis: &[EdgeSet], universe: usize, mask: u64) -> EdgeSet {
    let mut x = EdgeSet::empty(universe);
    for (i, b) in basis.iter().enumerate() {
        if mask >> (i % 64) & 1 == 1 {
            x.toggle_all(b);
        }
    }
    x
}

fn edge_subset(g: &Graph, mask: u64) -> EdgeSet {
    EdgeSet::from_ids(
        g.universe(),
        g.edges()
            .map(|(e, _)| e)
            .filter(|e| mask >> (e % 64) & 1 == 1),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cycle_space_is_closed_under_sums((g, mask) in host_and_mask(), other in any::<u64>()) {
        let basis = fundamental_basis(&g).unwrap();
        let x = combine(&basis, g.universe(), mask);
        let y = combine(&basis, g.universe(), other);
        prop_assert!(is_cycle_space_member(&g, &x).unwrap());
        prop_assert!(is_cycle_space_member(&g, &(&x ^ &y)).unwrap());
    }

    #[test]
    fn non_separating_circuits_span_the_cycle_space(g in host()) {
        let nc = non_separating_circuits(&g, 100_000).unwrap();
        prop_assert_eq!(gf2_rank(&nc.to_matrix()), cyclomatic_number(&g).unwrap());
    }

    #[test]
    fn span_certificates_replay((g, mask) in host_and_mask()) {
        let basis = fundamental_basis(&g).unwrap();
        let target = combine(&basis, g.universe(), mask);
        let matrix = Gf2Matrix::new(g.universe(), basis).unwrap();
        let cert = express_in_span(&target, &matrix).unwrap();
        prop_assert!(cert.replay(&matrix));
        prop_assert!(cert.coefficients.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn decomposition_certificates_replay((g, mask) in host_and_mask()) {
        let basis = fundamental_basis(&g).unwrap();
        let x = combine(&basis, g.universe(), mask);
        let cert = Decomposer::new(&g).unwrap().decompose_cs_element(&x).unwrap();
        prop_assert_eq!(cert.replay(), x);
        for part in &cert.parts {
            prop_assert!(!is_separating(&g, part).unwrap());
        }
        prop_assert!(cert.parts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn peeling_partitions_even_subgraphs((g, mask) in host_and_mask()) {
        let basis = fundamental_basis(&g).unwrap();
        let x = combine(&basis, g.universe(), mask);
        let pieces = even_subgraph_to_circuits(&g, &x).unwrap();
        let mut union = EdgeSet::empty(g.universe());
        for c in &pieces {
            prop_assert!(union.is_disjoint(c.edges()).unwrap());
            union.toggle_all(c.edges());
        }
        prop_assert_eq!(union, x);
    }

    #[test]
    fn deletion_and_contraction_commute((g, mask) in host_and_mask(), other in any::<u64>()) {
        let a = edge_subset(&g, mask);
        let b = &edge_subset(&g, other) - &a;
        let (contracted, _) = g.contract_edges(&a).unwrap();
        let left = contracted.delete_edges(&b).unwrap();
        let (right, _) = g.delete_edges(&b).unwrap().contract_edges(&a).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn contraction_keeps_the_edge_universe((g, mask) in host_and_mask()) {
        let a = edge_subset(&g, mask);
        let (minor, map) = g.contract_edges(&a).unwrap();
        prop_assert_eq!(minor.universe(), g.universe());
        prop_assert_eq!(minor.edge_count(), g.edge_count() - a.len());
        for (e, (u, v)) in g.edges() {
            if !a.contains(e) {
                let (x, y) = minor.endpoints(e).unwrap();
                let (p, q) = (map[&u].min(map[&v]), map[&u].max(map[&v]));
                prop_assert_eq!((x, y), (p, q));
            }
        }
    }

    #[test]
    fn blocks_partition_the_edges((g, mask) in host_and_mask()) {
        let h = g.delete_edges(&edge_subset(&g, mask)).unwrap();
        let decomposition = blocks(&h);
        let mut seen = EdgeSet::empty(h.universe());
        for b in &decomposition.blocks {
            prop_assert!(!b.is_empty());
            prop_assert!(seen.is_disjoint(b).unwrap());
            seen.toggle_all(b);
        }
        prop_assert_eq!(seen, h.edge_set());
    }

    #[test]
    fn threads_partition_the_edges(g in host()) {
        let h = subdivide(&g);
        let ts = threads(&h).unwrap();
        prop_assert_eq!(ts.len(), g.edge_count());
        let mut seen = EdgeSet::empty(h.universe());
        for t in &ts {
            let edges = t.edge_set(h.universe());
            prop_assert!(seen.is_disjoint(&edges).unwrap());
            seen.toggle_all(&edges);
            for v in t.inner_vertices() {
                prop_assert_eq!(h.degree(*v), 2);
            }
        }
        prop_assert_eq!(seen, h.edge_set());
        let (suppressed, _) = suppress_degree_two(&h).unwrap();
        prop_assert_eq!(suppressed.edge_count(), g.edge_count());
    }

    #[test]
    fn ear_sequences_stay_top_three_connected(g in host()) {
        let seq = ear_sequence(&subdivide(&g)).unwrap();
        let mut last = usize::MAX;
        for step in seq.graphs() {
            prop_assert!(is_top_3_connected(step));
            prop_assert!(step.edge_count() < last);
            last = step.edge_count();
        }
        prop_assert!(is_top_k4(&seq.terminal));
    }

    #[test]
    fn theta_pairs_meet_exactly_in_the_thread(g in host(), pick in any::<usize>()) {
        let ts = threads(&g).unwrap();
        let t = &ts[pick % ts.len()];
        let pair = theta_pair(&g, t).unwrap();
        prop_assert_eq!(pair.p.edges() & pair.q.edges(), t.edge_set(g.universe()));
        let shared: BTreeSet<_> = pair.p.vertex_set().intersection(&pair.q.vertex_set()).copied().collect();
        prop_assert_eq!(shared, t.vertex_set());
        prop_assert!(!is_separating(&g, &pair.p).unwrap());
        prop_assert!(!is_separating(&g, &pair.q).unwrap());
    }

    #[test]
    fn bonds_are_orthogonal_to_circuits(g in host()) {
        let nc = non_separating_circuits(&g, 100_000).unwrap();
        let circuits = enumerate_circuits(&g, 100_000).unwrap();
        for b in bonds(&g).unwrap() {
            prop_assert!(in_kprime(&b.edges, &nc).unwrap());
            for c in &circuits {
                prop_assert_eq!(c.edges().meet_count(&b.edges).unwrap() % 2, 0);
            }
        }
    }

    #[test]
    fn minimal_kprime_members_are_minimal(g in host()) {
        prop_assume!(g.edge_count() <= 14);
        let nc = non_separating_circuits(&g, 100_000).unwrap();
        let minimal = kprime_minimal(&g, &nc, None).unwrap();
        for (i, x) in minimal.iter().enumerate() {
            prop_assert!(in_kprime(x, &nc).unwrap());
            for (j, y) in minimal.iter().enumerate() {
                prop_assert!(i == j || !x.is_subset(y).unwrap());
            }
        }
    }

    #[test]
    fn edge_lists_round_trip(g in host()) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(g.fingerprint(), parse_edge_list(&to_edge_list(&g)).unwrap().fingerprint());
    }

    #[test]
    fn sym_diff_is_a_group(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let set = |m: u64| EdgeSet::from_ids(64, (0..64).filter(|i| m >> i & 1 == 1)).unwrap();
        let (x, y, z) = (set(a), set(b), set(c));
        prop_assert_eq!(&(&x ^ &y) ^ &z, &x ^ &(&y ^ &z));
        prop_assert_eq!(&x ^ &y, &y ^ &x);
        prop_assert!((&x ^ &x).is_empty());
        prop_assert_eq!((&x ^ &y).len(), x.len() + y.len() - 2 * x.meet_count(&y).unwrap());
    }
}
