//! Batch self-checks over one graph, reported as named pass/fail entries.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::circuits::{
    enumerate_circuits, is_separating, non_separating_circuits, Circuit, NcCatalog,
};
use crate::cocircuits::{bonds, cocircuit_families, single_crossing_witnesses, CrossingOutcome};
use crate::corpus::subdivide;
use crate::cycle_space::{
    cyclomatic_number, express_in_span, fundamental_basis, gf2_rank, is_cycle_space_member,
    Gf2Matrix,
};
use crate::decompose::{ear_sequence, lift_circuit, theta_pair_with_cap, Decomposer};
use crate::error::{Error, Result};
use crate::graph::{
    is_connected, is_k_connected, is_top_3_connected, is_top_k4, threads, EdgeSet, Graph,
};

/// Hosts with at most this many vertices have every circuit decomposed.
pub const EXHAUSTIVE_DECOMPOSITION_VERTICES: usize = 10;
/// Random cycle-space elements decomposed on larger hosts.
pub const SAMPLED_DECOMPOSITIONS: usize = 100;
/// Hosts with at most this many edges get exhaustive lifting and crossing checks.
pub const EXHAUSTIVE_SUBSET_EDGES: usize = 12;
/// Hosts with at most this many edges get a theta pair for every thread.
pub const THETA_EDGES: usize = 15;
/// Edge sets sampled for the crossing check on larger hosts.
pub const SAMPLED_CROSSINGS: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub cap: usize,
    /// Record wall-clock time; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            cap: crate::circuits::DEFAULT_CIRCUIT_CAP,
            timing: false,
        }
    }
}

/// Outcome of one check body before it gets a name.
enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn ok_if(pass: bool, details: String) -> Outcome {
    if pass {
        Outcome::Pass(details)
    } else {
        Outcome::Fail(details)
    }
}

struct Context<'a> {
    g: &'a Graph,
    opts: VerifyOptions,
    top3: bool,
    three: bool,
}

impl Context<'_> {
    fn nc(&self) -> Result<NcCatalog> {
        non_separating_circuits(self.g, self.opts.cap)
    }

    fn need_top3(&self) -> Option<Outcome> {
        (!self.top3).then(|| Outcome::Skip("graph is not top 3-connected".into()))
    }

    fn need_three(&self) -> Option<Outcome> {
        (!self.three).then(|| Outcome::Skip("graph is not 3-connected".into()))
    }
}

fn cycle_rank(cx: &Context) -> Result<Outcome> {
    let basis = fundamental_basis(cx.g)?;
    let beta = cyclomatic_number(cx.g)?;
    let rank = gf2_rank(&Gf2Matrix::new(cx.g.universe(), basis.clone())?);
    let mut members = true;
    for b in &basis {
        members &= is_cycle_space_member(cx.g, b)?;
    }
    Ok(ok_if(
        members && rank == beta && basis.len() == beta,
        format!(
            "basis size {}, rank {rank}, cyclomatic number {beta}",
            basis.len()
        ),
    ))
}

fn nc_span(cx: &Context) -> Result<Outcome> {
    if let Some(skip) = cx.need_top3() {
        return Ok(skip);
    }
    let nc = cx.nc()?;
    let matrix = nc.to_matrix();
    let rank = gf2_rank(&matrix);
    let beta = cyclomatic_number(cx.g)?;
    let basis = fundamental_basis(cx.g)?;
    let mut expressed = 0;
    for b in &basis {
        if express_in_span(b, &matrix)?.replay(&matrix) {
            expressed += 1;
        }
    }
    Ok(ok_if(
        rank == beta && expressed == basis.len(),
        format!(
            "{} non-separating circuits of rank {rank}, cyclomatic number {beta}, {expressed}/{} basis circuits expressed",
            nc.len(),
            basis.len()
        ),
    ))
}

fn random_cs_element(basis: &[EdgeSet], universe: usize, rng: &mut ChaCha8Rng) -> EdgeSet {
    let mut x = EdgeSet::empty(universe);
    for b in basis {
        if rng.gen_bool(0.5) {
            x.toggle_all(b);
        }
    }
    x
}

fn decomposition_replay(cx: &Context) -> Result<Outcome> {
    if let Some(skip) = cx.need_top3() {
        return Ok(skip);
    }
    let mut engine = Decomposer::with_cap(cx.g, cx.opts.cap)?;
    let mut checked = 0;
    let mut failures = 0;
    let mode;
    if cx.g.vertex_count() <= EXHAUSTIVE_DECOMPOSITION_VERTICES {
        mode = "circuits (all)";
        for c in enumerate_circuits(cx.g, cx.opts.cap)? {
            checked += 1;
            if !engine.decompose_circuit(&c)?.verify(cx.g)? {
                failures += 1;
            }
        }
    } else {
        mode = "random cycle-space elements";
        let basis = fundamental_basis(cx.g)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cx.opts.seed);
        for _ in 0..SAMPLED_DECOMPOSITIONS {
            let x = random_cs_element(&basis, cx.g.universe(), &mut rng);
            checked += 1;
            if !engine.decompose_cs_element(&x)?.verify(cx.g)? {
                failures += 1;
            }
        }
    }
    Ok(ok_if(
        failures == 0,
        format!("{checked} {mode} decomposed, {failures} certificates failed replay"),
    ))
}

fn ear_reducibility(cx: &Context) -> Result<Outcome> {
    if let Some(skip) = cx.need_top3() {
        return Ok(skip);
    }
    let mut lengths = Vec::new();
    for host in [cx.g.clone(), subdivide(cx.g)] {
        let seq = ear_sequence(&host)?;
        if !seq.graphs().all(is_top_3_connected) || !is_top_k4(&seq.terminal) {
            return Ok(Outcome::Fail(format!(
                "reduction of {} left the top 3-connected class",
                host.fingerprint()
            )));
        }
        lengths.push(seq.steps.len());
    }
    Ok(Outcome::Pass(format!(
        "{} removals on the graph, {} on its subdivision, both ending at a subdivided K4",
        lengths[0], lengths[1]
    )))
}

fn chord_lifting(cx: &Context) -> Result<Outcome> {
    if let Some(skip) = cx.need_top3() {
        return Ok(skip);
    }
    if is_top_k4(cx.g) {
        return Ok(Outcome::Pass(
            "no reducible thread in a subdivided K4".into(),
        ));
    }
    let exhaustive = cx.g.edge_count() <= EXHAUSTIVE_SUBSET_EDGES;
    let mut cases = 0;
    let mut splits = 0;
    let mut failures = 0;
    for t in threads(cx.g)? {
        let reduced = cx.g.thread_delete(&t)?;
        if !is_top_3_connected(&reduced) {
            continue;
        }
        for q in non_separating_circuits(&reduced, cx.opts.cap)?.members() {
            cases += 1;
            let lifted = lift_circuit(cx.g, &t, q)?;
            let mut sum = EdgeSet::empty(cx.g.universe());
            let mut good = true;
            for c in &lifted {
                sum.toggle_all(c.edges());
                good &= !is_separating(cx.g, c)?;
            }
            if lifted.len() == 2 {
                splits += 1;
            }
            if !good || sum != *q.edges() {
                failures += 1;
            }
        }
        if !exhaustive {
            break;
        }
    }
    let scope = if exhaustive {
        "every reducible thread"
    } else {
        "the first reducible thread"
    };
    Ok(ok_if(
        failures == 0,
        format!(
            "{cases} circuits lifted over {scope}, {splits} split on a chord, {failures} failed"
        ),
    ))
}

fn theta_pairs(cx: &Context) -> Result<Outcome> {
    if let Some(skip) = cx.need_top3() {
        return Ok(skip);
    }
    if cx.g.edge_count() > THETA_EDGES {
        return Ok(Outcome::Skip(format!("more than {THETA_EDGES} edges")));
    }
    let mut count = 0;
    let mut fallbacks = 0;
    let mut failures = 0;
    for t in threads(cx.g)? {
        count += 1;
        let pair = theta_pair_with_cap(cx.g, &t, cx.opts.cap)?;
        let edges = t.edge_set(cx.g.universe());
        let shared_vertices: std::collections::BTreeSet<_> = pair
            .p
            .vertex_set()
            .intersection(&pair.q.vertex_set())
            .copied()
            .collect();
        let exact = pair.p.edges() & pair.q.edges() == edges && shared_vertices == t.vertex_set();
        if !exact || is_separating(cx.g, &pair.p)? || is_separating(cx.g, &pair.q)? {
            failures += 1;
        }
        if pair.source == crate::decompose::ThetaSource::Exhaustive {
            fallbacks += 1;
        }
    }
    Ok(ok_if(
        failures == 0,
        format!("{count} threads, {failures} failed, {fallbacks} needed exhaustive search"),
    ))
}

fn crossing_holds(g: &Graph, x: &EdgeSet, nc: &NcCatalog) -> Result<bool> {
    Ok(match single_crossing_witnesses(g, x, nc)? {
        CrossingOutcome::Found(a, b) => a != b,
        CrossingOutcome::Counterexample(_) => false,
    })
}

fn single_crossing(cx: &Context) -> Result<Outcome> {
    if let Some(skip) = cx.need_three() {
        return Ok(skip);
    }
    let nc = cx.nc()?;
    let edges: Vec<usize> = cx.g.edges().map(|(e, _)| e).collect();
    let m = edges.len();
    let mut tried = 0;
    let mut failures = 0;
    let mut consider = |x: EdgeSet| -> Result<()> {
        if !x.is_empty() && is_connected(&cx.g.delete_edges(&x)?) {
            tried += 1;
            if !crossing_holds(cx.g, &x, &nc)? {
                failures += 1;
            }
        }
        Ok(())
    };
    let mode = if m <= EXHAUSTIVE_SUBSET_EDGES {
        for mask in 1u32..1 << m {
            let x = EdgeSet::from_ids(
                cx.g.universe(),
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]),
            )?;
            consider(x)?;
        }
        "(all)"
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cx.opts.seed);
        for _ in 0..SAMPLED_CROSSINGS {
            let size = rng.gen_range(1..=m);
            let picked = rand::seq::index::sample(&mut rng, m, size);
            let x = EdgeSet::from_ids(cx.g.universe(), picked.iter().map(|i| edges[i]))?;
            consider(x)?;
        }
        "(sampled)"
    };
    Ok(ok_if(
        failures == 0,
        format!("{tried} edge sets {mode} with a connected complement, {failures} lacked two crossing circuits"),
    ))
}

fn cocircuit_recovery(cx: &Context) -> Result<Outcome> {
    if let Some(skip) = cx.need_three() {
        return Ok(skip);
    }
    let nc = cx.nc()?;
    let (recovered, cuts) = match cocircuit_families(cx.g, &nc) {
        Err(Error::TooLarge(why)) => return Ok(Outcome::Skip(why)),
        other => other?,
    };
    Ok(ok_if(
        recovered == cuts,
        format!("{} minimal sets, {} bonds", recovered.len(), cuts.len()),
    ))
}

fn orthogonality(cx: &Context) -> Result<Outcome> {
    let cuts = match bonds(cx.g) {
        Err(Error::TooLarge(why)) => return Ok(Outcome::Skip(why)),
        other => other?,
    };
    let circuits: Vec<Circuit> = enumerate_circuits(cx.g, cx.opts.cap)?;
    let mut odd = 0;
    for b in &cuts {
        for c in &circuits {
            if c.edges().meet_count(&b.edges)? % 2 == 1 {
                odd += 1;
            }
        }
    }
    Ok(ok_if(
        odd == 0,
        format!(
            "{} bonds against {} circuits, {odd} odd intersections",
            cuts.len(),
            circuits.len()
        ),
    ))
}

type CheckFn = fn(&Context) -> Result<Outcome>;

/// Check names in report order.
pub const CHECK_NAMES: [&str; 9] = [
    "chord-lifting",
    "cocircuit-recovery",
    "cycle-rank",
    "decomposition-replay",
    "ear-reducibility",
    "nc-span",
    "orthogonality",
    "single-crossing",
    "theta-pairs",
];

const CHECKS: [CheckFn; 9] = [
    chord_lifting,
    cocircuit_recovery,
    cycle_rank,
    decomposition_replay,
    ear_reducibility,
    nc_span,
    orthogonality,
    single_crossing,
    theta_pairs,
];

/// Runs every check on `g`. Errors inside a check turn into a failed entry;
/// checks whose preconditions or size bounds do not hold pass with details
/// starting `skipped:`.
pub fn verify_all(name: &str, g: &Graph, opts: VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let cx = Context {
        g,
        opts,
        top3: is_top_3_connected(g),
        three: is_k_connected(g, 3),
    };
    let checks = CHECK_NAMES
        .iter()
        .zip(CHECKS)
        .map(|(name, check)| {
            let (pass, details) = match check(&cx) {
                Ok(Outcome::Pass(d)) => (true, d),
                Ok(Outcome::Skip(d)) => (true, format!("skipped: {d}")),
                Ok(Outcome::Fail(d)) => (false, d),
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                name: (*name).to_string(),
                pass,
                details,
            }
        })
        .collect();
    VerificationReport {
        graph: name.to_string(),
        checks,
        elapsed_ms: if opts.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    }
}
