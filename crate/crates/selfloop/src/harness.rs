//! Instance generation, verification campaigns and oracle cross-checks.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use selfloop_core::bounds::{BoundId, BoundReport, Instance, Verdict};
use selfloop_core::construct::{adjacency, incidence, line_graph, signless_laplacian, SymMatrix};
use selfloop_core::graph::{LoopSet, LoopedGraph, SimpleGraph};
use selfloop_core::invariants::{
    ng_aux_closed_spectrum, ng_aux_spectrum, shift_interlacing_of, trace_identities_of, NgExact,
};
use selfloop_core::numerics::{closed_form_kn_sigma_spectrum, spectrum, verify_linegraph_identity};
use selfloop_core::SPECTRAL_TOL;

use crate::error::{Result, ShellError};
use crate::loopline::print_loopline;
use crate::report::{fmt_real, ById, SCHEMA_VERSION};

/// Largest order [`gen_exhaustive`] accepts.
pub const EXHAUSTIVE_MAX: usize = 7;

/// Orders up to this one get every loop subset; larger orders are sampled.
pub const ALL_LOOPS_MAX: usize = 5;

/// Instances evaluated in parallel per batch.
const BATCH: usize = 4096;

/// Cap on the witnesses a report lists per category.
const WITNESS_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SigmaPolicy {
    /// `σ` uniform on `0..=n`, then a uniform subset of that size.
    Uniform,
    /// Each vertex independently with probability `q`.
    Bernoulli(f64),
    /// A uniform subset of size `min(k, n)`.
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignConfig {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Edge probability of instance `i` is `edge_probs[i % len]`.
    pub edge_probs: Vec<f64>,
    pub sigma_policy: SigmaPolicy,
    /// Random instances, generated after any exhaustive part.
    pub count: usize,
    #[serde(serialize_with = "ser_ids")]
    pub bounds: Vec<BoundId>,
    /// Enumerate every graph up to this order first.
    pub exhaustive: Option<usize>,
    /// Loop subsets drawn per graph for exhaustive orders above
    /// [`ALL_LOOPS_MAX`].
    pub loop_samples: usize,
    pub tol: f64,
    /// Record wall-clock runtime; off by default so that reports are
    /// reproducible byte for byte.
    #[serde(skip)]
    pub timing: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: 0,
            n_min: 1,
            n_max: 8,
            edge_probs: vec![0.2, 0.5, 0.8],
            sigma_policy: SigmaPolicy::Uniform,
            count: 100,
            bounds: BoundId::ALL.to_vec(),
            exhaustive: None,
            loop_samples: 1,
            tol: selfloop_core::SLACK_TOL,
            timing: false,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(ShellError::Config(m.to_string()));
        if self.n_min == 0 || self.n_min > self.n_max {
            return bad("need 1 <= n_min <= n_max");
        }
        if self.n_max > crate::graph6::MAX_ORDER {
            return bad("n_max exceeds the graph6 limit of 62");
        }
        if self.count > 0 && self.edge_probs.is_empty() {
            return bad("no edge probabilities given");
        }
        if self.edge_probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return bad("edge probabilities must lie in [0, 1]");
        }
        if let SigmaPolicy::Bernoulli(q) = self.sigma_policy {
            if !(0.0..=1.0).contains(&q) {
                return bad("loop probability must lie in [0, 1]");
            }
        }
        if let Some(k) = self.exhaustive {
            if k > EXHAUSTIVE_MAX {
                return Err(ShellError::Budget {
                    requested: k,
                    max: EXHAUSTIVE_MAX,
                });
            }
        }
        Ok(())
    }
}

fn ser_ids<S: Serializer>(ids: &[BoundId], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ids.iter().map(ToString::to_string))
}

fn ser_opt_real<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&fmt_real(*v)),
        None => s.serialize_none(),
    }
}

fn ser_real<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_real(*x))
}

/// Generator for instance `index`: stream `index` of the seeded ChaCha8.
fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> LoopSet {
    LoopSet::from_indices(sample(rng, n, k.min(n))).expect("sampled indices are distinct")
}

/// Erdős–Rényi `G(n, p)` on `n` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("generated edges are valid")
}

/// Random instance number `index` of the campaign; depends only on the seed
/// and the index.
pub fn random_instance(config: &CampaignConfig, index: u64) -> LoopedGraph {
    let mut rng = rng_for(config.seed, index);
    let n = rng.random_range(config.n_min..=config.n_max);
    let p = config.edge_probs[index as usize % config.edge_probs.len()];
    let g = random_graph(&mut rng, n, p);
    let loops = match config.sigma_policy {
        SigmaPolicy::Uniform => {
            let k = rng.random_range(0..=n);
            random_subset(&mut rng, n, k)
        }
        SigmaPolicy::Bernoulli(q) => {
            LoopSet::from_indices((0..n).filter(|_| rng.random_bool(q))).expect("distinct")
        }
        SigmaPolicy::Fixed(k) => random_subset(&mut rng, n, k),
    };
    LoopedGraph::new(g, loops).expect("loops are in range")
}

pub fn gen_random(config: &CampaignConfig) -> impl Iterator<Item = LoopedGraph> + '_ {
    (0..config.count as u64).map(move |i| random_instance(config, i))
}

/// Every labeled graph of order `n` (by edge mask), each with every loop
/// subset: `2^(n choose 2) · 2^n` instances.
pub fn exhaustive_order(n: usize) -> impl Iterator<Item = LoopedGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).flat_map(move |mask| {
        let g = SimpleGraph::from_edge_mask(n, mask);
        (0..1u64 << n).map(move |loops| {
            LoopedGraph::new(g.clone(), LoopSet::from_mask(loops)).expect("mask fits the order")
        })
    })
}

/// Every labeled graph of order `n` with `samples` loop subsets each, drawn
/// from the seeded generator (one stream per edge mask).
pub fn exhaustive_order_sampled(n: usize, seed: u64, samples: usize) -> impl Iterator<Item = LoopedGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).flat_map(move |mask| {
        let g = SimpleGraph::from_edge_mask(n, mask);
        let mut rng = rng_for(seed ^ (n as u64).rotate_left(56), mask);
        (0..samples).map(move |_| {
            let loops = LoopSet::from_mask(rng.random_range(0..1u64 << n));
            LoopedGraph::new(g.clone(), loops).expect("mask fits the order")
        })
    })
}

/// Orders `1..=n_max`: all loop subsets up to [`ALL_LOOPS_MAX`], sampled
/// subsets above it.
pub fn gen_exhaustive(
    n_max: usize,
    seed: u64,
    samples: usize,
) -> Result<Box<dyn Iterator<Item = LoopedGraph>>> {
    if n_max > EXHAUSTIVE_MAX {
        return Err(ShellError::Budget {
            requested: n_max,
            max: EXHAUSTIVE_MAX,
        });
    }
    let full = (1..=n_max.min(ALL_LOOPS_MAX)).flat_map(exhaustive_order);
    let sampled = (ALL_LOOPS_MAX + 1..=n_max).flat_map(move |n| exhaustive_order_sampled(n, seed, samples));
    Ok(Box::new(full.chain(sampled)))
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BoundTally {
    pub holds: usize,
    pub equality: usize,
    pub near_tie: usize,
    pub violated: usize,
    pub skipped: usize,
    #[serde(serialize_with = "ser_opt_real")]
    pub min_slack: Option<f64>,
    pub min_slack_witness: Option<String>,
    pub first_equality_witness: Option<String>,
}

impl BoundTally {
    pub fn total(&self) -> usize {
        self.holds + self.equality + self.near_tie + self.violated + self.skipped
    }

    fn record(&mut self, r: &BoundReport, line: &str) {
        match r.verdict {
            Verdict::Holds => self.holds += 1,
            Verdict::Equality => self.equality += 1,
            Verdict::NearTie => self.near_tie += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::Skipped => self.skipped += 1,
        }
        if r.verdict == Verdict::Equality && self.first_equality_witness.is_none() {
            self.first_equality_witness = Some(line.to_string());
        }
        if let Some(s) = r.slack() {
            if self.min_slack.is_none_or(|m| s < m) {
                self.min_slack = Some(s);
                self.min_slack_witness = Some(line.to_string());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub bound: String,
    pub loopline: String,
    #[serde(serialize_with = "ser_real")]
    pub slack: f64,
}

/// How many instances passed each hard gate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HardGates {
    pub trace_identities: usize,
    pub linegraph_min_eig: usize,
    pub shift_interlacing: usize,
    pub incidence_identities: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub version: u32,
    pub config: CampaignConfig,
    pub instances: usize,
    pub evaluations: usize,
    /// SHA-256 over the canonical LoopLines of the corpus, one per line.
    pub corpus_hash: String,
    pub hard_gates: HardGates,
    pub tallies: ById<BoundTally>,
    pub near_ties: Vec<Witness>,
    pub violations: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
}

impl CampaignReport {
    pub fn tally(&self, id: BoundId) -> Option<&BoundTally> {
        self.tallies.0.iter().find(|(i, _)| *i == id).map(|(_, t)| t)
    }

    pub fn total_violations(&self) -> usize {
        self.tallies.0.iter().map(|(_, t)| t.violated).sum()
    }

    pub fn total_near_ties(&self) -> usize {
        self.tallies.0.iter().map(|(_, t)| t.near_tie).sum()
    }
}

struct Outcome {
    line: String,
    reports: Vec<BoundReport>,
}

fn gate(gate: &'static str, line: &str, detail: impl Into<String>) -> ShellError {
    ShellError::HardGate {
        gate,
        witness: line.to_string(),
        detail: detail.into(),
    }
}

/// `BᵀB = A(L(G_S)) + 2 I_m` and `BBᵀ = Q(G_S)`.
pub fn incidence_identities_hold(gs: &LoopedGraph) -> Result<bool> {
    let b = incidence(gs);
    if b.gram_rows() != signless_laplacian(gs) {
        return Ok(false);
    }
    if gs.size() + gs.sigma() == 0 {
        return Ok(true);
    }
    let line = line_graph(gs)?;
    let a = adjacency(&line.graph);
    let m = line.edge_vertices;
    let shifted = SymMatrix::from_fn(a.order(), |i, j| {
        a.get(i, j) + if i == j && i < m { 2 } else { 0 }
    });
    Ok(b.gram_cols() == shifted)
}

fn evaluate_instance(gs: &LoopedGraph, bounds: &[BoundId], tol: f64) -> Result<Outcome> {
    let line = print_loopline(gs)?;
    let inst = Instance::new(gs);

    trace_identities_of(gs, inst.looped()?).map_err(|e| gate("trace_identities", &line, e.to_string()))?;

    if gs.size() + gs.sigma() > 0 {
        let r = inst.evaluate(BoundId::B14, tol)?;
        if r.verdict == Verdict::Violated {
            return Err(gate("linegraph_min_eig", &line, format!("{:?}", r.evaluation)));
        }
    }

    let shift = shift_interlacing_of(inst.plain()?, inst.looped()?);
    let exact_end = (gs.sigma() == 0 && shift.left_gap > SPECTRAL_TOL)
        || (gs.sigma() == gs.order() && shift.right_gap > SPECTRAL_TOL);
    if !shift.left.holds || !shift.right.holds || exact_end {
        return Err(gate("shift_interlacing", &line, format!("{shift:?}")));
    }

    if !incidence_identities_hold(gs)? {
        return Err(gate("incidence_identities", &line, "Gram identities differ"));
    }

    let reports = bounds
        .iter()
        .map(|&id| inst.evaluate(id, tol))
        .collect::<selfloop_core::Result<_>>()?;
    Ok(Outcome { line, reports })
}

/// Runs the configured corpus through the hard gates and the selected
/// bounds. Any hard-gate failure aborts the run with the offending instance.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let start = Instant::now();
    let exhaustive: Box<dyn Iterator<Item = LoopedGraph>> = match config.exhaustive {
        Some(k) => gen_exhaustive(k, config.seed, config.loop_samples)?,
        None => Box::new(std::iter::empty()),
    };
    let mut corpus = exhaustive.chain(gen_random(config));

    let mut hasher = Sha256::new();
    let mut tallies: Vec<(BoundId, BoundTally)> = config
        .bounds
        .iter()
        .map(|&id| (id, BoundTally::default()))
        .collect();
    let mut near_ties = Vec::new();
    let mut violations = Vec::new();
    let mut instances = 0;
    loop {
        let batch: Vec<LoopedGraph> = corpus.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<Result<Outcome>> = batch
            .par_iter()
            .map(|gs| evaluate_instance(gs, &config.bounds, config.tol))
            .collect();
        for outcome in outcomes {
            let outcome = outcome?;
            instances += 1;
            hasher.update(outcome.line.as_bytes());
            hasher.update(b"\n");
            for (r, (_, tally)) in outcome.reports.iter().zip(tallies.iter_mut()) {
                tally.record(r, &outcome.line);
                let witness = || Witness {
                    bound: r.id.to_string(),
                    loopline: outcome.line.clone(),
                    slack: r.slack().unwrap_or(f64::NAN),
                };
                match r.verdict {
                    Verdict::NearTie if near_ties.len() < WITNESS_CAP => near_ties.push(witness()),
                    Verdict::Violated if violations.len() < WITNESS_CAP => violations.push(witness()),
                    _ => {}
                }
            }
        }
    }
    let hash: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    let gates = HardGates {
        trace_identities: instances,
        linegraph_min_eig: instances,
        shift_interlacing: instances,
        incidence_identities: instances,
    };
    Ok(CampaignReport {
        version: SCHEMA_VERSION,
        config: config.clone(),
        instances,
        evaluations: instances * config.bounds.len(),
        corpus_hash: hash,
        hard_gates: gates,
        tallies: ById(tallies),
        near_ties,
        violations,
        runtime_seconds: config.timing.then(|| start.elapsed().as_secs_f64()),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub n_max: usize,
    pub cases: usize,
    /// Largest multiset distance between the computed and predicted
    /// auxiliary spectra.
    #[serde(serialize_with = "ser_real")]
    pub max_spectrum_error: f64,
    /// Largest `|Σ|eig| − L|`.
    #[serde(serialize_with = "ser_real")]
    pub max_lower_error: f64,
    /// Both simplified lower endpoints agree exactly with the general one.
    pub simplified_forms_exact: bool,
}

/// Replays the quotient-matrix derivation of the energy-sum lower endpoint
/// for every `2 ≤ n ≤ n_max`, `0 ≤ σ ≤ n`.
pub fn oracle_ng_aux(n_max: usize) -> Result<OracleReport> {
    if n_max < 2 {
        return Err(ShellError::Config("oracle needs n_max >= 2".into()));
    }
    let cases: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (0..=n).map(move |s| (n, s))).collect();
    let results: Vec<Result<(f64, f64)>> = cases
        .par_iter()
        .map(|&(n, sigma)| {
            let mismatch = |detail: String| ShellError::Oracle { n, sigma, detail };
            let eig = ng_aux_spectrum(n, sigma)?;
            let closed = ng_aux_closed_spectrum(n, sigma)?;
            let spec_err = eig.multiset_distance(&closed);
            if spec_err > SPECTRAL_TOL {
                return Err(mismatch(format!("spectrum differs by {spec_err:e}")));
            }
            let exact = NgExact::new(n, sigma)?;
            let abs_sum: f64 = eig.values().iter().map(|x| x.abs()).sum();
            let lower_err = (abs_sum - exact.lower().to_f64()).abs();
            if lower_err > SPECTRAL_TOL {
                return Err(mismatch(format!(
                    "absolute eigenvalue sum differs by {lower_err:e}"
                )));
            }
            if exact.lower() != exact.lower_simplified() {
                return Err(mismatch("simplified lower endpoint differs".into()));
            }
            Ok((spec_err, lower_err))
        })
        .collect();
    let mut report = OracleReport {
        n_max,
        cases: cases.len(),
        max_spectrum_error: 0.0,
        max_lower_error: 0.0,
        simplified_forms_exact: true,
    };
    for r in results {
        let (a, b) = r?;
        report.max_spectrum_error = report.max_spectrum_error.max(a);
        report.max_lower_error = report.max_lower_error.max(b);
    }
    Ok(report)
}

/// Largest multiset distance between the numeric and closed-form spectra of
/// `K_n` with `σ` loops over `n ≤ n_max`.
pub fn oracle_kn_sigma(n_max: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for n in 1..=n_max {
        for sigma in 0..=n {
            let gs = LoopedGraph::new(SimpleGraph::complete(n), LoopSet::first(sigma))?;
            let numeric = spectrum(&adjacency(&gs))?;
            let d = numeric.multiset_distance(&closed_form_kn_sigma_spectrum(n, sigma)?);
            if d > SPECTRAL_TOL {
                return Err(ShellError::Oracle {
                    n,
                    sigma,
                    detail: format!("closed-form spectrum differs by {d:e}"),
                });
            }
            worst = worst.max(d);
        }
    }
    Ok(worst)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdentitySummary {
    pub checked: usize,
    /// Canonical LoopLines of graphs where the identity failed.
    pub failures: Vec<String>,
}

fn check_identities(graphs: Vec<SimpleGraph>) -> Result<IdentitySummary> {
    let results: Vec<Result<(String, bool)>> = graphs
        .par_iter()
        .map(|g| {
            let line = print_loopline(&LoopedGraph::loopless(g.clone()))?;
            Ok((line, verify_linegraph_identity(g)?.equal))
        })
        .collect();
    let mut summary = IdentitySummary::default();
    for r in results {
        let (line, equal) = r?;
        summary.checked += 1;
        if !equal {
            summary.failures.push(line);
        }
    }
    Ok(summary)
}

/// The line-graph characteristic polynomial identity on every connected
/// labeled graph with `2 ≤ n ≤ n_max`.
pub fn linegraph_identity_exhaustive(n_max: usize) -> Result<IdentitySummary> {
    if n_max > EXHAUSTIVE_MAX {
        return Err(ShellError::Budget {
            requested: n_max,
            max: EXHAUSTIVE_MAX,
        });
    }
    let graphs = (2..=n_max)
        .flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (0..1u64 << pairs).map(move |mask| SimpleGraph::from_edge_mask(n, mask))
        })
        .filter(SimpleGraph::is_connected)
        .collect();
    check_identities(graphs)
}

/// The same identity on `count` seeded random graphs with `2 ≤ n ≤ n_max`
/// and at least one edge.
pub fn linegraph_identity_random(seed: u64, count: usize, n_max: usize) -> Result<IdentitySummary> {
    if n_max < 2 {
        return Err(ShellError::Config("need n_max >= 2".into()));
    }
    let probs = [0.2, 0.5, 0.8];
    let mut graphs = Vec::with_capacity(count);
    let mut index = 0u64;
    while graphs.len() < count {
        let mut rng = rng_for(seed, index);
        let n = rng.random_range(2..=n_max);
        let g = random_graph(&mut rng, n, probs[index as usize % probs.len()]);
        index += 1;
        if g.size() > 0 {
            graphs.push(g);
        }
    }
    check_identities(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive_order(3).count(), 64);
        assert_eq!(exhaustive_order(1).count(), 2);
        assert_eq!(gen_exhaustive(1, 0, 1).unwrap().count(), 2);
        assert_eq!(gen_exhaustive(3, 0, 1).unwrap().count(), 2 + 8 + 64);
        assert!(matches!(gen_exhaustive(8, 0, 1), Err(ShellError::Budget { .. })));
        assert_eq!(exhaustive_order_sampled(6, 1, 2).count(), 2 * (1 << 15));
    }

    #[test]
    fn random_is_deterministic() {
        let config = CampaignConfig {
            seed: 1,
            n_min: 5,
            n_max: 5,
            edge_probs: vec![0.5],
            count: 3,
            ..CampaignConfig::default()
        };
        let a: Vec<_> = gen_random(&config).collect();
        let b: Vec<_> = gen_random(&config).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert!(a.iter().all(|g| g.order() == 5));
    }

    #[test]
    fn extreme_probabilities() {
        let complete = CampaignConfig {
            edge_probs: vec![1.0],
            count: 20,
            ..CampaignConfig::default()
        };
        assert!(gen_random(&complete).all(|g| g.size() == g.order() * (g.order() - 1) / 2));
        let edgeless = CampaignConfig {
            edge_probs: vec![0.0],
            sigma_policy: SigmaPolicy::Fixed(64),
            count: 20,
            ..CampaignConfig::default()
        };
        assert!(gen_random(&edgeless).all(|g| g.size() == 0 && g.sigma() == g.order()));
    }

    #[test]
    fn small_campaign() {
        let config = CampaignConfig {
            exhaustive: Some(3),
            count: 50,
            ..CampaignConfig::default()
        };
        let a = run_campaign(&config).unwrap();
        assert_eq!(a.instances, 74 + 50);
        assert_eq!(a.total_violations(), 0);
        for (_, t) in &a.tallies.0 {
            assert_eq!(t.total(), a.instances);
        }
        let b = run_campaign(&config).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );

        let only = CampaignConfig {
            bounds: vec![BoundId::B17],
            ..config
        };
        let r = run_campaign(&only).unwrap();
        assert_eq!(r.tallies.0.len(), 1);
        assert_eq!(r.corpus_hash, a.corpus_hash);
    }

    #[test]
    fn oracle_small() {
        let r = oracle_ng_aux(8).unwrap();
        assert_eq!(r.cases, (2..=8).map(|n| n + 1).sum::<usize>());
        assert!(r.simplified_forms_exact);
        assert!(oracle_kn_sigma(6).unwrap() < 1e-9);
    }

    #[test]
    fn identity_campaigns() {
        let s = linegraph_identity_exhaustive(4).unwrap();
        assert!(s.failures.is_empty() && s.checked > 0);
        let s = linegraph_identity_random(7, 20, 6).unwrap();
        assert_eq!((s.checked, s.failures.len()), (20, 0));
    }

    #[test]
    fn validation() {
        let bad = CampaignConfig {
            exhaustive: Some(8),
            ..CampaignConfig::default()
        };
        assert!(matches!(run_campaign(&bad), Err(ShellError::Budget { .. })));
        let bad = CampaignConfig {
            edge_probs: vec![1.5],
            ..CampaignConfig::default()
        };
        assert!(matches!(run_campaign(&bad), Err(ShellError::Config(_))));
    }
}
