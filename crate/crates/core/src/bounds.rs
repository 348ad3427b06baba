//! The catalog of eigenvalue and energy inequalities for self-loop graphs.
//!
//! Each bound is evaluated behind its hypotheses: an unmet hypothesis gives
//! [`Verdict::Skipped`], never a violation. Slack is oriented so that a
//! non-negative value means the inequality holds.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;
use core::str::FromStr;

use libm::sqrt;
use num_traits::ToPrimitive;

use crate::construct::{adjacency, complement, line_graph};
use crate::graph::{Family, LoopedGraph};
use crate::invariants::{degree_deviation, energy_center, energy_of, ng_energy_closed_forms, zagreb};
use crate::numerics::{spectrum, Spectrum};
use crate::{Error, Result, SLACK_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    B9,
    B10,
    B11,
    B12,
    B13,
    B14,
    B15,
    B16,
    B17,
    B18,
}

/// Shape of the inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `lhs ≥ rhs`.
    Lower,
    /// `lhs ≤ rhs`.
    Upper,
    /// `lower ≤ lhs ≤ upper`.
    Sandwich,
    /// `lhs < rhs`.
    Strict,
}

impl BoundId {
    pub const ALL: [BoundId; 18] = {
        use BoundId::*;
        [
            B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12, B13, B14, B15, B16, B17, B18,
        ]
    };

    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn name(self) -> &'static str {
        use BoundId::*;
        match self {
            B1 => "radius_stanley",
            B2 => "radius_degree_lower",
            B3 => "radius_moment_upper",
            B4 => "radius_zagreb_lower",
            B5 => "ng_radius_sandwich",
            B6 => "ng_radius_deltadelta",
            B7 => "energy_vs_radius",
            B8 => "energy_size_lower",
            B9 => "energy_noclique",
            B10 => "energy_multipartite",
            B11 => "energy_delete_independent",
            B12 => "energy_delete_clique",
            B13 => "linegraph_energy",
            B14 => "linegraph_min_eig",
            B15 => "ng_pair_upper",
            B16 => "ng_pair_lower",
            B17 => "ng_energy_sandwich",
            B18 => "shift_interlacing",
        }
    }

    pub fn kind(self) -> BoundKind {
        use BoundId::*;
        match self {
            B1 | B3 | B6 | B15 => BoundKind::Upper,
            B5 | B17 | B18 => BoundKind::Sandwich,
            B11 | B12 | B13 => BoundKind::Strict,
            _ => BoundKind::Lower,
        }
    }

    pub fn is_strict(self) -> bool {
        self.kind() == BoundKind::Strict
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.index())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    /// Accepts `B7`, `b7`, `7` or the bound's name.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t.strip_prefix(['B', 'b']).unwrap_or(t);
        if let Ok(k) = digits.parse::<usize>() {
            if (1..=18).contains(&k) {
                return Ok(BoundId::ALL[k - 1]);
            }
        }
        BoundId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownBound(t.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    /// `|slack| ≤ tol` on a non-strict bound.
    Equality,
    /// `|slack| ≤ tol` on a strict bound; cannot be certified either way.
    NearTie,
    /// `slack < −tol`.
    Violated,
    /// A hypothesis is not met.
    Skipped,
}

impl Verdict {
    pub const ALL: [Verdict; 5] = [
        Verdict::Holds,
        Verdict::Equality,
        Verdict::NearTie,
        Verdict::Violated,
        Verdict::Skipped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::NearTie => "near_tie",
            Verdict::Violated => "violated",
            Verdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub satisfied: bool,
}

/// Which side of a sandwich, and which index of an indexed family, gave the
/// reported slack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Locus {
    pub side: Option<Side>,
    pub index: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// The tightest comparison of a bound on one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub locus: Locus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub id: BoundId,
    pub digest: u64,
    pub hypotheses: Vec<Hypothesis>,
    /// `None` when skipped.
    pub evaluation: Option<Evaluation>,
    pub verdict: Verdict,
    /// For bounds with a structural equality characterization: whether the
    /// instance belongs to it.
    pub structural_equality: Option<bool>,
}

impl BoundReport {
    pub fn slack(&self) -> Option<f64> {
        self.evaluation.map(|e| e.slack)
    }
}

/// Spectra shared by all bounds evaluated on one instance, computed lazily.
pub struct Instance<'a> {
    gs: &'a LoopedGraph,
    looped: OnceCell<Result<Spectrum>>,
    plain: OnceCell<Result<Spectrum>>,
    comp: OnceCell<Result<Spectrum>>,
    line_looped: OnceCell<Result<Spectrum>>,
    line_plain: OnceCell<Result<Spectrum>>,
    deleted: OnceCell<Result<Spectrum>>,
}

fn cached(cell: &OnceCell<Result<Spectrum>>, f: impl FnOnce() -> Result<Spectrum>) -> Result<&Spectrum> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

impl<'a> Instance<'a> {
    pub fn new(gs: &'a LoopedGraph) -> Self {
        Instance {
            gs,
            looped: OnceCell::new(),
            plain: OnceCell::new(),
            comp: OnceCell::new(),
            line_looped: OnceCell::new(),
            line_plain: OnceCell::new(),
            deleted: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &LoopedGraph {
        self.gs
    }

    /// Spectrum of `G_S`.
    pub fn looped(&self) -> Result<&Spectrum> {
        cached(&self.looped, || spectrum(&adjacency(self.gs)))
    }

    /// Spectrum of `G`.
    pub fn plain(&self) -> Result<&Spectrum> {
        cached(&self.plain, || {
            spectrum(&adjacency(&LoopedGraph::loopless(self.gs.base().clone())))
        })
    }

    /// Spectrum of the complement of `G_S`, same loop set.
    pub fn complement(&self) -> Result<&Spectrum> {
        cached(&self.comp, || spectrum(&adjacency(&complement(self.gs))))
    }

    /// Spectrum of `L(G_S)`.
    pub fn line_looped(&self) -> Result<&Spectrum> {
        cached(&self.line_looped, || {
            spectrum(&adjacency(&line_graph(self.gs)?.graph))
        })
    }

    /// Spectrum of `L(G)`.
    pub fn line_plain(&self) -> Result<&Spectrum> {
        cached(&self.line_plain, || {
            let plain = LoopedGraph::loopless(self.gs.base().clone());
            spectrum(&adjacency(&line_graph(&plain)?.graph))
        })
    }

    /// Spectrum of `G ∖ S`.
    pub fn deleted(&self) -> Result<&Spectrum> {
        cached(&self.deleted, || {
            let rest = self.gs.base().delete_vertices(self.gs.loops())?;
            spectrum(&adjacency(&LoopedGraph::loopless(rest)))
        })
    }

    fn n(&self) -> usize {
        self.gs.order()
    }

    fn m(&self) -> usize {
        self.gs.size()
    }

    fn sigma(&self) -> usize {
        self.gs.sigma()
    }

    fn center(&self) -> f64 {
        self.sigma() as f64 / self.n() as f64
    }

    fn energy(&self) -> Result<f64> {
        Ok(energy_of(self.looped()?, energy_center(self.gs)))
    }

    fn complement_energy(&self) -> Result<f64> {
        Ok(energy_of(self.complement()?, energy_center(self.gs)))
    }

    fn hypotheses(&self, id: BoundId) -> Vec<Hypothesis> {
        use BoundId::*;
        let (n, m, s) = (self.n(), self.m(), self.sigma());
        let g = self.gs.base();
        let loops = self.gs.loops();
        let h = |name, satisfied| Hypothesis { name, satisfied };
        let b9 = n >= 4 && s >= 1 && 2 * s <= n && !g.is_clique(loops);
        match id {
            B1 | B6 | B18 => Vec::new(),
            B2 | B4 => alloc::vec![h("connected", g.is_connected())],
            B3 | B17 => alloc::vec![h("n >= 2", n >= 2), h("m >= 1", m >= 1)],
            B5 => alloc::vec![
                h("n >= 2", n >= 2),
                h("connected", g.is_connected()),
                h("complement connected", g.complement().is_connected()),
            ],
            B7 | B15 | B16 => alloc::vec![h("n >= 2", n >= 2)],
            B8 => alloc::vec![h("n >= 2", n >= 2), h("connected", g.is_connected())],
            B9 => alloc::vec![
                h("n >= 4", n >= 4),
                h("1 <= sigma <= n/2", s >= 1 && 2 * s <= n),
                h("S not a clique", !g.is_clique(loops)),
            ],
            B10 => {
                let multipartite = g.complete_multipartite_parts().is_some();
                let regular = g.regular_complete_multipartite().is_some();
                alloc::vec![
                    h("complete multipartite", multipartite),
                    h(
                        "regular, or n >= 4 with 1 <= sigma <= n/2 and S not a clique",
                        regular || b9
                    ),
                ]
            }
            B11 => alloc::vec![
                h("n >= 2", n >= 2),
                h("1 <= sigma <= n-1", s >= 1 && s < n),
                h("S independent", g.is_independent_set(loops)),
            ],
            B12 => alloc::vec![
                h("n >= 2", n >= 2),
                h("1 <= sigma <= n-1", s >= 1 && s < n),
                h("S a clique", g.is_clique(loops)),
            ],
            B13 => alloc::vec![h("n >= 2", n >= 2), h("sigma >= 1", s >= 1), h("m >= 1", m >= 1)],
            B14 => alloc::vec![h("m + sigma >= 1", m + s >= 1)],
        }
    }

    fn structural_equality(&self, id: BoundId) -> Option<bool> {
        let g = self.gs.base();
        let (n, m, s) = (self.n(), self.m(), self.sigma());
        match id {
            BoundId::B2 => Some(g.is_connected() && self.gs.classify_bidegreed().s_aligned.is_some()),
            BoundId::B4 => {
                let hat_kn = s == n && m == n * (n - 1) / 2;
                let edgeless_full = s == n && m == 0;
                let semiregular = self.gs.classify_bidegreed().semiregular_aligned();
                Some(hat_kn || edgeless_full || semiregular)
            }
            BoundId::B7 => Some(m == n * (n - 1) / 2),
            _ => None,
        }
    }

    /// Every comparison the bound makes on this instance.
    fn checks(&self, id: BoundId) -> Result<Vec<Evaluation>> {
        use BoundId::*;
        let (n, m, s) = (self.n(), self.m(), self.sigma());
        let (nf, mf, sf) = (n as f64, m as f64, s as f64);
        let one = |c: Evaluation| Ok(alloc::vec![c]);
        match id {
            B1 => one(upper(
                self.looped()?.largest(),
                (1.0 + sqrt(1.0 + 8.0 * mf)) / 2.0,
            )),
            B2 => one(lower(self.looped()?.largest(), (2.0 * mf + sf) / nf)),
            B3 => {
                let inner = sf * (nf - 1.0) * (nf - sf) / (nf * nf) + 2.0 * mf * (nf - 1.0) / nf;
                one(upper(self.looped()?.largest(), sf / nf + sqrt(inner)))
            }
            B4 => {
                let m1 = zagreb(self.gs).m1_g as f64;
                let delta = self.gs.base().min_degree() as f64;
                one(lower(
                    self.looped()?.largest(),
                    sqrt(m1 / nf + sf * (2.0 * delta + 1.0) / nf),
                ))
            }
            B5 => {
                let total = self.looped()?.largest() + self.complement()?.largest();
                let (lo, hi) = ng_radius_endpoints(n, s);
                Ok(sandwich(total, lo, hi, None))
            }
            B6 => {
                let total = self.looped()?.largest() + self.complement()?.largest();
                let g = self.gs.base();
                let spread = (g.max_degree() - g.min_degree()) as f64;
                one(upper(total, nf + 1.0 + spread))
            }
            B7 => one(lower(
                self.energy()?,
                2.0 * self.looped()?.largest() - 2.0 * self.center(),
            )),
            B8 => one(lower(self.energy()?, 4.0 * mf / nf)),
            B9 => one(lower(self.energy()?, 2.0 * self.looped()?.largest())),
            B10 => one(lower(self.energy()?, energy_of(self.plain()?, 0.into()))),
            B11 | B12 => one(upper(energy_of(self.deleted()?, 0.into()), self.energy()?)),
            B13 => {
                let line = line_graph(self.gs)?;
                let center = energy_center(&line.graph);
                one(upper(
                    energy_of(self.line_plain()?, 0.into()),
                    energy_of(self.line_looped()?, center),
                ))
            }
            B14 => one(lower(self.line_looped()?.smallest(), -2.0)),
            B15 | B16 => {
                let (a, b) = (self.looped()?, self.complement()?);
                let bound = if id == B15 {
                    if s == 0 {
                        -1.0
                    } else {
                        1.0
                    }
                } else {
                    let dev = degree_deviation(self.gs.base()).to_f64().unwrap_or(f64::NAN);
                    -1.0 - 2.0 * sqrt(2.0 * dev)
                };
                Ok((2..=n)
                    .map(|j| {
                        let pair = a.lambda(j) + b.lambda(n - j + 2);
                        let c = if id == B15 {
                            upper(pair, bound)
                        } else {
                            lower(pair, bound)
                        };
                        at_index(c, j)
                    })
                    .collect())
            }
            B17 => {
                let forms = ng_energy_closed_forms(n, s)?;
                let total = self.energy()? + self.complement_energy()?;
                Ok(sandwich(total, forms.lower, forms.upper, None))
            }
            B18 => {
                let (plain, looped) = (self.plain()?, self.looped()?);
                Ok((1..=n)
                    .flat_map(|i| {
                        let (p, l) = (plain.lambda(i), looped.lambda(i));
                        sandwich(l, p, p + 1.0, Some(i))
                    })
                    .collect())
            }
        }
    }

    pub fn evaluate(&self, id: BoundId, tol: f64) -> Result<BoundReport> {
        let hypotheses = self.hypotheses(id);
        let structural_equality = self.structural_equality(id);
        if !hypotheses.iter().all(|h| h.satisfied) {
            return Ok(BoundReport {
                id,
                digest: self.gs.digest(),
                hypotheses,
                evaluation: None,
                verdict: Verdict::Skipped,
                structural_equality,
            });
        }
        self.evaluate_ungated(id, tol, hypotheses, structural_equality)
    }

    fn evaluate_ungated(
        &self,
        id: BoundId,
        tol: f64,
        hypotheses: Vec<Hypothesis>,
        structural_equality: Option<bool>,
    ) -> Result<BoundReport> {
        let tightest = self
            .checks(id)?
            .into_iter()
            .reduce(|best, c| if c.slack < best.slack { c } else { best });
        let verdict = match tightest {
            None => Verdict::Skipped,
            Some(e) if e.slack < -tol => Verdict::Violated,
            Some(e) if e.slack <= tol => {
                if id.is_strict() {
                    Verdict::NearTie
                } else {
                    Verdict::Equality
                }
            }
            Some(_) => Verdict::Holds,
        };
        Ok(BoundReport {
            id,
            digest: self.gs.digest(),
            hypotheses,
            evaluation: tightest,
            verdict,
            structural_equality,
        })
    }
}

fn upper(lhs: f64, rhs: f64) -> Evaluation {
    Evaluation {
        lhs,
        rhs,
        slack: rhs - lhs,
        locus: Locus::default(),
    }
}

fn lower(lhs: f64, rhs: f64) -> Evaluation {
    Evaluation {
        lhs,
        rhs,
        slack: lhs - rhs,
        locus: Locus::default(),
    }
}

fn at_index(mut e: Evaluation, index: usize) -> Evaluation {
    e.locus.index = Some(index);
    e
}

fn sandwich(value: f64, lo: f64, hi: f64, index: Option<usize>) -> Vec<Evaluation> {
    let mut l = lower(value, lo);
    l.locus = Locus {
        side: Some(Side::Lower),
        index,
    };
    let mut u = upper(value, hi);
    u.locus = Locus {
        side: Some(Side::Upper),
        index,
    };
    alloc::vec![l, u]
}

/// Endpoints of `λ₁(G_S) + λ₁(complement)`.
pub fn ng_radius_endpoints(n: usize, sigma: usize) -> (f64, f64) {
    let (nf, s) = (n as f64, sigma as f64);
    let lo = nf - 1.0 + 2.0 * s / nf;
    let hi = 2.0 * s / nf
        + sqrt(2.0) * sqrt(2.0 * s * (nf - 1.0) * (nf - s) / (nf * nf) + (nf - 1.0) * (nf - 1.0));
    (lo, hi)
}

/// The `σ = 0` form of [`BoundId::B3`]: `√(2m(n−1)/n)`.
pub fn loopless_moment_upper(n: usize, m: usize) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    sqrt(2.0 * mf * (nf - 1.0) / nf)
}

/// The `σ = 0` form of [`ng_radius_endpoints`]: `(n − 1, √2 (n − 1))`.
pub fn loopless_ng_radius_endpoints(n: usize) -> (f64, f64) {
    let nf = n as f64;
    (nf - 1.0, sqrt(2.0) * (nf - 1.0))
}

pub fn evaluate_bound(id: BoundId, gs: &LoopedGraph) -> Result<BoundReport> {
    evaluate_bound_with_tol(id, gs, SLACK_TOL)
}

pub fn evaluate_bound_with_tol(id: BoundId, gs: &LoopedGraph, tol: f64) -> Result<BoundReport> {
    if gs.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Instance::new(gs).evaluate(id, tol)
}

/// Every catalog entry, in id order.
pub fn evaluate_all(gs: &LoopedGraph) -> Result<Vec<BoundReport>> {
    evaluate_many(gs, &BoundId::ALL, SLACK_TOL)
}

pub fn evaluate_many(gs: &LoopedGraph, ids: &[BoundId], tol: f64) -> Result<Vec<BoundReport>> {
    if gs.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let inst = Instance::new(gs);
    ids.iter().map(|&id| inst.evaluate(id, tol)).collect()
}

/// Families for which a bound is attained with equality.
pub fn equality_families(id: BoundId) -> &'static [&'static str] {
    match id {
        BoundId::B2 => &["k32_s", "kn_hat", "edgeless_full_loop"],
        BoundId::B4 => &["kn_hat", "k32_s", "edgeless_full_loop"],
        BoundId::B7 => &["kn_sigma", "kn_hat"],
        _ => &[],
    }
}

/// Builds `family` and evaluates `id` on it without the hypothesis gate (the
/// edgeless full-loop graph is disconnected, yet attains the bound). The
/// verdict is [`Verdict::Equality`] when the certificate succeeds.
pub fn certify_equality_family(id: BoundId, family: &Family) -> Result<BoundReport> {
    if !equality_families(id).contains(&family.id()) {
        return Err(Error::FamilyMismatch {
            bound: id.to_string(),
            family: family.id().to_string(),
        });
    }
    let gs = family.build()?;
    let inst = Instance::new(&gs);
    let hypotheses = inst.hypotheses(id);
    let structural = inst.structural_equality(id);
    inst.evaluate_ungated(id, SLACK_TOL, hypotheses, structural)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{LoopSet, SimpleGraph};

    fn looped(g: SimpleGraph, s: &[usize]) -> LoopedGraph {
        LoopedGraph::new(g, LoopSet::from_indices(s.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in BoundId::ALL {
            assert_eq!(id.to_string().parse::<BoundId>().unwrap(), id);
            assert_eq!(id.name().parse::<BoundId>().unwrap(), id);
        }
        assert_eq!("b17".parse::<BoundId>().unwrap(), BoundId::B17);
        assert!(matches!("B19".parse::<BoundId>(), Err(Error::UnknownBound(_))));
    }

    #[test]
    fn b7_on_k2_with_one_loop() {
        let r = evaluate_bound(BoundId::B7, &looped(SimpleGraph::complete(2), &[0])).unwrap();
        let e = r.evaluation.unwrap();
        assert!((e.lhs - 5f64.sqrt()).abs() < 1e-12);
        assert!((e.rhs - 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);
        assert_eq!(r.structural_equality, Some(true));
    }

    #[test]
    fn b2_b4_on_k32() {
        let gs = Family::K32S.build().unwrap();
        for id in [BoundId::B2, BoundId::B4] {
            let r = evaluate_bound(id, &gs).unwrap();
            let e = r.evaluation.unwrap();
            assert!((e.lhs - 3.0).abs() < 1e-9 && (e.rhs - 3.0).abs() < 1e-9);
            assert_eq!(r.verdict, Verdict::Equality);
            assert_eq!(r.structural_equality, Some(true));
        }
    }

    #[test]
    fn b4_on_hat_k5() {
        let r = evaluate_bound(BoundId::B4, &Family::KnHat { n: 5 }.build().unwrap()).unwrap();
        let e = r.evaluation.unwrap();
        assert!((e.lhs - 5.0).abs() < 1e-9 && (e.rhs - 5.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);
    }

    #[test]
    fn b15_on_k2() {
        let r = evaluate_bound(BoundId::B15, &LoopedGraph::loopless(SimpleGraph::complete(2))).unwrap();
        let e = r.evaluation.unwrap();
        assert_eq!(e.locus.index, Some(2));
        assert!((e.lhs + 1.0).abs() < 1e-12 && e.rhs == -1.0);
        assert_eq!(r.verdict, Verdict::Equality);
    }

    #[test]
    fn evaluate_all_examples() {
        let hat = Family::KnHat { n: 2 }.build().unwrap();
        let reports = evaluate_all(&hat).unwrap();
        assert_eq!(reports.len(), 18);
        assert!(reports.iter().all(|r| r.verdict != Verdict::Violated));
        assert_eq!(
            reports.iter().map(|r| r.id).collect::<Vec<_>>(),
            BoundId::ALL.to_vec()
        );

        let k2 = LoopedGraph::loopless(SimpleGraph::complete(2));
        assert!(evaluate_all(&k2)
            .unwrap()
            .iter()
            .all(|r| r.verdict != Verdict::Violated));

        let disconnected = looped(SimpleGraph::new(4, [(0, 1), (2, 3)]).unwrap(), &[1]);
        let reports = evaluate_all(&disconnected).unwrap();
        for id in [BoundId::B2, BoundId::B4, BoundId::B5, BoundId::B8] {
            assert_eq!(reports[id.index() - 1].verdict, Verdict::Skipped, "{id}");
            assert!(reports[id.index() - 1].evaluation.is_none());
        }
    }

    #[test]
    fn certificates() {
        let r = certify_equality_family(BoundId::B7, &Family::KnSigma { n: 3, sigma: 1 }).unwrap();
        let expected = 2.0 * (1.0 + 2f64.sqrt()) - 2.0 / 3.0;
        assert!((r.evaluation.unwrap().rhs - expected).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);

        let r = certify_equality_family(BoundId::B4, &Family::EdgelessFullLoop { n: 6 }).unwrap();
        assert_eq!(r.verdict, Verdict::Equality);
        assert!((r.evaluation.unwrap().lhs - 1.0).abs() < 1e-12);

        assert_eq!(
            certify_equality_family(BoundId::B2, &Family::K32S)
                .unwrap()
                .verdict,
            Verdict::Equality
        );
        assert!(matches!(
            certify_equality_family(BoundId::B1, &Family::K32S),
            Err(Error::FamilyMismatch { .. })
        ));
    }

    #[test]
    fn strict_bounds_near_tie_channel() {
        // S independent in P3: deleting the two ends leaves K1.
        let gs = looped(SimpleGraph::path(3), &[0, 2]);
        let r = evaluate_bound(BoundId::B11, &gs).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        // A loose tolerance turns any gap into a near tie rather than equality.
        let r = evaluate_bound_with_tol(BoundId::B11, &gs, 1e6).unwrap();
        assert_eq!(r.verdict, Verdict::NearTie);
    }

    #[test]
    fn loopless_degenerations() {
        for n in 2..=8 {
            let (lo, hi) = ng_radius_endpoints(n, 0);
            assert_eq!((lo, hi), loopless_ng_radius_endpoints(n));
        }
        let gs = LoopedGraph::loopless(SimpleGraph::cycle(5).unwrap());
        let e = evaluate_bound(BoundId::B3, &gs).unwrap().evaluation.unwrap();
        assert!((e.rhs - loopless_moment_upper(5, 5)).abs() < 1e-12);
    }
}
