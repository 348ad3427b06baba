//! Energies, Zagreb indices, degree deviation, trace identities and
//! interlacing checks.

use core::cmp::Ordering;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::construct::{adjacency, ng_energy_aux_matrix};
use crate::graph::{LoopSet, LoopedGraph, SimpleGraph};
use crate::numerics::{spectrum, spectrum_f64, Spectrum};
use crate::surd::{Surd, Q};
use crate::{Error, Result, SPECTRAL_TOL};

/// `Σ |λᵢ − σ/n|` together with the spectrum it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyValue {
    pub value: f64,
    /// `σ/n`.
    pub center: Ratio<i64>,
    pub spectrum: Spectrum,
}

pub fn energy(gs: &LoopedGraph) -> Result<EnergyValue> {
    let spec = spectrum(&adjacency(gs))?;
    let center = energy_center(gs);
    Ok(EnergyValue {
        value: energy_of(&spec, center),
        center,
        spectrum: spec,
    })
}

pub fn energy_center(gs: &LoopedGraph) -> Ratio<i64> {
    Ratio::new(gs.sigma() as i64, gs.order().max(1) as i64)
}

/// Energy of a precomputed spectrum around `center`.
pub fn energy_of(spec: &Spectrum, center: Ratio<i64>) -> f64 {
    let c = center.to_f64().unwrap_or(0.0);
    spec.values().iter().map(|&l| (l - c).abs()).sum()
}

/// `(Σλ, Σλ²)` against the expected `(σ, 2m + σ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceIdentities {
    pub sum: f64,
    pub sum_sq: f64,
    pub expected_sum: usize,
    pub expected_sum_sq: usize,
}

pub fn trace_identities(gs: &LoopedGraph) -> Result<TraceIdentities> {
    trace_identities_of(gs, &spectrum(&adjacency(gs))?)
}

/// Checks both identities on a spectrum already computed for `gs`.
pub fn trace_identities_of(gs: &LoopedGraph, spec: &Spectrum) -> Result<TraceIdentities> {
    let t = TraceIdentities {
        sum: spec.sum(),
        sum_sq: spec.sum_sq(),
        expected_sum: gs.sigma(),
        expected_sum_sq: 2 * gs.size() + gs.sigma(),
    };
    let tol = SPECTRAL_TOL * gs.order().max(1) as f64;
    if (t.sum - t.expected_sum as f64).abs() > tol {
        return Err(Error::NumericIntegrity {
            check: "sum of eigenvalues equals the number of loops",
            got: t.sum,
            expected: t.expected_sum as f64,
        });
    }
    if (t.sum_sq - t.expected_sum_sq as f64).abs() > tol {
        return Err(Error::NumericIntegrity {
            check: "sum of squared eigenvalues equals 2m + sigma",
            got: t.sum_sq,
            expected: t.expected_sum_sq as f64,
        });
    }
    Ok(t)
}

/// First Zagreb index of `G` and of `G_S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZagrebPair {
    pub m1_g: u64,
    pub m1_gs: u64,
}

pub fn zagreb(gs: &LoopedGraph) -> ZagrebPair {
    let sq = |d: usize| (d * d) as u64;
    ZagrebPair {
        m1_g: gs.base().degrees().into_iter().map(sq).sum(),
        m1_gs: (0..gs.order()).map(|v| sq(gs.degree(v))).sum(),
    }
}

/// `M₁(G_S) − M₁(G) − 4 Σ_{v∈S} d_G(v) − 4σ`; always zero.
pub fn zagreb_identity_gap(gs: &LoopedGraph) -> i64 {
    let z = zagreb(gs);
    let on_s: usize = gs.loops().members().iter().map(|&v| gs.base().degree(v)).sum();
    z.m1_gs as i64 - z.m1_g as i64 - 4 * on_s as i64 - 4 * gs.sigma() as i64
}

/// `s(G) = Σ |d(v) − 2m/n|`, exact.
pub fn degree_deviation(g: &SimpleGraph) -> Ratio<i64> {
    let n = g.order() as i64;
    if n == 0 {
        return Ratio::from_integer(0);
    }
    let twice_m = 2 * g.size() as i64;
    let total: i64 = g
        .degrees()
        .into_iter()
        .map(|d| (n * d as i64 - twice_m).abs())
        .sum();
    Ratio::new(total, n)
}

/// Worst slack of an interlacing chain; `holds` when no slack is below
/// `-tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interlacing {
    pub holds: bool,
    pub min_slack: f64,
}

impl Interlacing {
    fn from_slacks(slacks: impl Iterator<Item = f64>, tol: f64) -> Self {
        let min_slack = slacks.fold(f64::INFINITY, f64::min);
        Interlacing {
            holds: min_slack >= -tol,
            min_slack,
        }
    }
}

/// Cauchy interlacing `λ_{n−k+i} ≤ μᵢ ≤ λᵢ` for the subgraph induced on
/// `vertices` (`k` of them).
pub fn check_interlacing(gs: &LoopedGraph, vertices: &[usize]) -> Result<Interlacing> {
    let host = spectrum(&adjacency(gs))?;
    let sub = spectrum(&adjacency(&gs.induced(vertices)?))?;
    let (n, k) = (host.len(), sub.len());
    let slacks = (1..=k).flat_map(|i| {
        let mu = sub.lambda(i);
        [mu - host.lambda(n - k + i), host.lambda(i) - mu]
    });
    Ok(Interlacing::from_slacks(slacks, SPECTRAL_TOL))
}

/// Both chains of `λᵢ(G) ≤ λᵢ(G_S) ≤ λᵢ(G) + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftInterlacing {
    pub left: Interlacing,
    pub right: Interlacing,
    /// Largest `|λᵢ(G_S) − λᵢ(G)|`; zero when `σ = 0`.
    pub left_gap: f64,
    /// Largest `|λᵢ(G) + 1 − λᵢ(G_S)|`; zero when `σ = n`.
    pub right_gap: f64,
}

impl ShiftInterlacing {
    pub fn holds(&self) -> bool {
        self.left.holds && self.right.holds
    }
}

pub fn check_shift_interlacing(g: &SimpleGraph, s: &LoopSet) -> Result<ShiftInterlacing> {
    let gs = LoopedGraph::new(g.clone(), s.clone())?;
    let plain = spectrum(&adjacency(&LoopedGraph::loopless(g.clone())))?;
    let looped = spectrum(&adjacency(&gs))?;
    Ok(shift_interlacing_of(&plain, &looped))
}

pub fn shift_interlacing_of(plain: &Spectrum, looped: &Spectrum) -> ShiftInterlacing {
    let pairs = || plain.values().iter().zip(looped.values());
    let gap = |it: &mut dyn Iterator<Item = f64>| it.map(f64::abs).fold(0.0, f64::max);
    ShiftInterlacing {
        left: Interlacing::from_slacks(pairs().map(|(a, b)| b - a), SPECTRAL_TOL),
        right: Interlacing::from_slacks(pairs().map(|(a, b)| a + 1.0 - b), SPECTRAL_TOL),
        left_gap: gap(&mut pairs().map(|(a, b)| b - a)),
        right_gap: gap(&mut pairs().map(|(a, b)| a + 1.0 - b)),
    }
}

/// Endpoints of the energy sum `E(G_S) + E(complement)` and the two
/// non-trivial eigenvalues of the auxiliary matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NgEnergyForms {
    pub lower: f64,
    pub upper: f64,
    pub x1: f64,
    pub x2: f64,
}

pub fn ng_energy_closed_forms(n: usize, sigma: usize) -> Result<NgEnergyForms> {
    let exact = NgExact::new(n, sigma)?;
    let (nf, s) = (n as f64, sigma as f64);
    let upper =
        2.0 * libm::sqrt(2.0) * libm::sqrt(2.0 * s * (nf - 1.0) * (nf - s) + (nf * nf - nf) * (nf * nf - nf));
    Ok(NgEnergyForms {
        lower: exact.lower().to_f64(),
        upper,
        x1: exact.x1().to_f64(),
        x2: exact.x2().to_f64(),
    })
}

/// The lower endpoint and the auxiliary eigenvalues in `Q(√D)` with
/// `D = (n−2)² + 8σ`.
#[derive(Debug, Clone, Copy)]
pub struct NgExact {
    pub n: usize,
    pub sigma: usize,
}

impl NgExact {
    pub fn new(n: usize, sigma: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("energy sum bounds need n >= 2"));
        }
        if sigma > n {
            return Err(Error::Domain("sigma exceeds n"));
        }
        Ok(NgExact { n, sigma })
    }

    pub fn radicand(&self) -> i128 {
        let n = self.n as i128;
        (n - 2) * (n - 2) + 8 * self.sigma as i128
    }

    fn q(&self, x: i128) -> Q {
        Q::from_integer(x)
    }

    fn rat(&self, x: Q) -> Surd {
        Surd::rational(x, self.radicand())
    }

    /// `n − 4σ/n`.
    fn a(&self) -> Q {
        let (n, s) = (self.n as i128, self.sigma as i128);
        Q::new(n * n - 4 * s, n)
    }

    pub fn x1(&self) -> Surd {
        (self.rat(self.a()) + Surd::root(self.radicand())).scale(Q::new(1, 2))
    }

    pub fn x2(&self) -> Surd {
        (self.rat(self.a()) - Surd::root(self.radicand())).scale(Q::new(1, 2))
    }

    /// The general formula, with the multiplicities `σ − 1` and `n − σ − 1`
    /// taken literally (they may be `−1` at the ends of the range).
    pub fn lower(&self) -> Surd {
        let (n, s) = (self.n as i128, self.sigma as i128);
        let inner = self.rat(Q::new(n - 2 * s, n)).abs().scale(self.q(s - 1));
        let outer = self.q(n - s - 1) * Q::new(n + 2 * s, n);
        inner + self.rat(outer) + self.x1().abs() + self.x2().abs()
    }

    /// The simplified lower endpoint for `σ > n/2`, `None` elsewhere.
    pub fn lower_upper_half(&self) -> Option<Surd> {
        (2 * self.sigma > self.n).then(|| self.rat(self.a()) + Surd::root(self.radicand()))
    }

    /// The simplified lower endpoint for `σ ≤ n/2`, `None` elsewhere.
    pub fn lower_lower_half(&self) -> Option<Surd> {
        if 2 * self.sigma > self.n {
            return None;
        }
        let (n, s) = (self.n as i128, self.sigma as i128);
        let half = Q::new(1, 2);
        let poly = Q::new(3 * n, 2) - self.q(2) + self.q(2 * s) * (self.q(1) - Q::new(1 + 2 * s, n));
        let root = Surd::root(self.radicand());
        let tail = (self.rat(self.a()) - root).abs();
        Some(self.rat(poly) + root.scale(half) + tail.scale(half))
    }

    /// Whichever simplified form applies to this `σ`.
    pub fn lower_simplified(&self) -> Surd {
        self.lower_upper_half()
            .or_else(|| self.lower_lower_half())
            .expect("one of the two ranges always applies")
    }
}

/// `Σ |eig(M)|` for the auxiliary matrix, computed numerically.
pub fn ng_aux_abs_sum(n: usize, sigma: usize) -> Result<f64> {
    Ok(ng_aux_spectrum(n, sigma)?.values().iter().map(|x| x.abs()).sum())
}

pub fn ng_aux_spectrum(n: usize, sigma: usize) -> Result<Spectrum> {
    let m = ng_energy_aux_matrix(n, sigma)?;
    spectrum_f64(n, &m.to_f64())
}

/// The predicted eigenvalue multiset of the auxiliary matrix:
/// `1 − 2σ/n` (×`σ−1`), `−1 − 2σ/n` (×`n−σ−1`), `x₁`, `x₂`. Negative
/// multiplicities at `σ ∈ {0, n}` cancel against `x₁` or `x₂`.
pub fn ng_aux_closed_spectrum(n: usize, sigma: usize) -> Result<Spectrum> {
    let exact = NgExact::new(n, sigma)?;
    let (nf, s) = (n as f64, sigma as f64);
    let p = 1.0 - 2.0 * s / nf;
    let q = -1.0 - 2.0 * s / nf;
    let mut values = alloc::vec![exact.x1().to_f64(), exact.x2().to_f64()];
    let mut apply = |value: f64, mult: isize| {
        if mult >= 0 {
            values.extend(core::iter::repeat_n(value, mult as usize));
        } else {
            let pos = values
                .iter()
                .enumerate()
                .min_by(|a, b| (a.1 - value).abs().total_cmp(&(b.1 - value).abs()))
                .map(|(i, _)| i);
            if let Some(i) = pos {
                values.swap_remove(i);
            }
        }
    };
    apply(p, sigma as isize - 1);
    apply(q, n as isize - sigma as isize - 1);
    Ok(Spectrum::new(values, SPECTRAL_TOL))
}

/// `true` when the general lower endpoint and its simplified form agree
/// exactly.
pub fn ng_lower_forms_agree(n: usize, sigma: usize) -> Result<bool> {
    let exact = NgExact::new(n, sigma)?;
    Ok((exact.lower() - exact.lower_simplified()).signum() == Ordering::Equal)
}
