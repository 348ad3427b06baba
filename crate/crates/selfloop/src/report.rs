//! JSON report schemas. Reals are fixed-point decimal strings so that
//! reports compare byte for byte across platforms.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use selfloop_core::bounds::{BoundId, BoundReport};
use selfloop_core::construct::adjacency;
use selfloop_core::graph::LoopedGraph;
use selfloop_core::invariants::energy;
use selfloop_core::numerics::{charpoly_exact, spectrum, IntPoly, LineGraphIdentity};

use crate::error::Result;
use crate::loopline::print_loopline;

pub const SCHEMA_VERSION: u32 = 1;

/// Digits after the decimal point in every serialized real.
pub const DECIMALS: usize = 12;

/// Fixed-point rendering with `-0` folded into `0`.
pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.DECIMALS$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

pub fn fmt_poly(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

/// A map keyed by bound id, serialized in catalog order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ById<T>(pub Vec<(BoundId, T)>);

impl<T: Serialize> Serialize for ById<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (id, v) in &self.0 {
            map.serialize_entry(&id.to_string(), v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceEcho {
    pub n: usize,
    pub m: usize,
    pub sigma: usize,
    pub loopline: String,
}

impl InstanceEcho {
    pub fn new(gs: &LoopedGraph) -> Result<Self> {
        Ok(InstanceEcho {
            n: gs.order(),
            m: gs.size(),
            sigma: gs.sigma(),
            loopline: print_loopline(gs)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnergyJson {
    pub value: String,
    /// `σ/n` as a reduced fraction.
    pub center: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisJson {
    pub name: &'static str,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundJson {
    pub name: &'static str,
    pub verdict: &'static str,
    pub hypotheses: Vec<HypothesisJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structural_equality: Option<bool>,
    pub digest: String,
}

impl From<&BoundReport> for BoundJson {
    fn from(r: &BoundReport) -> Self {
        let e = r.evaluation;
        BoundJson {
            name: r.id.name(),
            verdict: r.verdict.as_str(),
            hypotheses: r
                .hypotheses
                .iter()
                .map(|h| HypothesisJson {
                    name: h.name,
                    satisfied: h.satisfied,
                })
                .collect(),
            lhs: e.map(|e| fmt_real(e.lhs)),
            rhs: e.map(|e| fmt_real(e.rhs)),
            slack: e.map(|e| fmt_real(e.slack)),
            side: e.and_then(|e| e.locus.side).map(|s| s.as_str()),
            index: e.and_then(|e| e.locus.index),
            structural_equality: r.structural_equality,
            digest: format!("{:016x}", r.digest),
        }
    }
}

/// Per-instance report emitted by the `spectrum`, `energy`, `charpoly` and
/// `bounds` subcommands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub version: u32,
    pub instance: InstanceEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy: Option<EnergyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charpoly: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<ById<BoundJson>>,
}

impl ReportJson {
    pub fn new(gs: &LoopedGraph) -> Result<Self> {
        Ok(ReportJson {
            version: SCHEMA_VERSION,
            instance: InstanceEcho::new(gs)?,
            spectrum: None,
            energy: None,
            charpoly: None,
            bounds: None,
        })
    }

    pub fn with_spectrum(mut self, gs: &LoopedGraph) -> Result<Self> {
        let s = spectrum(&adjacency(gs))?;
        self.spectrum = Some(s.values().iter().map(|&x| fmt_real(x)).collect());
        Ok(self)
    }

    pub fn with_energy(mut self, gs: &LoopedGraph) -> Result<Self> {
        let e = energy(gs)?;
        self.energy = Some(EnergyJson {
            value: fmt_real(e.value),
            center: e.center.to_string(),
        });
        Ok(self)
    }

    pub fn with_charpoly(mut self, gs: &LoopedGraph) -> Self {
        self.charpoly = Some(fmt_poly(&charpoly_exact(&adjacency(gs))));
        self
    }

    pub fn with_bounds(mut self, reports: &[BoundReport]) -> Self {
        self.bounds = Some(ById(reports.iter().map(|r| (r.id, BoundJson::from(r))).collect()));
        self
    }
}

/// Output of the `identity` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityJson {
    pub version: u32,
    pub instance: InstanceEcho,
    pub equal: bool,
    /// Ascending coefficients.
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub lhs_display: String,
    pub rhs_display: String,
}

impl IdentityJson {
    pub fn new(gs: &LoopedGraph, id: &LineGraphIdentity) -> Result<Self> {
        Ok(IdentityJson {
            version: SCHEMA_VERSION,
            instance: InstanceEcho::new(gs)?,
            equal: id.equal,
            lhs: fmt_poly(&id.lhs),
            rhs: fmt_poly(&id.rhs),
            lhs_display: id.lhs.to_string(),
            rhs_display: id.rhs.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopline::parse_loopline;

    #[test]
    fn real_formatting() {
        assert_eq!(fmt_real(1.618_033_988_749_895), "1.618033988750");
        assert_eq!(fmt_real(-0.0), "0.000000000000");
        assert_eq!(fmt_real(-1e-15), "0.000000000000");
        assert_eq!(fmt_real(-0.5), "-0.500000000000");
        assert_eq!(fmt_real(f64::NAN), "nan");
    }

    #[test]
    fn report_key_order() {
        let gs = parse_loopline("A_ | 0").unwrap();
        let reports = selfloop_core::bounds::evaluate_all(&gs).unwrap();
        let json = serde_json::to_string(
            &ReportJson::new(&gs)
                .unwrap()
                .with_spectrum(&gs)
                .unwrap()
                .with_bounds(&reports),
        )
        .unwrap();
        assert!(json.starts_with(r#"{"version":1,"instance":{"n":2,"m":1,"sigma":1,"loopline":"A_ | 0"},"spectrum":["1.618033988750","-0.618033988750"]"#));
        let b2 = json.find("\"B2\"").unwrap();
        let b10 = json.find("\"B10\"").unwrap();
        let b9 = json.find("\"B9\"").unwrap();
        assert!(b2 < b9 && b9 < b10);
    }
}
