//! JSON wire encodings shared by the command line and the local service.
//!
//! Field names are fixed; unknown fields are rejected on input.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::curves::Cross;
use crate::error::{Error, Result};
use crate::flip::FlipResult;
use crate::graph::Step;
use crate::skewcurves::{LambdaOrbit, Sign, SkewCurve};
use crate::triang::{validate, PseudoTri, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum WireSkewCurve {
    Half { cross: u8, index: i64, sign: Sign },
    Pair { i: i64, k: i64 },
    Tors { res: i64, len: i64 },
    Star { e1: Sign, e2: Sign },
    Pwloop { lam: [i64; 2], j: i64 },
    Sploop { lam: i64, j: i64, sign: Sign },
}

impl From<&SkewCurve> for WireSkewCurve {
    fn from(g: &SkewCurve) -> Self {
        match *g {
            SkewCurve::Half { cross, idx, sign } => WireSkewCurve::Half { cross: cross.index() as u8, index: idx, sign },
            SkewCurve::Pair { i, k } => WireSkewCurve::Pair { i, k },
            SkewCurve::Tors { res, len } => WireSkewCurve::Tors { res, len },
            SkewCurve::Star { e1, e2 } => WireSkewCurve::Star { e1, e2 },
            SkewCurve::PwLoop { orbit, j } => {
                let r = orbit.rep();
                WireSkewCurve::Pwloop { lam: [*r.numer(), *r.denom()], j }
            }
            SkewCurve::SpLoop { lam, j, sign } => WireSkewCurve::Sploop { lam, j, sign },
        }
    }
}

impl WireSkewCurve {
    /// Decodes without the weight-dependent range checks, so that a validator can report them.
    pub fn decode_raw(&self) -> Result<SkewCurve> {
        Ok(match *self {
            WireSkewCurve::Half { cross, index, sign } => {
                SkewCurve::Half { cross: Cross::from_index(cross as i64)?, idx: index, sign }
            }
            WireSkewCurve::Pair { i, k } => SkewCurve::Pair { i, k },
            WireSkewCurve::Tors { res, len } => SkewCurve::Tors { res, len },
            WireSkewCurve::Star { e1, e2 } => SkewCurve::Star { e1, e2 },
            WireSkewCurve::Pwloop { lam: [p, q], j } => {
                if q == 0 {
                    return Err(Error::Parse("zero denominator in lam".into()));
                }
                SkewCurve::PwLoop { orbit: LambdaOrbit::new(Ratio::new(p, q))?, j }
            }
            WireSkewCurve::Sploop { lam, j, sign } => {
                if j == 1 && (lam == 1 || lam == -1) {
                    SkewCurve::sploop(lam, j, sign)?
                } else {
                    SkewCurve::SpLoop { lam, j, sign }
                }
            }
        })
    }

    /// Decodes and checks the canonical ranges for weight n.
    pub fn decode(&self, n: i64) -> Result<SkewCurve> {
        let g = self.decode_raw()?;
        g.check(n)?;
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WirePseudoTri {
    pub n: i64,
    pub arcs: Vec<WireSkewCurve>,
}

impl From<&PseudoTri> for WirePseudoTri {
    fn from(t: &PseudoTri) -> Self {
        WirePseudoTri { n: t.n(), arcs: t.arcs().iter().map(WireSkewCurve::from).collect() }
    }
}

impl WirePseudoTri {
    pub fn decode_arcs(&self) -> Result<Vec<SkewCurve>> {
        self.arcs.iter().map(WireSkewCurve::decode_raw).collect()
    }

    /// Full validation; domain violations come back as `Error::IllFormed`.
    pub fn decode(&self) -> Result<PseudoTri> {
        if self.n < 2 {
            return Err(Error::BadWeight(self.n));
        }
        PseudoTri::new(self.n, self.decode_arcs()?)
    }

    /// Decodes and validates, returning the report instead of failing on violations.
    pub fn check(&self) -> Result<(Option<PseudoTri>, WireReport)> {
        if self.n < 2 {
            return Err(Error::BadWeight(self.n));
        }
        let arcs = self.decode_arcs()?;
        let arcs_len = arcs.len();
        let report = validate(self.n, &arcs);
        let tri = if report.ok { Some(PseudoTri::new(self.n, arcs)?) } else { None };
        Ok((tri, WireReport::new(self.n, arcs_len, &report)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireFlipRequest {
    pub tri: WirePseudoTri,
    pub arc: WireSkewCurve,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireFlip {
    pub removed: WireSkewCurve,
    pub added: WireSkewCurve,
    pub case_label: String,
    pub tri: WirePseudoTri,
}

impl From<&FlipResult> for WireFlip {
    fn from(r: &FlipResult) -> Self {
        WireFlip {
            removed: (&r.removed).into(),
            added: (&r.added).into(),
            case_label: r.case_label.to_string(),
            tri: (&r.new_tri).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireStep {
    pub removed: WireSkewCurve,
    pub added: WireSkewCurve,
}

impl From<&Step> for WireStep {
    fn from(s: &Step) -> Self {
        WireStep { removed: (&s.removed).into(), added: (&s.added).into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WirePathRequest {
    pub from: WirePseudoTri,
    pub to: WirePseudoTri,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireShiftRequest {
    pub tri: WirePseudoTri,
    /// An element of L(2,2,n) in the text form "x1 - x3 + 2*c".
    pub by: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WireViolation {
    Malformed { arc: WireSkewCurve, reason: String },
    Duplicate { arc: WireSkewCurve },
    NotSkewArc { arc: WireSkewCurve },
    Incompatible { a: WireSkewCurve, b: WireSkewCurve },
    WrongSize { expected: usize, found: usize },
    NotMaximal { extension: WireSkewCurve },
}

impl From<&Violation> for WireViolation {
    fn from(v: &Violation) -> Self {
        match v {
            Violation::Malformed { arc, reason } => WireViolation::Malformed { arc: arc.into(), reason: reason.clone() },
            Violation::Duplicate { arc } => WireViolation::Duplicate { arc: arc.into() },
            Violation::NotSkewArc { arc } => WireViolation::NotSkewArc { arc: arc.into() },
            Violation::Incompatible { a, b } => WireViolation::Incompatible { a: a.into(), b: b.into() },
            Violation::WrongSize { expected, found } => {
                WireViolation::WrongSize { expected: *expected, found: *found }
            }
            Violation::NotMaximal { extension } => WireViolation::NotMaximal { extension: extension.into() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireReport {
    pub ok: bool,
    pub n: i64,
    pub arcs: usize,
    pub violations: Vec<WireViolation>,
}

impl WireReport {
    pub fn new(n: i64, arcs: usize, r: &ValidationReport) -> Self {
        WireReport { ok: r.ok, n, arcs, violations: r.violations.iter().map(WireViolation::from).collect() }
    }
}

/// Line-delimited snapshot of pseudo-triangulations, one wire record per line.
pub fn write_snapshot<'a>(nodes: impl IntoIterator<Item = &'a PseudoTri>) -> String {
    let mut out = String::new();
    for t in nodes {
        out.push_str(&serde_json::to_string(&WirePseudoTri::from(t)).expect("wire types serialize"));
        out.push('\n');
    }
    out
}

pub fn read_snapshot(text: &str) -> Result<Vec<PseudoTri>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(no, l)| {
            let w: WirePseudoTri =
                serde_json::from_str(l).map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
            w.decode()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triang::fv_arrow;

    #[test]
    fn curve_round_trip() {
        let src = [
            r#"{"type":"half","cross":1,"index":-2,"sign":"+"}"#,
            r#"{"type":"pair","i":0,"k":2}"#,
            r#"{"type":"tors","res":1,"len":2}"#,
            r#"{"type":"star","e1":"+","e2":"-"}"#,
            r#"{"type":"pwloop","lam":[2,1],"j":3}"#,
            r#"{"type":"sploop","lam":-1,"j":2,"sign":"-"}"#,
        ];
        for s in src {
            let w: WireSkewCurve = serde_json::from_str(s).unwrap();
            let g = w.decode(4).unwrap();
            assert_eq!(serde_json::to_string(&WireSkewCurve::from(&g)).unwrap(), s);
        }
    }

    #[test]
    fn rejects_unknown_fields() {
        assert!(serde_json::from_str::<WireSkewCurve>(r#"{"type":"pair","i":0,"k":2,"x":1}"#).is_err());
        assert!(serde_json::from_str::<WirePseudoTri>(r#"{"n":2,"arcs":[],"extra":0}"#).is_err());
        assert!(serde_json::from_str::<WireSkewCurve>(r#"{"type":"ring"}"#).is_err());
    }

    #[test]
    fn pseudo_tri_round_trip() {
        let t = fv_arrow(3, 1, -1).unwrap();
        let w = WirePseudoTri::from(&t);
        let back: WirePseudoTri = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(back.decode().unwrap(), t);
    }

    #[test]
    fn snapshot_round_trip() {
        let nodes = [fv_arrow(2, 0, 0).unwrap(), fv_arrow(2, 1, -1).unwrap()];
        let text = write_snapshot(&nodes);
        assert_eq!(text.lines().count(), 2);
        assert_eq!(read_snapshot(&text).unwrap(), nodes);
        assert!(read_snapshot("{\"n\":2}").is_err());
    }

    #[test]
    fn sploop_power_one_is_a_star() {
        let w = WireSkewCurve::Sploop { lam: -1, j: 1, sign: Sign::Plus };
        assert_eq!(w.decode(2).unwrap(), SkewCurve::Star { e1: Sign::Plus, e2: Sign::Minus });
    }
}
