//! Request handlers shared by the command line and the HTTP service. Each takes a decoded
//! request and returns a wire value, so both front ends produce identical payloads.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use skewtilt::graph::{enumerate as enumerate_nodes, flip_path, replay};
use skewtilt::triang::torsion_candidates;
use skewtilt::wire::{
    WireFlip, WireFlipRequest, WirePathRequest, WirePseudoTri, WireReport, WireShiftRequest, WireSkewCurve,
};
use skewtilt::{flip, Error, LElement, SheafName, SkewCurve};

/// Largest weight the service will enumerate on request.
pub const SERVICE_MAX_N: i64 = 6;

#[derive(Debug, Clone, PartialEq)]
pub enum ApiError {
    /// Malformed input: exit code 2, HTTP 400.
    Parse(String),
    /// Well-formed input violating the model: exit code 1, HTTP 422.
    Domain { message: String, report: Option<WireReport> },
}

impl ApiError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ApiError::Parse(_) => 2,
            ApiError::Domain { .. } => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            ApiError::Parse(m) | ApiError::Domain { message: m, .. } => m,
        }
    }

    pub fn body(&self) -> Value {
        match self {
            ApiError::Parse(m) => json!({
                "error": "parse",
                "message": m,
                "violations": [{ "kind": "parse", "message": m }],
            }),
            ApiError::Domain { message, report } => json!({
                "error": "domain",
                "message": message,
                "violations": report.as_ref().map(|r| json!(r.violations)).unwrap_or_else(|| json!([])),
            }),
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::MalformedCurve(_) | Error::BadWeight(_) => ApiError::Parse(e.to_string()),
            _ => ApiError::Domain { message: e.to_string(), report: None },
        }
    }
}

pub type ApiResult<T> = std::result::Result<T, ApiError>;

pub fn parse_json<T: DeserializeOwned>(text: &str) -> ApiResult<T> {
    serde_json::from_str(text).map_err(|e| ApiError::Parse(e.to_string()))
}

/// Serialization used for every JSON payload either front end emits.
pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("wire types serialize")
}

pub fn validate(req: &WirePseudoTri) -> ApiResult<WireReport> {
    let (_, report) = req.check()?;
    if report.ok {
        Ok(report)
    } else {
        let message = format!("{} violation(s)", report.violations.len());
        Err(ApiError::Domain { message, report: Some(report) })
    }
}

fn decode_tri(w: &WirePseudoTri) -> ApiResult<skewtilt::PseudoTri> {
    let (tri, report) = w.check()?;
    tri.ok_or_else(|| ApiError::Domain { message: "not a pseudo-triangulation".into(), report: Some(report) })
}

pub fn flip_arc(req: &WireFlipRequest) -> ApiResult<WireFlip> {
    let tri = decode_tri(&req.tri)?;
    let arc = req.arc.decode(tri.n())?;
    Ok(WireFlip::from(&flip::flip(&tri, &arc)?))
}

pub fn path(req: &WirePathRequest) -> ApiResult<Vec<WireFlip>> {
    let from = decode_tri(&req.from)?;
    let to = decode_tri(&req.to)?;
    let steps = flip_path(&from, &to)?;
    Ok(replay(&from, &steps)?.iter().map(WireFlip::from).collect())
}

pub fn shift(req: &WireShiftRequest) -> ApiResult<WirePseudoTri> {
    let tri = decode_tri(&req.tri)?;
    let x = LElement::parse(tri.n(), &req.by)?;
    Ok(WirePseudoTri::from(&tri.shift(x)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapRequest {
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc: Option<WireSkewCurve>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sheaf: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapResponse {
    pub arc: WireSkewCurve,
    pub curve: String,
    pub sheaf: String,
    pub equivariant: String,
}

pub fn map(req: &MapRequest) -> ApiResult<MapResponse> {
    let n = req.n;
    let g = match (&req.arc, &req.sheaf) {
        (Some(a), None) => a.decode(n)?,
        (None, Some(s)) => SkewCurve::phi_inv(n, &SheafName::parse(n, s)?)?,
        _ => return Err(ApiError::Parse("give exactly one of arc and sheaf".into())),
    };
    Ok(MapResponse {
        arc: WireSkewCurve::from(&g),
        curve: g.to_string(),
        sheaf: g.phi().to_string(),
        equivariant: g.equivariant_description(n)?,
    })
}

pub fn enumerate(n: i64, window: Option<i64>) -> ApiResult<Vec<WirePseudoTri>> {
    let e = enumerate_nodes(n, window.unwrap_or(2 * n))?;
    Ok(e.nodes.iter().map(WirePseudoTri::from).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelInfo {
    pub n: i64,
    pub stars: Vec<WireSkewCurve>,
    /// Parameter ranges of the remaining skew-arc classes, as text.
    pub ranges: Vec<ParamRange>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    #[serde(rename = "type")]
    pub kind: String,
    pub params: Vec<(String, String)>,
}

pub fn model(n: i64) -> ApiResult<ModelInfo> {
    if n < 2 {
        return Err(Error::BadWeight(n).into());
    }
    let stars = torsion_candidates(n).iter().filter(|g| g.is_star()).map(WireSkewCurve::from).collect();
    let range = |kind: &str, params: &[(&str, String)]| ParamRange {
        kind: kind.into(),
        params: params.iter().map(|(a, b)| (a.to_string(), b.clone())).collect(),
    };
    let ranges = vec![
        range("half", &[("cross", "1..=2".into()), ("index", "any integer".into()), ("sign", "+ or -".into())]),
        range("pair", &[("i", "any integer".into()), ("k", format!("1..={}", n - 1))]),
        range("tors", &[("res", format!("0..={}", n - 1)), ("len", format!("1..={}", n - 1))]),
    ];
    Ok(ModelInfo { n, stars, ranges })
}
