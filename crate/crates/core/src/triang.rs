//! Pseudo-triangulations: maximal sets of pairwise compatible skew-arcs.

use std::collections::BTreeSet;
use std::fmt;

use crate::compat::{compatible, is_skew_arc};
use crate::curves::{Cross, CurveClass};
use crate::error::{Error, Result};
use crate::skewcurves::{half_from_bridge, CurveSet, SheafName, Sign, SkewCurve};

use SkewCurve::*;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PseudoTri {
    n: i64,
    arcs: BTreeSet<SkewCurve>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Malformed { arc: SkewCurve, reason: String },
    Duplicate { arc: SkewCurve },
    NotSkewArc { arc: SkewCurve },
    Incompatible { a: SkewCurve, b: SkewCurve },
    WrongSize { expected: usize, found: usize },
    NotMaximal { extension: SkewCurve },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed { arc, reason } => write!(f, "malformed arc {arc}: {reason}"),
            Violation::Duplicate { arc } => write!(f, "duplicate arc {arc}"),
            Violation::NotSkewArc { arc } => write!(f, "{arc} is not a skew-arc"),
            Violation::Incompatible { a, b } => write!(f, "{a} and {b} are not compatible"),
            Violation::WrongSize { expected, found } => write!(f, "expected {expected} arcs, found {found}"),
            Violation::NotMaximal { extension } => write!(f, "not maximal: {extension} can be added"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Skew-arcs that could extend a compatible set: bridges near its bridge endpoints,
/// all rigid boundary-arc pairs and the four stars.
///
/// Compatible bridges have bottoms within 2n of each other (their standard lifts have endpoint
/// sums in [-n, n]), so a bridge candidate must lie within `margin >= 2n` of every bottom of the set.
pub fn candidates(n: i64, arcs: &BTreeSet<SkewCurve>, margin: i64) -> Vec<SkewCurve> {
    let bottoms: Vec<i64> = arcs.iter().flat_map(|g| g.bridge_bottoms(n)).collect();
    let (lo, hi) = match (bottoms.iter().max(), bottoms.iter().min()) {
        (Some(&max), Some(&min)) => (max - margin, min + margin),
        _ => (-margin, margin),
    };
    bridge_candidates(n, lo, hi)
        .into_iter()
        .chain(torsion_candidates(n))
        .collect()
}

/// Halves and pairs whose bridge bottoms all lie in [lo, hi].
pub fn bridge_candidates(n: i64, lo: i64, hi: i64) -> Vec<SkewCurve> {
    let mut out = Vec::new();
    for cross in [Cross::One, Cross::Two] {
        for bot in lo..=hi {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(Half { cross, idx: -bot, sign });
            }
        }
    }
    for k in 1..n {
        for i in lo + k..=hi {
            out.push(Pair { i, k });
        }
    }
    out
}

/// Rigid boundary-arc pairs and stars.
pub fn torsion_candidates(n: i64) -> Vec<SkewCurve> {
    let mut out = Vec::new();
    for res in 0..n {
        for len in 1..n {
            out.push(Tors { res, len });
        }
    }
    for e1 in [Sign::Plus, Sign::Minus] {
        for e2 in [Sign::Plus, Sign::Minus] {
            out.push(Star { e1, e2 });
        }
    }
    out
}

pub fn default_margin(n: i64) -> i64 {
    2 * n
}

pub fn validate(n: i64, arcs: &[SkewCurve]) -> ValidationReport {
    let mut violations = Vec::new();
    if n < 2 {
        return ValidationReport {
            ok: false,
            violations: vec![Violation::WrongSize { expected: 0, found: arcs.len() }],
        };
    }
    let mut set = BTreeSet::new();
    for g in arcs {
        if let Err(e) = g.check(n) {
            violations.push(Violation::Malformed { arc: *g, reason: e.to_string() });
        } else if !set.insert(*g) {
            violations.push(Violation::Duplicate { arc: *g });
        }
    }
    if !violations.is_empty() {
        return ValidationReport { ok: false, violations };
    }
    let list: Vec<SkewCurve> = set.iter().copied().collect();
    for g in &list {
        if !is_skew_arc(n, g).unwrap_or(false) {
            violations.push(Violation::NotSkewArc { arc: *g });
        }
    }
    for (x, a) in list.iter().enumerate() {
        for b in &list[x + 1..] {
            if !compatible(n, a, b).unwrap_or(false) {
                violations.push(Violation::Incompatible { a: *a, b: *b });
            }
        }
    }
    if (list.len() as i64) != n + 3 {
        violations.push(Violation::WrongSize { expected: (n + 3) as usize, found: list.len() });
    }
    if violations.is_empty() {
        if let Some(ext) = extension(n, &set) {
            violations.push(Violation::NotMaximal { extension: ext });
        }
    }
    ValidationReport { ok: violations.is_empty(), violations }
}

/// A skew-arc outside the set compatible with all of it, if one exists in the window.
pub fn extension(n: i64, set: &BTreeSet<SkewCurve>) -> Option<SkewCurve> {
    candidates(n, set, default_margin(n))
        .into_iter()
        .find(|g| !set.contains(g) && set.iter().all(|h| compatible(n, g, h).unwrap_or(false)))
}

impl PseudoTri {
    pub fn new(n: i64, arcs: impl IntoIterator<Item = SkewCurve>) -> Result<Self> {
        let list: Vec<SkewCurve> = arcs.into_iter().collect();
        let report = validate(n, &list);
        if !report.ok {
            let msg: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            return Err(Error::IllFormed(msg.join("; ")));
        }
        Ok(PseudoTri { n, arcs: list.into_iter().collect() })
    }

    /// Builds without the maximality scan; callers guarantee validity.
    pub(crate) fn from_trusted(n: i64, arcs: BTreeSet<SkewCurve>) -> Self {
        debug_assert_eq!(arcs.len() as i64, n + 3);
        PseudoTri { n, arcs }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<SkewCurve> {
        &self.arcs
    }

    pub fn contains(&self, g: &SkewCurve) -> bool {
        self.arcs.contains(g)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self.n, &self.arcs.iter().copied().collect::<Vec<_>>())
    }

    pub fn stars(&self) -> Vec<SkewCurve> {
        self.arcs.iter().filter(|g| g.is_star()).copied().collect()
    }

    pub fn halves_at(&self, cross: Cross) -> Vec<SkewCurve> {
        self.arcs
            .iter()
            .filter(|g| matches!(g, Half { cross: c, .. } if *c == cross))
            .copied()
            .collect()
    }

    /// Shift every arc by x.
    pub fn shift(&self, x: crate::LElement) -> Result<Self> {
        let arcs = self.arcs.iter().map(|g| g.shift(self.n, x)).collect::<Result<_>>()?;
        Ok(PseudoTri::from_trusted(self.n, arcs))
    }

    pub fn zeta(&self) -> Result<(ZetaValue, ZetaValue)> {
        Ok((zeta_at(&self.arcs, Cross::One)?, zeta_at(&self.arcs, Cross::Two)?))
    }

    /// Signs of zeta after removing one arc; None stands for both signs.
    pub fn zeta_minus(&self, g: &SkewCurve) -> Result<[Option<Sign>; 2]> {
        if !self.arcs.contains(g) {
            return Err(Error::NotMember(*g));
        }
        let mut rest = self.arcs.clone();
        rest.remove(g);
        let one = signs_at(&rest, Cross::One);
        let two = signs_at(&rest, Cross::Two);
        let side = |(p, m): (bool, bool)| -> Result<Option<Sign>> {
            match (p, m) {
                (true, true) => Ok(None),
                (true, false) => Ok(Some(Sign::Plus)),
                (false, true) => Ok(Some(Sign::Minus)),
                (false, false) => Err(Error::IllFormed(format!("no arc at a cross after removing {g}"))),
            }
        };
        Ok([side(one)?, side(two)?])
    }

    pub fn gamma_lambda(&self) -> Result<GammaLambda> {
        let n = self.n;
        let zeta = self.zeta()?;
        let mut punctures = Vec::new();
        let mut arcs = Vec::new();
        for g in &self.arcs {
            if let CurveSet::SigmaPair(a, b) = g.curve_set(n) {
                arcs.push(GammaArc::Curve(a));
                arcs.push(GammaArc::Curve(b));
            }
        }
        for (cross, z) in [(Cross::One, zeta.0), (Cross::Two, zeta.1)] {
            match z {
                ZetaValue::Pm(Witness::A0) => {
                    let h = self.halves_at(cross)[0];
                    let CurveSet::Fixed(c) = h.curve_set(n) else { unreachable!() };
                    arcs.push(GammaArc::Curve(c));
                }
                ZetaValue::Pm(_) => arcs.push(GammaArc::PunctureLoop(cross.other())),
                ZetaValue::Sign(s) => {
                    punctures.push(cross);
                    for h in self.halves_at(cross) {
                        if let (Half { sign, .. }, CurveSet::Fixed(CurveClass::Bridge { bot, top })) = (h, h.curve_set(n)) {
                            debug_assert_eq!(sign, s);
                            arcs.push(GammaArc::Ray { boundary: Boundary::Lower, point: bot, cross });
                            arcs.push(GammaArc::Ray { boundary: Boundary::Upper, point: top, cross });
                        }
                    }
                }
            }
        }
        if matches!((zeta.0, zeta.1), (ZetaValue::Sign(_), ZetaValue::Sign(_))) && !self.stars().is_empty() {
            arcs.push(GammaArc::SemiCircle(0));
            arcs.push(GammaArc::SemiCircle(1));
        }
        let gamma = GammaLambda { punctures, arcs };
        let expected = 2 * n as usize + 3 * gamma.punctures.len();
        if gamma.arcs.len() != expected {
            return Err(Error::IllFormed(format!(
                "triangulation has {} arcs, expected {expected}",
                gamma.arcs.len()
            )));
        }
        Ok(gamma)
    }

    pub fn classify_case(&self) -> Result<u8> {
        let stars = self.stars().len();
        let (z1, z2) = self.zeta()?;
        let pm = |z: ZetaValue| matches!(z, ZetaValue::Pm(_));
        Ok(match (stars, pm(z1), pm(z2)) {
            (2, _, _) => 1,
            (1, _, _) => 2,
            (0, true, true) => 3,
            (0, true, false) => 4,
            (0, false, true) => 5,
            (0, false, false) => 6,
            _ => return Err(Error::IllFormed(format!("{stars} stars"))),
        })
    }

    /// The endpoint chains of an FV pseudo-triangulation, or None.
    pub fn fv_chains(&self) -> Option<FvChains> {
        let n = self.n;
        if self.arcs.iter().any(|g| !g.is_bundle()) {
            return None;
        }
        let mut ends = Vec::new();
        for cross in [Cross::One, Cross::Two] {
            let hs = self.halves_at(cross);
            let [Half { idx: i1, .. }, Half { idx: i2, .. }] = hs[..] else { return None };
            if i1 != i2 {
                return None;
            }
            let CurveSet::Fixed(CurveClass::Bridge { bot, top }) = hs[0].curve_set(n) else { unreachable!() };
            ends.push((bot, top));
        }
        let mut mid = vec![None; n as usize + 1];
        for g in &self.arcs {
            if let Pair { i, k } = *g {
                if mid[k as usize].replace((i, k - i)).is_some() {
                    return None;
                }
            }
        }
        let mut bottoms = vec![ends[0].0];
        let mut tops = vec![ends[0].1];
        for slot in &mid[1..n as usize] {
            let (b, a) = (*slot)?;
            bottoms.push(b);
            tops.push(a);
        }
        bottoms.push(ends[1].0);
        tops.push(ends[1].1);
        let monotone = |v: &[i64]| v.windows(2).all(|w| w[0] <= w[1]);
        (monotone(&bottoms) && monotone(&tops)).then_some(FvChains { a: tops, b: bottoms })
    }

    pub fn is_fv(&self) -> bool {
        self.fv_chains().is_some()
    }

    pub fn tilting_sheaf(&self) -> Vec<SheafName> {
        self.arcs.iter().map(|g| g.phi()).collect()
    }
}

impl fmt::Display for PseudoTri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|g| g.to_string()).collect();
        write!(f, "n={} {{{}}}", self.n, parts.join(", "))
    }
}

/// Tops a_0..a_n and bottoms b_0..b_n of the chain of bridges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvChains {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    A0,
    A1,
    A2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaValue {
    Sign(Sign),
    Pm(Witness),
}

impl ZetaValue {
    pub fn sign(self) -> Option<Sign> {
        match self {
            ZetaValue::Sign(s) => Some(s),
            ZetaValue::Pm(_) => None,
        }
    }
}

impl fmt::Display for ZetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaValue::Sign(s) => write!(f, "{s}"),
            ZetaValue::Pm(Witness::A0) => f.write_str("pm(0)"),
            ZetaValue::Pm(Witness::A1) => f.write_str("pm(1)"),
            ZetaValue::Pm(Witness::A2) => f.write_str("pm(2)"),
        }
    }
}

/// Whether some arc through the cross carries + and whether some carries -.
/// Stars count at cross 1 by their first coordinate and at cross 2 by their second.
fn signs_at(arcs: &BTreeSet<SkewCurve>, cross: Cross) -> (bool, bool) {
    let mut plus = false;
    let mut minus = false;
    for g in arcs {
        let s = match *g {
            Half { cross: c, sign, .. } if c == cross => Some(sign),
            Star { .. } => g.star_coord(cross),
            _ => None,
        };
        match s {
            Some(Sign::Plus) => plus = true,
            Some(Sign::Minus) => minus = true,
            None => {}
        }
    }
    (plus, minus)
}

fn zeta_at(arcs: &BTreeSet<SkewCurve>, cross: Cross) -> Result<ZetaValue> {
    match signs_at(arcs, cross) {
        (true, false) => return Ok(ZetaValue::Sign(Sign::Plus)),
        (false, true) => return Ok(ZetaValue::Sign(Sign::Minus)),
        (false, false) => return Err(Error::IllFormed(format!("no arc at {cross}"))),
        (true, true) => {}
    }
    let members: Vec<&SkewCurve> = arcs
        .iter()
        .filter(|g| g.is_star() || matches!(g, Half { cross: c, .. } if *c == cross))
        .collect();
    let stars: Vec<&SkewCurve> = arcs.iter().filter(|g| g.is_star()).collect();
    let a0 = matches!(
        members[..],
        [Half { idx: i, sign: s, .. }, Half { idx: j, sign: t, .. }] if i == j && s != t
    );
    // two stars differing exactly in the coordinate of this cross
    let differ_here = stars.len() == 2 && {
        let other = cross.other();
        stars[0].star_coord(cross) != stars[1].star_coord(cross)
            && stars[0].star_coord(other) == stars[1].star_coord(other)
    };
    let witnesses: Vec<Witness> = [
        (a0, Witness::A0),
        (differ_here && cross == Cross::One, Witness::A1),
        (differ_here && cross == Cross::Two, Witness::A2),
    ]
    .iter()
    .filter(|(c, _)| *c)
    .map(|&(_, w)| w)
    .collect();
    match witnesses[..] {
        [w] => Ok(ZetaValue::Pm(w)),
        _ => Err(Error::IllFormed(format!("both signs at {cross} without a unique witness"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaArc {
    Curve(CurveClass),
    /// Half of a sigma-fixed bridge, from a boundary point to a puncture.
    Ray { boundary: Boundary, point: i64, cross: Cross },
    PunctureLoop(Cross),
    SemiCircle(u8),
}

/// The ordinary triangulation attached to a pseudo-triangulation, with punctures at the crosses
/// where zeta is a sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaLambda {
    pub punctures: Vec<Cross>,
    pub arcs: Vec<GammaArc>,
}

/// Arc count of a triangulation with genus g, b boundary components, p punctures and c marked
/// boundary points.
pub fn triangulation_arc_count(g: i64, b: i64, p: i64, c: i64) -> i64 {
    6 * g + 3 * b + 3 * p + c - 6
}

fn fv_family(n: i64, a: i64, b: i64, arrow: bool) -> Result<PseudoTri> {
    if a + b != 0 {
        return Err(Error::IllFormed(format!("a + b = {} is not 0", a + b)));
    }
    if n < 2 {
        return Err(Error::BadWeight(n));
    }
    let step = |k: i64| -> (i64, i64) {
        let (lo, hi) = (k / 2, (k + 1) / 2);
        if arrow {
            (b + lo, a + hi)
        } else {
            (b + hi, a + lo)
        }
    };
    let mut arcs = BTreeSet::new();
    for sign in [Sign::Plus, Sign::Minus] {
        arcs.insert(Half { cross: Cross::One, idx: a, sign });
        let (bot, top) = step(n);
        arcs.insert(half_from_bridge(n, bot, top, sign)?);
    }
    for k in 1..n {
        arcs.insert(Pair { i: step(k).0, k });
    }
    Ok(PseudoTri::from_trusted(n, arcs))
}

/// The FV pseudo-triangulation whose chain alternates starting with a top step.
pub fn fv_arrow(n: i64, a: i64, b: i64) -> Result<PseudoTri> {
    fv_family(n, a, b, true)
}

/// The FV pseudo-triangulation whose chain alternates starting with a bottom step.
pub fn fv_under(n: i64, a: i64, b: i64) -> Result<PseudoTri> {
    fv_family(n, a, b, false)
}
