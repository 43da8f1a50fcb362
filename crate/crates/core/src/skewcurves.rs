//! Skew-curves, the bijection to indecomposable sheaf names, and the shift action of L(2,2,n).

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::curves::{Cross, CurveClass};
use crate::error::{Error, Result};
use crate::lattice::{parse_combination, write_terms, LElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn flip_if(self, cond: bool) -> Self {
        if cond {
            self.flip()
        } else {
            self
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("bad sign {s:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The unordered pair {lambda, 1/lambda}, stored by the member of absolute value above 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaOrbit(Ratio<i64>);

impl LambdaOrbit {
    pub fn new(lam: Ratio<i64>) -> Result<Self> {
        let one = Ratio::from_integer(1);
        if *lam.numer() == 0 || lam == one || lam == -one {
            return Err(Error::MalformedCurve(format!("homogeneous parameter {lam}")));
        }
        let abs = if lam < Ratio::from_integer(0) { -lam } else { lam };
        Ok(LambdaOrbit(if abs > one { lam } else { lam.recip() }))
    }

    pub fn rep(self) -> Ratio<i64> {
        self.0
    }

    pub fn inverse(self) -> Ratio<i64> {
        self.0.recip()
    }
}

impl fmt::Display for LambdaOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.0, self.0.recip())
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let err = || Error::Parse(format!("bad rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().map_err(|_| err())?, q.trim().parse().map_err(|_| err())?),
        None => (s.trim().parse().map_err(|_| err())?, 1),
    };
    if q == 0 {
        return Err(err());
    }
    Ok(Ratio::new(p, q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SkewCurve {
    /// Half of the sigma-fixed bridge through a cross: D[-idx^idx] at cross 1, D[-idx^(n+idx)] at cross 2.
    Half { cross: Cross, idx: i64, sign: Sign },
    /// The sigma-pair {D[i^(k-i)], D[(i-k)^(-i)]}, 1 <= k <= n-1.
    Pair { i: i64, k: i64 },
    /// The sigma-pair of boundary arcs {D^{res-len-1,res}, D_{-res,len+1-res}}.
    Tors { res: i64, len: i64 },
    Star { e1: Sign, e2: Sign },
    PwLoop { orbit: LambdaOrbit, j: i64 },
    /// Loop at the parameter 1 or -1 with power j >= 2.
    SpLoop { lam: i64, j: i64, sign: Sign },
}

use SkewCurve::*;

/// The curves underlying a skew-curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveSet {
    Fixed(CurveClass),
    SigmaPair(CurveClass, CurveClass),
    Semicircles,
}

impl CurveSet {
    pub fn curves(&self) -> Vec<CurveClass> {
        match *self {
            CurveSet::Fixed(c) => vec![c],
            CurveSet::SigmaPair(a, b) => vec![a, b],
            CurveSet::Semicircles => vec![],
        }
    }
}

impl SkewCurve {
    pub fn pair(n: i64, i: i64, k: i64) -> Result<Self> {
        let g = Pair { i, k };
        g.check(n)?;
        Ok(g)
    }

    pub fn tors(n: i64, res: i64, len: i64) -> Result<Self> {
        let g = Tors { res: res.rem_euclid(n), len };
        g.check(n)?;
        Ok(g)
    }

    pub fn pwloop(lam: Ratio<i64>, j: i64) -> Result<Self> {
        let g = PwLoop { orbit: LambdaOrbit::new(lam)?, j };
        g.check(2)?;
        Ok(g)
    }

    /// Loops of power 1 at the parameters 1 and -1 are the four stars.
    pub fn sploop(lam: i64, j: i64, sign: Sign) -> Result<Self> {
        if lam != 1 && lam != -1 {
            return Err(Error::MalformedCurve(format!("special parameter {lam}")));
        }
        if j < 1 {
            return Err(Error::MalformedCurve(format!("loop power {j} < 1")));
        }
        if j == 1 {
            let e2 = if lam == 1 { sign } else { sign.flip() };
            return Ok(Star { e1: sign, e2 });
        }
        Ok(SpLoop { lam, j, sign })
    }

    /// Checks that the curve is in canonical form for weight n.
    pub fn check(&self, n: i64) -> Result<()> {
        if n < 2 {
            return Err(Error::BadWeight(n));
        }
        let bad = |m: String| Err(Error::MalformedCurve(m));
        match *self {
            Pair { k, .. } if !(1..n).contains(&k) => bad(format!("pair k={k} outside [1,{}]", n - 1)),
            Tors { res, len } if !(0..n).contains(&res) || len < 1 => {
                bad(format!("tors res={res} len={len}"))
            }
            PwLoop { j, .. } if j < 1 => bad(format!("loop power {j}")),
            SpLoop { lam, j, .. } if (lam != 1 && lam != -1) || j < 2 => {
                bad(format!("special loop lam={lam} j={j}"))
            }
            _ => Ok(()),
        }
    }

    pub fn is_half(&self) -> bool {
        matches!(self, Half { .. })
    }

    pub fn is_star(&self) -> bool {
        matches!(self, Star { .. })
    }

    /// Members of the sigma-pair classes (bridges or boundary arcs).
    pub fn is_sigma_pair(&self) -> bool {
        matches!(self, Pair { .. } | Tors { .. })
    }

    pub fn is_bundle(&self) -> bool {
        matches!(self, Half { .. } | Pair { .. })
    }

    pub fn star_coord(&self, cross: Cross) -> Option<Sign> {
        match *self {
            Star { e1, e2 } => Some(if cross == Cross::One { e1 } else { e2 }),
            _ => None,
        }
    }

    pub fn curve_set(&self, n: i64) -> CurveSet {
        match *self {
            Half { cross, idx, .. } => CurveSet::Fixed(CurveClass::Bridge {
                bot: -idx,
                top: idx + if cross == Cross::Two { n } else { 0 },
            }),
            Pair { i, k } => CurveSet::SigmaPair(
                CurveClass::Bridge { bot: i, top: k - i },
                CurveClass::Bridge { bot: i - k, top: -i },
            ),
            Tors { res, len } => CurveSet::SigmaPair(
                CurveClass::UpperArc { a: res - len - 1, b: res },
                CurveClass::LowerArc { a: -res, b: len + 1 - res },
            ),
            Star { .. } | PwLoop { .. } | SpLoop { .. } => CurveSet::Semicircles,
        }
    }

    /// Bottom endpoints of the bridge lifts used for anchoring and windows.
    pub fn bridge_bottoms(&self, n: i64) -> Vec<i64> {
        match self.curve_set(n) {
            CurveSet::Fixed(CurveClass::Bridge { bot, .. }) => vec![bot],
            CurveSet::SigmaPair(CurveClass::Bridge { bot: a, .. }, CurveClass::Bridge { bot: b, .. }) => {
                vec![a, b]
            }
            _ => vec![],
        }
    }

    pub fn phi(&self) -> SheafName {
        match *self {
            Half { cross, idx, sign } => {
                let form = match (cross, sign) {
                    (Cross::One, Sign::Plus) => LineForm::F12,
                    (Cross::One, Sign::Minus) => LineForm::F0,
                    (Cross::Two, Sign::Plus) => LineForm::F1,
                    (Cross::Two, Sign::Minus) => LineForm::F2,
                };
                SheafName::LineBundle { form, i: idx }
            }
            Pair { i, k } => SheafName::ExtBundle { i, k },
            Tors { res, len } => SheafName::TorsN { res, len },
            PwLoop { orbit, j } => SheafName::TorsHom { orbit, len: j },
            Star { e1, e2 } => {
                let (lam, sign) = if e1 == e2 { (1, e1) } else { (-1, e1) };
                sp_name(lam, 1, sign)
            }
            SpLoop { lam, j, sign } => sp_name(lam, j, sign),
        }
    }

    pub fn phi_inv(n: i64, s: &SheafName) -> Result<Self> {
        s.check(n)?;
        Ok(match *s {
            SheafName::LineBundle { form, i } => {
                let (cross, sign) = match form {
                    LineForm::F12 => (Cross::One, Sign::Plus),
                    LineForm::F0 => (Cross::One, Sign::Minus),
                    LineForm::F1 => (Cross::Two, Sign::Plus),
                    LineForm::F2 => (Cross::Two, Sign::Minus),
                };
                Half { cross, idx: i, sign }
            }
            SheafName::ExtBundle { i, k } => Pair { i, k },
            SheafName::TorsN { res, len } => Tors { res, len },
            SheafName::TorsHom { orbit, len } => PwLoop { orbit, j: len },
            SheafName::Tors2 { pt, res, len } => {
                let lam = if pt == Point2::Inf { 1 } else { -1 };
                // residue (j+1) mod 2 carries the plus sign
                let sign = if res == (len + 1).rem_euclid(2) { Sign::Plus } else { Sign::Minus };
                SkewCurve::sploop(lam, len, sign)?
            }
        })
    }

    /// The curve attached to X(x) when g is attached to X.
    pub fn shift(&self, n: i64, x: LElement) -> Result<Self> {
        if x.n != n {
            return Err(Error::MismatchedN(n, x.n));
        }
        self.check(n)?;
        let lo = x.l3 + x.l * n;
        let hi = x.l3 + (x.l1 + x.l2 + x.l) * n;
        Ok(match *self {
            Half { sign, .. } => {
                let CurveSet::Fixed(CurveClass::Bridge { bot, top }) = self.curve_set(n) else {
                    unreachable!()
                };
                half_from_bridge(n, bot - lo, top + hi, sign.flip_if(x.l1 == 1))?
            }
            Pair { i, k } => pair_from_bridge(n, i - lo, k - i + hi)?,
            Tors { res, len } => Tors { res: (res + x.l3).rem_euclid(n), len },
            Star { .. } | SpLoop { .. } => {
                let SheafName::Tors2 { pt, res, len } = self.phi() else { unreachable!() };
                let step = if pt == Point2::Inf { x.l1 } else { x.l2 };
                SkewCurve::phi_inv(n, &SheafName::Tors2 { pt, res: (res + step).rem_euclid(2), len })?
            }
            PwLoop { .. } => *self,
        })
    }

    /// Auslander-Reiten translation, the shift by omega.
    pub fn tau(&self, n: i64) -> Result<Self> {
        self.shift(n, LElement::omega(n))
    }

    /// Descriptive name of the matching equivariant object on the double cover.
    pub fn equivariant_description(&self, n: i64) -> Result<String> {
        self.check(n)?;
        Ok(match *self {
            Half { .. } => {
                let SheafName::LineBundle { form, i } = self.phi() else { unreachable!() };
                // O(i*x3) and O(x1-x2+i*x3) are multiples of omega up to x1-x2; O(x1+..), O(x2+..) add c
                let m = -i;
                let odd = m.rem_euclid(2) == 1;
                let (with_c, alpha) = match form {
                    LineForm::F0 => (0, Sign::Minus),
                    LineForm::F12 => (0, Sign::Plus),
                    LineForm::F1 => (1, Sign::Minus.flip_if(odd)),
                    LineForm::F2 => (1, Sign::Plus.flip_if(odd)),
                };
                let mut arg = String::new();
                write_terms(&mut arg, &[(with_c, "c"), (m, "w")], false);
                format!("(O_Y({arg}), alpha^{alpha})")
            }
            Pair { i, k } => {
                let mut w = String::new();
                write_terms(&mut w, &[(i + 2, "w")], false);
                let w = if w == "0" { String::new() } else if w.starts_with('-') { w } else { format!("+{w}") };
                format!("(O_Y({k}*y1{w}) (+) O_Y({k}*y2{w}), alpha)")
            }
            Tors { res, len } => format!("(S_{{0,{res}}}^{{({len})}} (+) S_{{inf,{res}}}^{{({len})}}, alpha)"),
            PwLoop { orbit, j } => format!(
                "(S_{{{}}}^{{({j})}} (+) S_{{{}}}^{{({j})}}, alpha)",
                orbit.rep(),
                orbit.inverse()
            ),
            Star { .. } | SpLoop { .. } => {
                let SheafName::Tors2 { pt, res, len } = self.phi() else { unreachable!() };
                let lam = if pt == Point2::Inf { 1 } else { -1 };
                // residue 0 carries alpha^-, residue 1 carries alpha^+
                let alpha = if res == 0 { Sign::Minus } else { Sign::Plus };
                format!("(S_{{{lam}}}^{{({len})}}, alpha^{alpha})")
            }
        })
    }
}

fn sp_name(lam: i64, j: i64, sign: Sign) -> SheafName {
    let pt = if lam == 1 { Point2::Inf } else { Point2::Zero };
    let res = match sign {
        Sign::Plus => (j + 1).rem_euclid(2),
        Sign::Minus => j.rem_euclid(2),
    };
    SheafName::Tors2 { pt, res, len: j }
}

/// The half of the sigma-fixed bridge D[bot^top] with the given sign.
pub fn half_from_bridge(n: i64, bot: i64, top: i64, sign: Sign) -> Result<SkewCurve> {
    let s = bot + top;
    if s.rem_euclid(n) != 0 {
        return Err(Error::MalformedCurve(format!("D[{bot}^{top}] is not sigma-fixed")));
    }
    let m = s / n;
    let top = top - m.div_euclid(2) * n;
    let odd = m.rem_euclid(2);
    let cross = if odd == 0 { Cross::One } else { Cross::Two };
    Ok(Half { cross, idx: top - odd * n, sign })
}

/// The sigma-pair containing the bridge D[bot^top].
pub fn pair_from_bridge(n: i64, bot: i64, top: i64) -> Result<SkewCurve> {
    let s = bot + top;
    let r = s.rem_euclid(2 * n);
    if r == 0 || r == n {
        return Err(Error::MalformedCurve(format!("D[{bot}^{top}] is sigma-fixed")));
    }
    let (bot, top, s) = if r > n { (-top, -bot, -s) } else { (bot, top, s) };
    let q = s.div_euclid(2 * n);
    let _ = top;
    Ok(Pair { i: bot - q * n, k: s - 2 * q * n })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LineForm {
    F0,
    F12,
    F1,
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Point2 {
    Inf,
    Zero,
}

/// Name of an indecomposable sheaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SheafName {
    /// O(i*x3), O(x1-x2+i*x3), O(x1+i*x3), O(x2+i*x3).
    LineBundle { form: LineForm, i: i64 },
    /// E_{O(-(i+1)x3)}<(k-1)x3>.
    ExtBundle { i: i64, k: i64 },
    /// Torsion in the tube of period n.
    TorsN { res: i64, len: i64 },
    /// Torsion in a tube of period 2.
    Tors2 { pt: Point2, res: i64, len: i64 },
    /// Torsion in the homogeneous tube of the orbit.
    TorsHom { orbit: LambdaOrbit, len: i64 },
}

impl SheafName {
    pub fn check(&self, n: i64) -> Result<()> {
        if n < 2 {
            return Err(Error::BadWeight(n));
        }
        let bad = |m: String| Err(Error::MalformedCurve(m));
        match *self {
            SheafName::ExtBundle { k, .. } if !(1..n).contains(&k) => bad(format!("extension k={k}")),
            SheafName::TorsN { res, len } if !(0..n).contains(&res) || len < 1 => {
                bad(format!("torsion res={res} len={len}"))
            }
            SheafName::Tors2 { res, len, .. } if !(0..2).contains(&res) || len < 1 => {
                bad(format!("torsion res={res} len={len}"))
            }
            SheafName::TorsHom { len, .. } if len < 1 => bad(format!("torsion len={len}")),
            _ => Ok(()),
        }
    }

    /// The degree of a line bundle as an element of L(2,2,n).
    pub fn line_element(&self, n: i64) -> Option<LElement> {
        match *self {
            SheafName::LineBundle { form, i } => {
                let (a1, a2) = match form {
                    LineForm::F0 => (0, 0),
                    LineForm::F12 => (1, -1),
                    LineForm::F1 => (1, 0),
                    LineForm::F2 => (0, 1),
                };
                Some(LElement::normalize_unchecked(n, a1, a2, i, 0))
            }
            _ => None,
        }
    }

    /// The line bundle O(x).
    pub fn line_bundle(x: LElement) -> SheafName {
        let n = x.n;
        let (form, i) = match (x.l1, x.l2) {
            (0, 0) => (LineForm::F0, x.l3 + x.l * n),
            (1, 1) => (LineForm::F12, x.l3 + (x.l + 1) * n),
            (1, 0) => (LineForm::F1, x.l3 + x.l * n),
            _ => (LineForm::F2, x.l3 + x.l * n),
        };
        SheafName::LineBundle { form, i }
    }

    pub fn parse(n: i64, s: &str) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadWeight(n));
        }
        let err = || Error::Parse(format!("bad sheaf name {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let name = if s.starts_with('O') {
            SheafName::line_bundle(parse_line(n, &s).ok_or_else(err)?)
        } else if let Some(rest) = s.strip_prefix("E_{") {
            let (line, rest) = rest.split_once("}<").ok_or_else(err)?;
            let x = rest.strip_suffix('>').ok_or_else(err)?;
            let y = parse_line(n, line).ok_or_else(err)?;
            let (a1, a2, a3, a) = parse_combination(x)?;
            if a1 != 0 || a2 != 0 || a != 0 || !(0..=n - 2).contains(&a3) {
                return Err(Error::Parse(format!("extension degree {x:?} outside [0,(n-2)x3]")));
            }
            // E_L<x> is invariant under x1-x2, so L may be taken of the form O(j*x3)
            let y = if y.l1 == 1 && y.l2 == 1 { y + LElement::x1(n) - LElement::x2(n) } else { y };
            if y.l1 != 0 || y.l2 != 0 {
                return Err(Error::Parse(format!("extension base {line:?} not of the form O(j*x3)")));
            }
            SheafName::ExtBundle { i: -(y.l3 + y.l * n) - 1, k: a3 + 1 }
        } else if let Some(rest) = s.strip_prefix("S_{") {
            let (param, rest) = rest.split_once("}^{(").ok_or_else(err)?;
            let len: i64 = rest.strip_suffix(")}").ok_or_else(err)?.parse().map_err(|_| err())?;
            let res_of = |r: &str| -> Result<i64> { r.parse::<i64>().map_err(|_| err()) };
            if let Some(r) = param.strip_prefix("1,") {
                SheafName::TorsN { res: res_of(r)?.rem_euclid(n), len }
            } else if let Some(r) = param.strip_prefix("inf,") {
                SheafName::Tors2 { pt: Point2::Inf, res: res_of(r)?.rem_euclid(2), len }
            } else if let Some(r) = param.strip_prefix("0,") {
                SheafName::Tors2 { pt: Point2::Zero, res: res_of(r)?.rem_euclid(2), len }
            } else {
                let (a, b) = match param.split_once('|') {
                    Some((a, b)) => (parse_ratio(a)?, Some(parse_ratio(b)?)),
                    None => (parse_ratio(param)?, None),
                };
                let orbit = LambdaOrbit::new(a)?;
                if let Some(b) = b {
                    if b * a != Ratio::from_integer(1) {
                        return Err(Error::Parse(format!("{param:?} is not an orbit {{l, 1/l}}")));
                    }
                }
                SheafName::TorsHom { orbit, len }
            }
        } else {
            return Err(err());
        };
        name.check(n)?;
        Ok(name)
    }
}

fn parse_line(n: i64, s: &str) -> Option<LElement> {
    if s == "O" {
        return Some(LElement::zero(n));
    }
    let body = s.strip_prefix("O(")?.strip_suffix(')')?;
    let (a1, a2, a3, a) = parse_combination(body).ok()?;
    Some(LElement::normalize_unchecked(n, a1, a2, a3, a))
}

fn line_text(terms: &[(i64, &str)]) -> String {
    if terms.iter().all(|&(c, _)| c == 0) {
        return "O".into();
    }
    let mut s = String::new();
    write_terms(&mut s, terms, false);
    format!("O({s})")
}

impl fmt::Display for SheafName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SheafName::LineBundle { form, i } => {
                let terms: &[(i64, &str)] = match form {
                    LineForm::F0 => &[(i, "x3")],
                    LineForm::F12 => &[(1, "x1"), (-1, "x2"), (i, "x3")],
                    LineForm::F1 => &[(1, "x1"), (i, "x3")],
                    LineForm::F2 => &[(1, "x2"), (i, "x3")],
                };
                f.write_str(&line_text(terms))
            }
            SheafName::ExtBundle { i, k } => {
                let mut x = String::new();
                write_terms(&mut x, &[(k - 1, "x3")], false);
                write!(f, "E_{{{}}}<{x}>", line_text(&[(-(i + 1), "x3")]))
            }
            SheafName::TorsN { res, len } => write!(f, "S_{{1,{res}}}^{{({len})}}"),
            SheafName::Tors2 { pt, res, len } => {
                let p = if pt == Point2::Inf { "inf" } else { "0" };
                write!(f, "S_{{{p},{res}}}^{{({len})}}")
            }
            SheafName::TorsHom { orbit, len } => write!(f, "S_{{{orbit}}}^{{({len})}}"),
        }
    }
}

impl fmt::Display for SkewCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Half { cross, idx, sign } => write!(f, "Half({},{idx},{sign})", cross.index()),
            Pair { i, k } => write!(f, "Pair({i},{k})"),
            Tors { res, len } => write!(f, "Tors({res},{len})"),
            Star { e1, e2 } => write!(f, "Star({e1},{e2})"),
            PwLoop { orbit, j } => write!(f, "PwLoop({orbit},{j})"),
            SpLoop { lam, j, sign } => write!(f, "SpLoop({lam},{j},{sign})"),
        }
    }
}
