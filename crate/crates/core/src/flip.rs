//! Flips of skew-arcs, their classification, and the composite mutations of FV pseudo-triangulations.

use std::collections::BTreeSet;
use std::fmt;

use crate::compat::{compatible, is_skew_arc};
use crate::curves::Cross;
use crate::error::{Error, Result};
use crate::lattice::LElement;
use crate::skewcurves::{Sign, SkewCurve};
use crate::triang::{candidates, default_margin, PseudoTri, Witness, ZetaValue};

use SkewCurve::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlipLabel {
    TypeI(u8),
    TypeII(u8),
    TypeIII(u8),
}

impl fmt::Display for FlipLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipLabel::TypeI(k) => write!(f, "I({k})"),
            FlipLabel::TypeII(k) => write!(f, "II({k})"),
            FlipLabel::TypeIII(k) => write!(f, "III({k})"),
        }
    }
}

impl FlipLabel {
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad flip label {s:?}"));
        let (ty, rest) = s.split_once('(').ok_or_else(err)?;
        let k: u8 = rest.strip_suffix(')').ok_or_else(err)?.parse().map_err(|_| err())?;
        match ty {
            "I" if (1..=6).contains(&k) => Ok(FlipLabel::TypeI(k)),
            "II" if (1..=3).contains(&k) => Ok(FlipLabel::TypeII(k)),
            "III" if (1..=3).contains(&k) => Ok(FlipLabel::TypeIII(k)),
            _ => Err(err()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipResult {
    pub new_tri: PseudoTri,
    pub removed: SkewCurve,
    pub added: SkewCurve,
    pub case_label: FlipLabel,
}

/// All skew-arcs completing an almost complete set; there are exactly two.
pub fn complements(n: i64, almost: &BTreeSet<SkewCurve>) -> Result<Vec<SkewCurve>> {
    let list: Vec<&SkewCurve> = almost.iter().collect();
    for (x, a) in list.iter().enumerate() {
        if !is_skew_arc(n, a)? {
            return Err(Error::IllFormed(format!("{a} is not a skew-arc")));
        }
        for b in &list[x + 1..] {
            if !compatible(n, a, b)? {
                return Err(Error::IllFormed(format!("{a} and {b} are not compatible")));
            }
        }
    }
    complements_unchecked(n, almost)
}

fn complements_unchecked(n: i64, almost: &BTreeSet<SkewCurve>) -> Result<Vec<SkewCurve>> {
    let mut found = Vec::new();
    for g in candidates(n, almost, default_margin(n)) {
        if almost.contains(&g) {
            continue;
        }
        let mut ok = true;
        for h in almost {
            if !compatible(n, &g, h)? {
                ok = false;
                break;
            }
        }
        if ok {
            found.push(g);
        }
    }
    if found.len() != 2 {
        return Err(Error::ComplementCount(found.len()));
    }
    Ok(found)
}

pub fn flip(tri: &PseudoTri, g: &SkewCurve) -> Result<FlipResult> {
    if !tri.contains(g) {
        return Err(Error::NotMember(*g));
    }
    let n = tri.n();
    let mut rest = tri.arcs().clone();
    rest.remove(g);
    let found = complements_unchecked(n, &rest)?;
    let added = match found[..] {
        [a, b] if a == *g => b,
        [a, b] if b == *g => a,
        _ => return Err(Error::IllFormed(format!("{g} is not a complement of the rest"))),
    };
    let case_label = classify_flip(tri, g, &added)?;
    rest.insert(added);
    Ok(FlipResult { new_tri: PseudoTri::from_trusted(n, rest), removed: *g, added, case_label })
}

fn half_parts(g: &SkewCurve) -> Option<(Cross, Sign)> {
    match *g {
        Half { cross, sign, .. } => Some((cross, sign)),
        _ => None,
    }
}

fn pick(z: (ZetaValue, ZetaValue), c: Cross) -> ZetaValue {
    if c == Cross::One {
        z.0
    } else {
        z.1
    }
}

/// Labels a flip by the row of the flip table it realizes, checking the result wherever the
/// table determines it from zeta data.
pub fn classify_flip(tri: &PseudoTri, removed: &SkewCurve, added: &SkewCurve) -> Result<FlipLabel> {
    let zeta = tri.zeta()?;
    let zm = tri.zeta_minus(removed)?;
    let zm_at = |c: Cross| zm[c.index() - 1];
    let fail = |why: &str| Err(Error::Unclassified(format!("{removed} -> {added}: {why}")));
    let expect = |ok: bool, label: FlipLabel| if ok { Ok(label) } else { fail(&format!("{label} prediction differs")) };
    match *removed {
        Half { cross: i, .. } => {
            let j = i.other();
            let zi = pick(zeta, i);
            if zi == ZetaValue::Pm(Witness::A0) {
                if let Some((c, s)) = half_parts(added) {
                    if c == i {
                        return expect(Some(s) == zm_at(i), FlipLabel::TypeI(1));
                    }
                } else if let Star { e1, e2 } = *added {
                    return expect(Some(e1) == zm[0] && Some(e2) == zm[1], FlipLabel::TypeI(2));
                }
                return fail("zeta is pm(0) but the result is neither a half at the cross nor a star");
            }
            match *added {
                Star { e1, e2 } => {
                    let (Some(z1), Some(z2)) = (zeta.0.sign(), zeta.1.sign()) else {
                        return fail("I(3) with a two-sided zeta");
                    };
                    let want = if i == Cross::One { (z1.flip(), z2) } else { (z1, z2.flip()) };
                    expect((e1, e2) == want, FlipLabel::TypeI(3))
                }
                Pair { .. } | Tors { .. } => Ok(FlipLabel::TypeI(4)),
                Half { cross, sign, .. } if cross == j => {
                    expect(pick(zeta, j).sign() == Some(sign), FlipLabel::TypeI(5))
                }
                Half { idx, sign, .. } => {
                    // landing on the curve of a remaining half creates a +/- pair there
                    let paired = tri
                        .halves_at(i)
                        .iter()
                        .any(|h| h != removed && matches!(h, Half { idx: k, .. } if *k == idx));
                    if paired {
                        expect(zi.sign() == Some(sign.flip()), FlipLabel::TypeI(6))
                    } else {
                        expect(zi.sign() == Some(sign), FlipLabel::TypeI(5))
                    }
                }
                _ => fail("loop result"),
            }
        }
        Pair { .. } | Tors { .. } => match *added {
            Half { cross, sign, .. } => expect(pick(zeta, cross).sign() == Some(sign), FlipLabel::TypeII(1)),
            Pair { .. } | Tors { .. } => Ok(FlipLabel::TypeII(2)),
            Star { e1, e2 } => {
                expect(zeta.0.sign() == Some(e1) && zeta.1.sign() == Some(e2), FlipLabel::TypeII(3))
            }
            _ => fail("loop result"),
        },
        Star { .. } => {
            let witness_cross = match zeta {
                (ZetaValue::Pm(Witness::A1), _) => Some(Cross::One),
                (_, ZetaValue::Pm(Witness::A2)) => Some(Cross::Two),
                _ => None,
            };
            if let Some(i) = witness_cross {
                return match half_parts(added) {
                    Some((c, s)) if c == i => expect(zm_at(i) == Some(s), FlipLabel::TypeIII(3)),
                    _ => fail("III(3) result is not a half at the witness cross"),
                };
            }
            match *added {
                Pair { .. } | Tors { .. } => Ok(FlipLabel::TypeIII(1)),
                Half { cross, sign, .. } => {
                    expect(pick(zeta, cross).sign() == Some(sign.flip()), FlipLabel::TypeIII(2))
                }
                _ => fail("star replaced by a star or loop"),
            }
        }
        _ => fail("loops are never arcs of a pseudo-triangulation"),
    }
}

/// All flips of a pseudo-triangulation, one per arc.
pub fn neighbors(tri: &PseudoTri) -> Result<Vec<FlipResult>> {
    tri.arcs().iter().map(|g| flip(tri, g)).collect()
}

/// The composite mutation at position i of an FV pseudo-triangulation, with the flips used.
pub fn mu_hat(tri: &PseudoTri, i: i64) -> Result<(PseudoTri, Vec<FlipResult>)> {
    let n = tri.n();
    if !tri.is_fv() {
        return Err(Error::NotFv);
    }
    if !(0..=n).contains(&i) {
        return Err(Error::IllFormed(format!("mutation index {i} outside [0,{n}]")));
    }
    if i == 0 || i == n {
        let cross = if i == 0 { Cross::One } else { Cross::Two };
        let halves = tri.halves_at(cross);
        let run = |first: &SkewCurve, second: &SkewCurve| -> Result<Vec<FlipResult>> {
            let a = flip(tri, first)?;
            let b = flip(&a.new_tri, second)?;
            Ok(vec![a, b])
        };
        let forward = run(&halves[0], &halves[1])?;
        let backward = run(&halves[1], &halves[0])?;
        if forward[1].new_tri != backward[1].new_tri {
            return Err(Error::IllFormed(format!("mutation at {i} depends on the flip order")));
        }
        return Ok((forward[1].new_tri.clone(), forward));
    }
    let g = tri
        .arcs()
        .iter()
        .find(|g| matches!(g, Pair { k, .. } if *k == i))
        .copied()
        .ok_or(Error::NotFv)?;
    let r = flip(tri, &g)?;
    Ok((r.new_tri.clone(), vec![r]))
}

pub fn stable_under_x1_minus_x2(tri: &PseudoTri) -> Result<bool> {
    let n = tri.n();
    let d = LElement::x1(n) - LElement::x2(n);
    Ok(tri.shift(d)?.arcs() == tri.arcs())
}

/// Bit i records whether the mutation at i is again FV, that is a stable tilting bundle.
pub fn iota(tri: &PseudoTri) -> Result<Vec<u8>> {
    if !tri.is_fv() {
        return Err(Error::NotFv);
    }
    (0..=tri.n()).map(|i| Ok(mu_hat(tri, i)?.0.is_fv() as u8)).collect()
}

/// Smallest index whose mutation leaves the FV locus, if any.
pub fn first_iota_zero(tri: &PseudoTri) -> Result<Option<usize>> {
    if !tri.is_fv() {
        return Err(Error::NotFv);
    }
    for i in 0..=tri.n() {
        if !mu_hat(tri, i)?.0.is_fv() {
            return Ok(Some(i as usize));
        }
    }
    Ok(None)
}
