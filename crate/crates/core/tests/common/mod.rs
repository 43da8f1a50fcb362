//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use num_rational::Ratio;
use rand::Rng;

use skewtilt::skewcurves::{half_from_bridge, pair_from_bridge};
use skewtilt::{Cross, LElement, LambdaOrbit, Point2, SheafName, Sign, SkewCurve};

/// Coordinates separating the elements of L(2,2,n): degree and the parities of the x1, x2
/// coefficients. Two coefficient vectors name the same element iff their keys agree.
pub fn key(n: i64, a1: i64, a2: i64, a3: i64, a: i64) -> (i64, i64, i64) {
    (n * (a1 + a2) + 2 * a3 + 2 * n * a, a1.rem_euclid(2), a2.rem_euclid(2))
}

/// Brute force: does some nonnegative combination of x1, x2, x3 equal the given element?
pub fn effective_by_search(n: i64, a1: i64, a2: i64, a3: i64, a: i64) -> bool {
    let target = key(n, a1, a2, a3, a);
    let d = target.0;
    if d < 0 {
        return false;
    }
    for b1 in 0..=d / n {
        for b2 in 0..=(d - b1 * n) / n {
            let rest = d - n * (b1 + b2);
            if rest % 2 == 0 && key(n, b1, b2, rest / 2, 0) == target {
                return true;
            }
        }
    }
    false
}

pub fn elem_effective(x: LElement) -> bool {
    effective_by_search(x.n, x.l1, x.l2, x.l3, x.l)
}

/// -c <= x <= c, decided by search.
pub fn in_c_interval_by_search(x: LElement) -> bool {
    effective_by_search(x.n, x.l1, x.l2, x.l3, x.l + 1) && effective_by_search(x.n, -x.l1, -x.l2, -x.l3, 1 - x.l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    X1,
    X2,
    X3,
}

fn bridge_of(n: i64, g: &SkewCurve) -> Option<(i64, i64)> {
    match *g {
        SkewCurve::Half { cross: Cross::One, idx, .. } => Some((-idx, idx)),
        SkewCurve::Half { cross: Cross::Two, idx, .. } => Some((-idx, n + idx)),
        SkewCurve::Pair { i, k } => Some((i, k - i)),
        _ => None,
    }
}

/// One generator step, read off from how the endpoints of the underlying bridge move.
pub fn gen_step(n: i64, g: &SkewCurve, s: Gen) -> SkewCurve {
    if let Some((bot, top)) = bridge_of(n, g) {
        let (bot, top, flip) = match s {
            Gen::X1 => (bot, top + n, true),
            Gen::X2 => (bot, top + n, false),
            Gen::X3 => (bot - 1, top + 1, false),
        };
        return match *g {
            SkewCurve::Half { sign, .. } => half_from_bridge(n, bot, top, sign.flip_if(flip)).unwrap(),
            _ => pair_from_bridge(n, bot, top).unwrap(),
        };
    }
    match *g {
        SkewCurve::Tors { res, len } => {
            let res = if s == Gen::X3 { (res + 1).rem_euclid(n) } else { res };
            SkewCurve::Tors { res, len }
        }
        SkewCurve::PwLoop { .. } => *g,
        SkewCurve::Star { .. } | SkewCurve::SpLoop { .. } => {
            let SheafName::Tors2 { pt, res, len } = g.phi() else { unreachable!() };
            let moves = matches!((pt, s), (Point2::Inf, Gen::X1) | (Point2::Zero, Gen::X2));
            let res = if moves { (res + 1) % 2 } else { res };
            SkewCurve::phi_inv(n, &SheafName::Tors2 { pt, res, len }).unwrap()
        }
        _ => unreachable!(),
    }
}

pub fn gen_repeat(n: i64, g: &SkewCurve, s: Gen, times: i64) -> SkewCurve {
    (0..times).fold(*g, |h, _| gen_step(n, &h, s))
}

/// Checks shift(g, x) against generator steps: x = l1*x1 + l2*x2 + l3*x3 + l*c with c = 2*x1.
/// For l < 0 both sides are pushed forward by -l*c first.
pub fn shift_matches_generators(n: i64, g: &SkewCurve, x: LElement) -> bool {
    let got = g.shift(n, x).unwrap();
    let mut want = gen_repeat(n, g, Gen::X1, x.l1);
    want = gen_repeat(n, &want, Gen::X2, x.l2);
    want = gen_repeat(n, &want, Gen::X3, x.l3);
    if x.l >= 0 {
        want = gen_repeat(n, &want, Gen::X1, 2 * x.l);
        got == want
    } else {
        gen_repeat(n, &got, Gen::X1, -2 * x.l) == want
    }
}

pub fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn random_elem(rng: &mut impl Rng, n: i64, span: i64) -> LElement {
    LElement::normalize(
        n,
        rng.gen_range(-span..=span),
        rng.gen_range(-span..=span),
        rng.gen_range(-span * n..=span * n),
        rng.gen_range(-span..=span),
    )
    .unwrap()
}

pub fn random_curve(rng: &mut impl Rng, n: i64, span: i64) -> SkewCurve {
    match rng.gen_range(0..6) {
        0 | 1 => SkewCurve::Half {
            cross: if rng.gen() { Cross::One } else { Cross::Two },
            idx: rng.gen_range(-span..=span),
            sign: random_sign(rng),
        },
        2 => SkewCurve::Pair { i: rng.gen_range(-span..=span), k: rng.gen_range(1..n) },
        3 => SkewCurve::Tors { res: rng.gen_range(0..n), len: rng.gen_range(1..=n + 2) },
        4 => SkewCurve::Star { e1: random_sign(rng), e2: random_sign(rng) },
        _ => SkewCurve::sploop(if rng.gen() { 1 } else { -1 }, rng.gen_range(2..=n + 2), random_sign(rng)).unwrap(),
    }
}

/// Every skew-curve of the exhaustive window: indices within 3n, lengths and powers up to n+2,
/// and a few homogeneous parameters.
pub fn window_curves(n: i64) -> Vec<SkewCurve> {
    let r = 3 * n;
    let mut out = Vec::new();
    for idx in -r..=r {
        for cross in [Cross::One, Cross::Two] {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(SkewCurve::Half { cross, idx, sign });
            }
        }
        for k in 1..n {
            out.push(SkewCurve::Pair { i: idx, k });
        }
    }
    for len in 1..=n + 2 {
        for res in 0..n {
            out.push(SkewCurve::Tors { res, len });
        }
        for lam in [1, -1] {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(SkewCurve::sploop(lam, len, sign).unwrap());
            }
        }
        for (p, q) in [(2, 1), (-3, 1), (3, 2), (1, 5)] {
            out.push(SkewCurve::PwLoop { orbit: LambdaOrbit::new(Ratio::new(p, q)).unwrap(), j: len });
        }
    }
    out
}

pub fn halves(r: i64) -> Vec<SkewCurve> {
    let mut out = Vec::new();
    for idx in -r..=r {
        for cross in [Cross::One, Cross::Two] {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(SkewCurve::Half { cross, idx, sign });
            }
        }
    }
    out
}
