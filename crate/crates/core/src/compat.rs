//! Compatibility of skew-curves: vanishing of Ext^1 in both directions between the named sheaves.

use crate::curves::intersection_number;
use crate::error::{Error, Result};
use crate::skewcurves::{LineForm, Point2, SheafName, SkewCurve};

use SkewCurve::*;

/// dim Ext^1(S, L) for a simple S in a tube of period 2 and a line bundle L.
pub fn ext1_dim_star_line(simple: &SheafName, line: &SheafName) -> Result<u8> {
    let (SheafName::Tors2 { pt, res, len: 1 }, SheafName::LineBundle { form, .. }) = (*simple, *line) else {
        return Err(Error::Unsupported(format!("Ext^1({simple}, {line})")));
    };
    let row: [u8; 4] = match (pt, res) {
        (Point2::Inf, 0) => [1, 0, 0, 1],
        (Point2::Inf, _) => [0, 1, 1, 0],
        (Point2::Zero, 0) => [1, 0, 1, 0],
        (Point2::Zero, _) => [0, 1, 0, 1],
    };
    Ok(match form {
        LineForm::F0 => row[0],
        LineForm::F12 => row[1],
        LineForm::F1 => row[2],
        LineForm::F2 => row[3],
    })
}

/// Total number of intersections between the curve sets of two bridge or boundary-arc skew-curves.
pub fn total_intersection(n: i64, g1: &SkewCurve, g2: &SkewCurve) -> Result<u64> {
    let mut total = 0;
    for a in g1.curve_set(n).curves() {
        for b in g2.curve_set(n).curves() {
            total += intersection_number(n, a, b)?;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tube {
    PeriodN,
    Period2(i64),
    Homogeneous(crate::skewcurves::LambdaOrbit),
}

fn tube(g: &SkewCurve) -> Option<Tube> {
    match *g {
        Tors { .. } => Some(Tube::PeriodN),
        Star { e1, e2 } => Some(Tube::Period2(if e1 == e2 { 1 } else { -1 })),
        SpLoop { lam, .. } => Some(Tube::Period2(lam)),
        PwLoop { orbit, .. } => Some(Tube::Homogeneous(orbit)),
        Half { .. } | Pair { .. } => None,
    }
}

fn is_loop(g: &SkewCurve) -> bool {
    matches!(g, PwLoop { .. } | SpLoop { .. })
}

pub fn is_skew_arc(n: i64, g: &SkewCurve) -> Result<bool> {
    g.check(n)?;
    match *g {
        Half { .. } | Pair { .. } | Tors { .. } => {
            let rigid = total_intersection(n, g, g)? == 0;
            if let Tors { len, .. } = *g {
                debug_assert_eq!(rigid, len <= n - 1);
            }
            Ok(rigid)
        }
        Star { .. } => Ok(true),
        PwLoop { .. } | SpLoop { .. } => Ok(false),
    }
}

pub fn compatible(n: i64, g1: &SkewCurve, g2: &SkewCurve) -> Result<bool> {
    g1.check(n)?;
    g2.check(n)?;
    if g1 == g2 {
        return is_skew_arc(n, g1);
    }
    if is_loop(g1) || is_loop(g2) {
        return Ok(match (tube(g1), tube(g2)) {
            (Some(a), Some(b)) => a != b,
            _ => false,
        });
    }
    Ok(match (*g1, *g2) {
        (Half { cross: c1, idx: i1, sign: s1 }, Half { cross: c2, idx: i2, sign: s2 }) if c1 == c2 => {
            if i1 == i2 {
                true
            } else {
                let by_count = s1 == s2 && total_intersection(n, g1, g2)? == 1;
                debug_assert_eq!(by_count, s1 == s2 && (i1 - i2).abs() <= n);
                by_count
            }
        }
        (Star { .. }, Star { e1, e2 }) => {
            let (f1, f2) = (g1.star_coord(crate::Cross::One), g1.star_coord(crate::Cross::Two));
            (Some(e1) == f1) != (Some(e2) == f2)
        }
        (Star { .. }, Half { cross, sign, .. }) | (Half { cross, sign, .. }, Star { .. }) => {
            let star = if g1.is_star() { g1 } else { g2 };
            star.star_coord(cross) == Some(sign)
        }
        (Star { .. }, Pair { .. }) | (Pair { .. }, Star { .. }) => false,
        (Star { .. }, Tors { .. }) | (Tors { .. }, Star { .. }) => true,
        _ => total_intersection(n, g1, g2)? == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::Cross;
    use crate::skewcurves::Sign;

    fn half(cross: Cross, idx: i64, sign: Sign) -> SkewCurve {
        Half { cross, idx, sign }
    }

    #[test]
    fn half_examples() {
        let n = 4;
        assert!(compatible(n, &half(Cross::One, 0, Sign::Minus), &half(Cross::One, 2, Sign::Minus)).unwrap());
        assert!(!compatible(n, &half(Cross::One, 0, Sign::Plus), &half(Cross::One, 2, Sign::Minus)).unwrap());
        assert!(compatible(n, &half(Cross::One, 0, Sign::Plus), &half(Cross::One, 0, Sign::Minus)).unwrap());
        assert!(!compatible(n, &half(Cross::One, 0, Sign::Plus), &half(Cross::One, 5, Sign::Plus)).unwrap());
    }

    #[test]
    fn star_examples() {
        let n = 3;
        let s = |e1, e2| Star { e1, e2 };
        use Sign::*;
        assert!(!compatible(n, &s(Plus, Plus), &s(Minus, Minus)).unwrap());
        assert!(!compatible(n, &s(Plus, Minus), &s(Minus, Plus)).unwrap());
        assert!(compatible(n, &s(Plus, Plus), &s(Minus, Plus)).unwrap());
        assert!(compatible(n, &s(Plus, Plus), &s(Plus, Plus)).unwrap());
        assert!(!compatible(n, &s(Plus, Plus), &Pair { i: 0, k: 1 }).unwrap());
        assert!(compatible(n, &s(Plus, Plus), &Tors { res: 0, len: 2 }).unwrap());
        assert!(compatible(n, &s(Plus, Minus), &half(Cross::Two, 4, Minus)).unwrap());
        assert!(!compatible(n, &s(Plus, Minus), &half(Cross::One, 4, Minus)).unwrap());
    }

    #[test]
    fn skew_arc_examples() {
        let n = 4;
        assert!(is_skew_arc(n, &Tors { res: 2, len: n - 1 }).unwrap());
        assert!(!is_skew_arc(n, &Tors { res: 2, len: n }).unwrap());
        for i in -6..6 {
            for k in 1..n {
                assert!(is_skew_arc(n, &Pair { i, k }).unwrap());
            }
        }
        assert!(!is_skew_arc(n, &SkewCurve::sploop(1, 2, Sign::Plus).unwrap()).unwrap());
    }

    #[test]
    fn loop_rules() {
        let n = 3;
        let lp = SkewCurve::pwloop(num_rational::Ratio::from_integer(2), 1).unwrap();
        let lq = SkewCurve::pwloop(num_rational::Ratio::from_integer(3), 1).unwrap();
        let sp = SkewCurve::sploop(1, 2, Sign::Plus).unwrap();
        assert!(!compatible(n, &lp, &lp).unwrap());
        assert!(compatible(n, &lp, &lq).unwrap());
        assert!(!compatible(n, &lp, &Pair { i: 0, k: 1 }).unwrap());
        assert!(compatible(n, &lp, &Tors { res: 0, len: 1 }).unwrap());
        assert!(!compatible(n, &sp, &Star { e1: Sign::Minus, e2: Sign::Minus }).unwrap());
        assert!(compatible(n, &sp, &Star { e1: Sign::Minus, e2: Sign::Plus }).unwrap());
        assert!(compatible(n, &sp, &lp).unwrap());
    }

    #[test]
    fn table_two_entries() {
        let s = |pt, res| SheafName::Tors2 { pt, res, len: 1 };
        let l = |form| SheafName::LineBundle { form, i: 7 };
        assert_eq!(ext1_dim_star_line(&s(Point2::Inf, 0), &l(LineForm::F0)).unwrap(), 1);
        assert_eq!(ext1_dim_star_line(&s(Point2::Zero, 0), &l(LineForm::F1)).unwrap(), 1);
        assert_eq!(ext1_dim_star_line(&s(Point2::Inf, 1), &l(LineForm::F2)).unwrap(), 0);
        assert!(ext1_dim_star_line(&l(LineForm::F2), &l(LineForm::F2)).is_err());
    }
}
