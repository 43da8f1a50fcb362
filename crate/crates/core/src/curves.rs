//! Curves on the marked cylinder, the involution sigma and minimal intersection numbers.
//!
//! A lift to the strip R x [0,1] has marked points at the integers on both boundaries.
//! Classes are taken modulo simultaneous translation by n.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cross {
    One,
    Two,
}

impl Cross {
    pub fn index(self) -> usize {
        match self {
            Cross::One => 1,
            Cross::Two => 2,
        }
    }

    pub fn from_index(i: i64) -> Result<Self> {
        match i {
            1 => Ok(Cross::One),
            2 => Ok(Cross::Two),
            _ => Err(Error::Parse(format!("cross must be 1 or 2, got {i}"))),
        }
    }

    pub fn other(self) -> Self {
        match self {
            Cross::One => Cross::Two,
            Cross::Two => Cross::One,
        }
    }
}

impl fmt::Display for Cross {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.index())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveClass {
    /// Segment from (bot, 0) to (top, 1).
    Bridge { bot: i64, top: i64 },
    /// Arc on the lower boundary joining a and b.
    LowerArc { a: i64, b: i64 },
    /// Arc on the upper boundary joining a and b.
    UpperArc { a: i64, b: i64 },
    LoopPower { j: i64 },
}

use CurveClass::*;

impl CurveClass {
    pub fn canonicalize(self, n: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadWeight(n));
        }
        Ok(match self {
            Bridge { bot, top } => {
                let t = bot.div_euclid(n) * n;
                Bridge { bot: bot - t, top: top - t }
            }
            LowerArc { a, b } | UpperArc { a, b } => {
                let (a, b) = (a.min(b), a.max(b));
                if b - a < 2 {
                    return Err(Error::MalformedCurve(format!("arc span {} < 2", b - a)));
                }
                let t = a.div_euclid(n) * n;
                if matches!(self, LowerArc { .. }) {
                    LowerArc { a: a - t, b: b - t }
                } else {
                    UpperArc { a: a - t, b: b - t }
                }
            }
            LoopPower { j } => {
                if j < 1 {
                    return Err(Error::MalformedCurve(format!("loop power {j} < 1")));
                }
                self
            }
        })
    }

    pub fn sigma_image(self) -> Self {
        match self {
            Bridge { bot, top } => Bridge { bot: -top, top: -bot },
            LowerArc { a, b } => UpperArc { a: -b, b: -a },
            UpperArc { a, b } => LowerArc { a: -b, b: -a },
            LoopPower { .. } => self,
        }
    }

    /// Which puncture a sigma-fixed bridge passes through.
    pub fn sigma_fixed_point(self, n: i64) -> Result<Option<Cross>> {
        match self {
            Bridge { bot, top } => {
                let s = (bot + top).rem_euclid(2 * n);
                Ok(if s == 0 {
                    Some(Cross::One)
                } else if s == n {
                    Some(Cross::Two)
                } else {
                    None
                })
            }
            _ => Err(Error::Unsupported(format!("sigma_fixed_point of {self}"))),
        }
    }

    fn span(self) -> i64 {
        match self {
            Bridge { bot, top } => (top - bot).abs(),
            LowerArc { a, b } | UpperArc { a, b } => (b - a).abs(),
            LoopPower { .. } => 0,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad curve {s:?}"));
        let s = s.trim();
        let pair = |body: &str, sep: char| -> Result<(i64, i64)> {
            let (x, y) = body.split_once(sep).ok_or_else(err)?;
            Ok((
                x.trim().parse().map_err(|_| err())?,
                y.trim().parse().map_err(|_| err())?,
            ))
        };
        if let Some(body) = s.strip_prefix("D[").and_then(|r| r.strip_suffix(']')) {
            let (bot, top) = pair(body, '^')?;
            Ok(Bridge { bot, top })
        } else if let Some(body) = s.strip_prefix("D_{").and_then(|r| r.strip_suffix('}')) {
            let (a, b) = pair(body, ',')?;
            Ok(LowerArc { a, b })
        } else if let Some(body) = s.strip_prefix("D^{").and_then(|r| r.strip_suffix('}')) {
            let (a, b) = pair(body, ',')?;
            Ok(UpperArc { a, b })
        } else if let Some(body) = s.strip_prefix("L^") {
            Ok(LoopPower { j: body.parse().map_err(|_| err())? })
        } else {
            Err(err())
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Bridge { bot, top } => write!(f, "D[{bot}^{top}]"),
            LowerArc { a, b } => write!(f, "D_{{{a},{b}}}"),
            UpperArc { a, b } => write!(f, "D^{{{a},{b}}}"),
            LoopPower { j } => write!(f, "L^{j}"),
        }
    }
}

/// Whether exactly one of p, q lies in the open interval (i, j) and the other outside [i, j].
fn interleaves(i: i64, j: i64, p: i64, q: i64) -> bool {
    let inside = |x: i64| i < x && x < j;
    let outside = |x: i64| x < i || x > j;
    (inside(p) && outside(q)) || (inside(q) && outside(p))
}

/// Minimal number of intersection points between two classes on the cylinder.
///
/// For identical classes this counts crossings of a lift with its nonzero translates.
pub fn intersection_number(n: i64, c1: CurveClass, c2: CurveClass) -> Result<u64> {
    let c1 = c1.canonicalize(n)?;
    let c2 = c2.canonicalize(n)?;
    let same = c1 == c2;
    let crosses = |t: i64| -> Result<bool> {
        let s = t * n;
        Ok(match (c1, c2) {
            (Bridge { bot: a, top: b }, Bridge { bot: c, top: d }) => (a - c - s) * (b - d - s) < 0,
            (Bridge { bot, .. }, LowerArc { a, b }) | (LowerArc { a, b }, Bridge { bot, .. }) => {
                a + s < bot && bot < b + s
            }
            (Bridge { top, .. }, UpperArc { a, b }) | (UpperArc { a, b }, Bridge { top, .. }) => {
                a + s < top && top < b + s
            }
            (LowerArc { a: i, b: j }, LowerArc { a: k, b: l })
            | (UpperArc { a: i, b: j }, UpperArc { a: k, b: l }) => interleaves(i, j, k + s, l + s),
            (LowerArc { .. }, UpperArc { .. }) | (UpperArc { .. }, LowerArc { .. }) => false,
            (LoopPower { .. }, _) | (_, LoopPower { .. }) => {
                return Err(Error::Unsupported("intersection number with a loop".into()))
            }
        })
    };
    let bound = (c1.span() + c2.span()) / n + 2;
    let mut count = 0;
    for t in -bound..=bound {
        if same && t == 0 {
            continue;
        }
        if crosses(t)? {
            count += 1;
        }
    }
    for t in [-bound - 2, -bound - 1, bound + 1, bound + 2] {
        debug_assert!(!crosses(t)?, "translate {t} outside the bound still crosses");
    }
    Ok(count)
}
