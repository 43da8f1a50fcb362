//! The string group L(2,2,n): generators x1, x2, x3 with 2x1 = 2x2 = n*x3 = c.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// An element l1*x1 + l2*x2 + l3*x3 + l*c in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LElement {
    pub n: i64,
    pub l1: i64,
    pub l2: i64,
    pub l3: i64,
    pub l: i64,
}

impl LElement {
    /// Normal form of a1*x1 + a2*x2 + a3*x3 + a*c.
    pub fn normalize(n: i64, a1: i64, a2: i64, a3: i64, a: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadWeight(n));
        }
        Ok(Self::normalize_unchecked(n, a1, a2, a3, a))
    }

    pub(crate) fn normalize_unchecked(n: i64, a1: i64, a2: i64, a3: i64, a: i64) -> Self {
        LElement {
            n,
            l1: a1.rem_euclid(2),
            l2: a2.rem_euclid(2),
            l3: a3.rem_euclid(n),
            l: a + a1.div_euclid(2) + a2.div_euclid(2) + a3.div_euclid(n),
        }
    }

    pub fn zero(n: i64) -> Self {
        Self::normalize_unchecked(n, 0, 0, 0, 0)
    }

    pub fn c(n: i64) -> Self {
        Self::normalize_unchecked(n, 0, 0, 0, 1)
    }

    pub fn x1(n: i64) -> Self {
        Self::normalize_unchecked(n, 1, 0, 0, 0)
    }

    pub fn x2(n: i64) -> Self {
        Self::normalize_unchecked(n, 0, 1, 0, 0)
    }

    pub fn x3(n: i64) -> Self {
        Self::normalize_unchecked(n, 0, 0, 1, 0)
    }

    /// The dualizing element c - x1 - x2 - x3.
    pub fn omega(n: i64) -> Self {
        Self::normalize_unchecked(n, -1, -1, -1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.l1 == 0 && self.l2 == 0 && self.l3 == 0 && self.l == 0
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MismatchedN(self.n, other.n));
        }
        Ok(Self::normalize_unchecked(
            self.n,
            self.l1 + other.l1,
            self.l2 + other.l2,
            self.l3 + other.l3,
            self.l + other.l,
        ))
    }

    pub fn scale(self, k: i64) -> Self {
        Self::normalize_unchecked(self.n, k * self.l1, k * self.l2, k * self.l3, k * self.l)
    }

    /// Effective means a nonnegative combination of x1, x2, x3; in normal form this is l >= 0.
    pub fn is_effective(&self) -> bool {
        self.l >= 0
    }

    /// Whether -c <= self <= c.
    pub fn in_c_interval(&self) -> bool {
        let c = Self::c(self.n);
        (*self + c).is_effective() && (c - *self).is_effective()
    }

    /// Degree with deg x1 = deg x2 = n, deg x3 = 2, deg c = 2n.
    pub fn degree(&self) -> i64 {
        self.n * (self.l1 + self.l2) + 2 * self.l3 + 2 * self.n * self.l
    }

    pub fn parse(n: i64, s: &str) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadWeight(n));
        }
        let (a1, a2, a3, a) = parse_combination(s)?;
        Ok(Self::normalize_unchecked(n, a1, a2, a3, a))
    }
}

impl Add for LElement {
    type Output = LElement;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("mismatched weight parameters")
    }
}

impl Neg for LElement {
    type Output = LElement;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Sub for LElement {
    type Output = LElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// Writes a*sym with sign handling, for building "x1 - 2*x3" style sums.
pub(crate) fn write_terms(out: &mut String, terms: &[(i64, &str)], spaced: bool) {
    let mut first = true;
    for &(coef, sym) in terms {
        if coef == 0 {
            continue;
        }
        let mag = coef.abs();
        if first {
            if coef < 0 {
                out.push('-');
            }
        } else if spaced {
            out.push_str(if coef < 0 { " - " } else { " + " });
        } else {
            out.push(if coef < 0 { '-' } else { '+' });
        }
        if sym.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(sym);
        } else {
            out.push_str(&format!("{mag}*{sym}"));
        }
        first = false;
    }
    if first {
        out.push('0');
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_terms(
            &mut s,
            &[(self.l1, "x1"), (self.l2, "x2"), (self.l3, "x3"), (self.l, "c")],
            true,
        );
        f.write_str(&s)
    }
}

/// Parses an integer combination of x1, x2, x3, c such as "x1 - 2*x3 + c" or "3x3".
pub(crate) fn parse_combination(s: &str) -> Result<(i64, i64, i64, i64)> {
    let err = || Error::Parse(format!("bad lattice expression {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    let mut acc = [0i64; 4];
    let bytes = compact.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1;
                pos += 1
            }
            _ if pos > 0 => return Err(err()),
            _ => {}
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef: Option<i64> = if pos > start {
            Some(compact[start..pos].parse().map_err(|_| err())?)
        } else {
            None
        };
        if pos < bytes.len() && bytes[pos] == b'*' {
            if coef.is_none() {
                return Err(err());
            }
            pos += 1;
        }
        let slot = if compact[pos..].starts_with("x1") {
            pos += 2;
            Some(0)
        } else if compact[pos..].starts_with("x2") {
            pos += 2;
            Some(1)
        } else if compact[pos..].starts_with("x3") {
            pos += 2;
            Some(2)
        } else if compact[pos..].starts_with('c') {
            pos += 1;
            Some(3)
        } else {
            None
        };
        match (coef, slot) {
            (Some(k), None) if k == 0 => {}
            (None, None) => return Err(err()),
            (Some(_), None) => return Err(err()),
            (k, Some(ix)) => acc[ix] += sign * k.unwrap_or(1),
        }
        if pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            return Err(err());
        }
    }
    Ok((acc[0], acc[1], acc[2], acc[3]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(LElement::normalize(4, 0, 0, 0, 0).unwrap(), LElement::zero(4));
        let e = LElement::normalize(4, 1, -1, 0, 0).unwrap();
        assert_eq!((e.l1, e.l2, e.l3, e.l), (1, 1, 0, -1));
        let w = LElement::omega(4);
        assert_eq!((w.l1, w.l2, w.l3, w.l), (1, 1, 3, -2));
        let w2 = LElement::omega(2);
        assert_eq!((w2.l1, w2.l2, w2.l3, w2.l), (1, 1, 1, -2));
        assert!(LElement::normalize(1, 0, 0, 0, 0).is_err());
    }

    #[test]
    fn relations() {
        let n = 4;
        assert_eq!(LElement::x1(n) + LElement::x1(n), LElement::c(n));
        assert_eq!(LElement::x3(n).scale(n), LElement::c(n));
        let d = LElement::x1(n) - LElement::x2(n);
        assert!(!d.is_zero());
        assert!((d + d).is_zero());
        let sum = LElement::c(n) + LElement::omega(n) + LElement::x1(n) + LElement::x2(n)
            + LElement::x3(n)
            - LElement::c(n).scale(2);
        assert!(sum.is_zero());
    }

    #[test]
    fn mismatched_n() {
        assert_eq!(
            LElement::x1(3).checked_add(LElement::x1(4)),
            Err(Error::MismatchedN(3, 4))
        );
    }

    #[test]
    fn interval_examples() {
        let n = 4;
        assert!(LElement::c(n).in_c_interval());
        assert!(!(LElement::x1(n) + LElement::x3(n)).in_c_interval());
        assert!(LElement::x3(n).scale(2).in_c_interval());
        assert!(!LElement::omega(n).is_effective());
        assert!(!(LElement::x1(n) - LElement::x2(n)).is_effective());
    }

    #[test]
    fn text_round_trip() {
        let n = 4;
        let w = LElement::omega(n);
        assert_eq!(w.to_string(), "x1 + x2 + 3*x3 - 2*c");
        assert_eq!(LElement::parse(n, &w.to_string()).unwrap(), w);
        assert_eq!(LElement::zero(n).to_string(), "0");
        assert_eq!(LElement::parse(n, "0").unwrap(), LElement::zero(n));
        assert_eq!(LElement::parse(n, "-x3").unwrap(), LElement::normalize(n, 0, 0, -1, 0).unwrap());
        assert_eq!(LElement::parse(n, "c-x1-x2-x3").unwrap(), w);
        assert!(LElement::parse(n, "x4").is_err());
        assert!(LElement::parse(n, "x1 x2").is_err());
        assert!(LElement::parse(n, "").is_err());
    }
}
