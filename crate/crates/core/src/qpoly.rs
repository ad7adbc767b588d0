//! Laurent polynomials in `q^{1/2}` with integer coefficients.
//!
//! Exponents are stored in half units: the key `e` stands for `q^{e/2}`.
//! The textual form is canonical (descending exponents, `*` between the
//! coefficient and the power, `q^(k/2)` for odd half exponents) and is used
//! verbatim by the command line tool.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element of `Z[q^{1/2}, q^{-1/2}]`.
///
/// No stored coefficient is zero, so structural equality is equality of
/// polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentHalf {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentHalf {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// `coeff * q^{half_exp/2}`.
    pub fn monomial(coeff: BigInt, half_exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(half_exp, coeff);
        }
        Self { terms }
    }

    /// `q^k` for an integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), 2 * k)
    }

    /// `q^{k/2}`.
    pub fn q_half_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::q() - Self::one()
    }

    /// `R = q^{1/2} - q^{-1/2}`, the structure constant of the modified basis.
    pub fn r() -> Self {
        Self::q_half_pow(1) - Self::q_half_pow(-1)
    }

    /// `q^a (q-1)^b`, expanded.
    pub fn weight(a: u32, b: u32) -> Self {
        Self::q_pow(a as i64) * Self::q_minus_one().pow(b)
    }

    /// `(-1)^a (q-1)^b`, the sign-twisted weight.
    pub fn signed_weight(a: u32, b: u32) -> Self {
        let w = Self::q_minus_one().pow(b);
        if a.is_multiple_of(2) {
            w
        } else {
            -w
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(half_exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^{half_exp/2}`.
    pub fn coeff(&self, half_exp: i64) -> BigInt {
        self.terms.get(&half_exp).cloned().unwrap_or_default()
    }

    /// Largest half exponent, `None` for zero.
    pub fn max_half_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest half exponent, `None` for zero.
    pub fn min_half_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// True when every exponent is an integer power of `q`.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Value at `q^{1/2} = 1`: the sum of all coefficients.
    pub fn eval_q1(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `q^{k/2}`.
    pub fn scale_halfpower(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The bar involution `q^{1/2} -> q^{-1/2}`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`, the inner loop of every sparse product.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        for (e, x) in &other.terms {
            self.add_term(*e, x * c);
        }
    }
}

impl fmt::Debug for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentHalf({self})")
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e % 2 == 0 {
        match e / 2 {
            1 => write!(f, "q"),
            k => write!(f, "q^{k}"),
        }
    } else {
        write!(f, "q^({e}/2)")
    }
}

impl fmt::Display for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if *e == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_power(f, *e)?;
            }
        }
        Ok(())
    }
}

/// Parses a half exponent from the text following `q^`.
fn parse_exponent(s: &str) -> Option<i64> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let inner = inner.trim();
        return match inner.split_once('/') {
            Some((num, den)) => {
                let num: i64 = num.trim().parse().ok()?;
                match den.trim() {
                    "2" => Some(num),
                    "1" => Some(2 * num),
                    _ => None,
                }
            }
            None => inner.parse::<i64>().ok().map(|k| 2 * k),
        };
    }
    s.parse::<i64>().ok().map(|k| 2 * k)
}

fn parse_term(s: &str) -> Option<(BigInt, i64)> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (coeff, power) = match s.find('q') {
        None => return s.parse::<BigInt>().ok().map(|c| (c, 0)),
        Some(pos) => {
            let head = s[..pos].trim();
            let head = head.strip_suffix('*').unwrap_or(head).trim();
            let coeff = if head.is_empty() {
                BigInt::one()
            } else {
                head.parse::<BigInt>().ok()?
            };
            (coeff, s[pos + 1..].trim())
        }
    };
    let e = if power.is_empty() {
        2
    } else {
        parse_exponent(power.strip_prefix('^')?)?
    };
    Some((coeff, e))
}

impl FromStr for LaurentHalf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("invalid polynomial {s:?}"));
        let text = s.trim();
        if text.is_empty() {
            return Err(bad());
        }
        // Split on top-level signs; a sign inside `q^(...)` or right after `^`
        // belongs to the exponent.
        let mut out = LaurentHalf::zero();
        let mut depth = 0usize;
        let mut start = 0usize;
        let mut sign = 1i32;
        let bytes = text.as_bytes();
        let flush = |from: usize, to: usize, sign: i32, out: &mut LaurentHalf| {
            let (c, e) = parse_term(&text[from..to]).ok_or_else(bad)?;
            out.add_term(e, if sign < 0 { -c } else { c });
            Ok::<(), Error>(())
        };
        let mut i = 0usize;
        // Leading sign.
        while i < bytes.len() && bytes[i] == b' ' {
            i += 1;
        }
        if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
            start = i;
        }
        while i < bytes.len() {
            let b = bytes[i];
            match b {
                b'(' => depth += 1,
                b')' => depth = depth.checked_sub(1).ok_or_else(bad)?,
                b'+' | b'-' if depth == 0 && i > 0 && bytes[i - 1] != b'^' => {
                    flush(start, i, sign, &mut out)?;
                    sign = if b == b'-' { -1 } else { 1 };
                    start = i + 1;
                }
                _ => {}
            }
            i += 1;
        }
        flush(start, bytes.len(), sign, &mut out)?;
        Ok(out)
    }
}

impl Serialize for LaurentHalf {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentHalf {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for LaurentHalf {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentHalf {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&LaurentHalf> for LaurentHalf {
    fn add_assign(&mut self, rhs: &LaurentHalf) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentHalf> for LaurentHalf {
    fn sub_assign(&mut self, rhs: &LaurentHalf) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl MulAssign<&LaurentHalf> for LaurentHalf {
    fn mul_assign(&mut self, rhs: &LaurentHalf) {
        *self = &*self * rhs;
    }
}

impl Mul<&LaurentHalf> for &LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: &LaurentHalf) -> LaurentHalf {
        let mut out = LaurentHalf::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        LaurentHalf {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentHalf {
    type Output = LaurentHalf;
    fn neg(mut self) -> LaurentHalf {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $Assign:ident, $assign:ident) => {
        impl $Trait<&LaurentHalf> for LaurentHalf {
            type Output = LaurentHalf;
            fn $method(mut self, rhs: &LaurentHalf) -> LaurentHalf {
                $Assign::$assign(&mut self, rhs);
                self
            }
        }
        impl $Trait<LaurentHalf> for LaurentHalf {
            type Output = LaurentHalf;
            fn $method(mut self, rhs: LaurentHalf) -> LaurentHalf {
                $Assign::$assign(&mut self, &rhs);
                self
            }
        }
        impl $Trait<&LaurentHalf> for &LaurentHalf {
            type Output = LaurentHalf;
            fn $method(self, rhs: &LaurentHalf) -> LaurentHalf {
                let mut out = self.clone();
                $Assign::$assign(&mut out, rhs);
                out
            }
        }
        impl $Trait<LaurentHalf> for &LaurentHalf {
            type Output = LaurentHalf;
            fn $method(self, rhs: LaurentHalf) -> LaurentHalf {
                let mut out = self.clone();
                $Assign::$assign(&mut out, &rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);

impl Mul<LaurentHalf> for LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: LaurentHalf) -> LaurentHalf {
        &self * &rhs
    }
}

impl Mul<&LaurentHalf> for LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: &LaurentHalf) -> LaurentHalf {
        &self * rhs
    }
}

impl Mul<LaurentHalf> for &LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: LaurentHalf) -> LaurentHalf {
        self * &rhs
    }
}

impl std::iter::Sum for LaurentHalf {
    fn sum<I: Iterator<Item = LaurentHalf>>(iter: I) -> Self {
        iter.fold(LaurentHalf::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a LaurentHalf> for LaurentHalf {
    fn sum<I: Iterator<Item = &'a LaurentHalf>>(iter: I) -> Self {
        iter.fold(LaurentHalf::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentHalf {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        let a = p("q - 1");
        assert_eq!(&a + &a, p("2*q - 2"));
        assert_eq!(&a + &LaurentHalf::zero(), a);
        let r = LaurentHalf::r();
        assert_eq!(r + LaurentHalf::q_half_pow(-1), LaurentHalf::q_half_pow(1));
    }

    #[test]
    fn multiplication() {
        let qm1 = LaurentHalf::q_minus_one();
        assert_eq!(LaurentHalf::q() * &qm1, p("q^2 - q"));
        assert_eq!(&qm1 * &qm1, p("q^2 - 2*q + 1"));
        let r = LaurentHalf::r();
        assert_eq!(&r * &r, p("q - 2 + q^-1"));
    }

    #[test]
    fn weights() {
        assert_eq!(LaurentHalf::weight(0, 0), LaurentHalf::one());
        assert_eq!(LaurentHalf::weight(1, 1), p("q^2 - q"));
        assert_eq!(LaurentHalf::weight(0, 2), p("q^2 - 2*q + 1"));
        assert_eq!(LaurentHalf::signed_weight(1, 1), p("-q + 1"));
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(p("24*q^2 - 28*q + 8").eval_q1(), BigInt::from(4));
        assert_eq!(LaurentHalf::zero().eval_q1(), BigInt::from(0));
        assert_eq!(p("2*q^3 - 6*q^2 + 6*q - 2").eval_q1(), BigInt::from(0));
    }

    #[test]
    fn half_power_scaling() {
        assert_eq!(LaurentHalf::q().scale_halfpower(-2), LaurentHalf::one());
        assert_eq!(
            LaurentHalf::one().scale_halfpower(1),
            LaurentHalf::q_half_pow(1)
        );
        assert_eq!(
            p("24*q^2 - 28*q + 8").scale_halfpower(-4),
            p("24 - 28*q^-1 + 8*q^-2")
        );
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("8 - 28*q + 24*q^2").to_string(), "24*q^2 - 28*q + 8");
        assert_eq!(LaurentHalf::r().to_string(), "q^(1/2) - q^(-1/2)");
        assert_eq!(p("-q^5 + 3").to_string(), "-q^5 + 3");
        assert_eq!(LaurentHalf::zero().to_string(), "0");
        assert_eq!(p("q^-2").to_string(), "q^-2");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("3*q^(3/2)").to_string(), "3*q^(3/2)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentHalf>().is_err());
        assert!("q^x".parse::<LaurentHalf>().is_err());
        assert!("2*".parse::<LaurentHalf>().is_err());
        assert!("q^(1/3)".parse::<LaurentHalf>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentHalf> {
        proptest::collection::vec((-6i64..6, -5i64..5), 0..5).prop_map(|ts| {
            ts.into_iter()
                .map(|(e, c)| LaurentHalf::monomial(BigInt::from(c), e))
                .sum()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_q1(), a.eval_q1() * b.eval_q1());
            prop_assert_eq!((&a + &b).eval_q1(), a.eval_q1() + b.eval_q1());
        }

        #[test]
        fn weight_at_one(a in 0u32..6, b in 0u32..6) {
            let expected = if b == 0 { 1 } else { 0 };
            prop_assert_eq!(LaurentHalf::weight(a, b).eval_q1(), BigInt::from(expected));
        }

        #[test]
        fn render_parse_round_trip(a in arb_poly()) {
            let back: LaurentHalf = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
