//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Z[q, q^-1]`.
///
/// Terms are kept sorted by exponent with no zero coefficients, so the zero
/// polynomial has an empty term list and structural equality is equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    terms: Vec<(i32, BigInt)>,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `(content, primitive part)` of a dense polynomial.
fn primitive_part(v: Vec<BigInt>) -> (BigInt, Vec<BigInt>) {
    let c = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if c.is_zero() || c.is_one() {
        return (c, v);
    }
    let v = v.into_iter().map(|x| x / &c).collect();
    (c, v)
}

/// Primitive gcd of two nonzero dense polynomials (lowest degree first) by
/// primitive pseudo-remainder sequences.
fn dense_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive_part(trim(a)).1, primitive_part(trim(b)).1);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let la = a.last().unwrap().clone();
            let shift = a.len() - b.len();
            for x in a.iter_mut() {
                *x *= &lb;
            }
            for (i, y) in b.iter().enumerate() {
                a[i + shift] -= &la * y;
            }
            a = trim(a);
        }
        if a.is_empty() {
            return b;
        }
        a = primitive_part(a).1;
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        a
    } else {
        vec![BigInt::one()]
    }
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// `q - q^-1`
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(-1, -1), (1, 1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut v: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Coefficient of `q^e` as an `i64`; panics if it does not fit.
    pub fn coeff_i64(&self, e: i32) -> i64 {
        self.coeff(e).to_i64().expect("coefficient exceeds i64")
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// The involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
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

    /// `P(q^2)`.
    pub fn subs_q_squared(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (2 * e, c.clone())).collect(),
        }
    }

    /// The part with strictly positive exponents.
    pub fn positive_part(&self) -> Self {
        Self {
            terms: self.terms.iter().filter(|(e, _)| *e > 0).cloned().collect(),
        }
    }

    /// True for elements of `Z[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// True for elements of `qZ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// Gcd of the coefficients (zero for the zero polynomial), always nonnegative.
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!((c % d).is_zero());
                    (*e, c / d)
                })
                .collect(),
        }
    }

    /// Exact division in `Z[q, q^-1]`; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentInt) -> Option<LaurentInt> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dlo, dhi) = (divisor.min_exp().unwrap(), divisor.max_exp().unwrap());
        let nlo = self.min_exp().unwrap();
        // Dense polynomial long division after stripping q-powers.
        let dd: Vec<BigInt> = divisor.dense_from(dlo, dhi);
        let nhi = self.max_exp().unwrap();
        let mut rem: Vec<BigInt> = self.dense_from(nlo, nhi);
        let ddeg = dd.len() - 1;
        if rem.len() < dd.len() {
            return None;
        }
        let lead = dd.last().unwrap();
        let mut quot = vec![BigInt::zero(); rem.len() - ddeg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + ddeg];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in dd.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_terms(
            quot.into_iter().enumerate().map(|(i, c)| (i as i32 + nlo - dlo, c)),
        ))
    }

    /// Greatest common divisor up to units: a polynomial in `q` with
    /// nonzero constant term and positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentInt) -> LaurentInt {
        let dense = |p: &LaurentInt| p.dense_from(p.min_exp().unwrap(), p.max_exp().unwrap());
        let g = match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(),
            (false, true) => dense(self),
            (true, false) => dense(other),
            (false, false) => {
                let c = self.content().gcd(&other.content());
                let mut g = dense_gcd(dense(self), dense(other));
                for x in &mut g {
                    *x *= &c;
                }
                g
            }
        };
        let sign = if g.last().is_some_and(|c| c.is_negative()) {
            -1
        } else {
            1
        };
        Self::from_terms(g.into_iter().enumerate().map(|(i, c)| (i as i32, c * sign)))
    }

    fn dense_from(&self, lo: i32, hi: i32) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order, the wire format.
    pub fn to_pairs(&self) -> Vec<(i32, BigInt)> {
        self.terms.clone()
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Self {
                terms: self.terms.iter().map(|(x, y)| (x + e, y * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.product(self);
        }
        let lo = self.min_exp().unwrap() + other.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Self {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32 + lo, c))
                .collect(),
        }
    }
}

impl From<i64> for LaurentInt {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<BigInt> for LaurentInt {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

macro_rules! bin_op {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentInt> for &LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: &LaurentInt) -> LaurentInt {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: &LaurentInt) -> LaurentInt {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentInt> for &LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                $body(self, &rhs)
            }
        }
    };
}

bin_op!(Add, add, |a: &LaurentInt, b: &LaurentInt| a.combine(b, false));
bin_op!(Sub, sub, |a: &LaurentInt, b: &LaurentInt| a.combine(b, true));
bin_op!(Mul, mul, |a: &LaurentInt, b: &LaurentInt| a.product(b));

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        *self = self.combine(rhs, false);
    }
}

impl AddAssign for LaurentInt {
    fn add_assign(&mut self, rhs: LaurentInt) {
        *self = self.combine(&rhs, false);
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        *self = self.combine(rhs, true);
    }
}

impl SubAssign for LaurentInt {
    fn sub_assign(&mut self, rhs: LaurentInt) {
        *self = self.combine(&rhs, true);
    }
}

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        -&self
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl std::iter::Sum for LaurentInt {
    fn sum<I: Iterator<Item = LaurentInt>>(iter: I) -> Self {
        iter.fold(LaurentInt::zero(), |a, b| a + b)
    }
}

impl fmt::Display for LaurentInt {
    /// Descending powers, e.g. `q^2 - 2q + 1 - q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match *e {
                0 => {}
                1 => write!(f, "q")?,
                e => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentInt {
    type Err = Error;

    /// Parses the `Display` form: `q^2 - 2q + 1 - q^-1`, `-q`, `0`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad Laurent polynomial `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(err());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff: BigInt = if i > start {
                compact[start..i].parse().map_err(|_| err())?
            } else {
                BigInt::one()
            };
            let mut exp = 0i32;
            if i < bytes.len() && bytes[i] == b'q' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[es..i].parse().map_err(|_| err())?;
                }
            } else if i == start {
                return Err(err());
            }
            coeff *= sign;
            terms.push((exp, coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

/// Coefficients that fit in `i64` serialize as JSON numbers, larger ones as strings.
pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for LaurentInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, bigint_to_json(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw: Vec<(i32, serde_json::Value)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, v) in raw {
            let c: BigInt = match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("non-integer coefficient"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("bad coefficient")),
            };
            terms.push((e, c));
        }
        let p = LaurentInt::from_terms(terms.clone());
        if p.terms != terms {
            return Err(D::Error::custom("terms not sorted or contain zeros"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentInt {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_parse() {
        let x = LaurentInt::from_terms([(2, 1), (1, -2), (0, 1), (-1, -1)]);
        assert_eq!(x.to_string(), "q^2 - 2q + 1 - q^-1");
        assert_eq!(p("q^2 - 2q + 1 - q^-1"), x);
        assert_eq!(p("-q"), LaurentInt::monomial(-1, 1));
        assert_eq!(p("0"), LaurentInt::zero());
        assert!("q^".parse::<LaurentInt>().is_err());
        assert!("".parse::<LaurentInt>().is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("q^2 - 1").gcd(&p("q^3 - q")), p("q^2 - 1"));
        assert_eq!(p("2q + 2").gcd(&p("4q^2 - 4")), p("2q + 2"));
        assert_eq!(p("q^-1").gcd(&p("q - q^-1")), p("1"));
        assert_eq!(p("-q - 1").gcd(&p("0")), p("q + 1"));
        assert_eq!(p("0").gcd(&p("0")), p("0"));
        assert_eq!(p("q^2 + q + 1").gcd(&p("q - 1")), p("1"));
    }

    #[test]
    fn bar_and_products() {
        let a = p("q - q^-1");
        assert_eq!(a.bar(), -a.clone());
        assert_eq!(&a * &a, p("q^2 - 2 + q^-2"));
        assert_eq!(p("1 + q").subs_q_squared(), p("1 + q^2"));
    }

    #[test]
    fn exact_division() {
        let a = p("q^3 - q^-1");
        let b = p("q^2 + 1");
        assert_eq!(a.div_exact(&b), Some(p("q - q^-1")));
        assert_eq!(p("q + 2").div_exact(&p("2q")), None);
        assert_eq!(p("q^5").div_exact(&p("q^2")), Some(p("q^3")));
        assert_eq!(p("1").div_exact(&p("1 + q")), None);
    }

    #[test]
    fn json_wire_format() {
        let a = p("3q^2 - 1");
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[0,-1],[2,3]]");
        let back: LaurentInt = serde_json::from_str("[[0,-1],[2,3]]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<LaurentInt>("[[2,3],[0,-1]]").is_err());
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentInt> {
        prop::collection::vec((-4i32..5, -5i64..6), 0..5).prop_map(LaurentInt::from_terms)
    }

    proptest! {
        #[test]
        fn bar_is_ring_involution(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a + &b).bar(), a.bar() + b.bar());
            prop_assert_eq!((&a * &b).bar(), a.bar() * b.bar());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_laurent(), b in arb_laurent()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }

        #[test]
        fn gcd_divides_and_contains_common_factor(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let (x, y) = (&a * &c, &b * &c);
            let g = x.gcd(&y);
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.gcd(&c)).is_some());
        }
    }
}
