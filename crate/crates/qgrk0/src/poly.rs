//! Sparse integer Laurent polynomials and dense integer polynomials.
//!
//! `LaurentPoly` is the exchange format for every operation that takes or
//! returns a polynomial: a map from exponent (possibly negative) to nonzero
//! coefficient. `IntPoly` is the dense ascending-coefficient form used by the
//! root-isolation and factorization machinery.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse Laurent polynomial with exact integer coefficients.
///
/// Invariant: no stored zero coefficients; the empty map is the zero
/// polynomial. The canonical text form lists `exponent:coefficient` pairs in
/// increasing exponent order, e.g. `0:-3,1:13,2:-4`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    MalformedTerm(String),
    BadExponent(String),
    BadCoefficient(String),
    DuplicateExponent(i64),
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyParseError::MalformedTerm(s) => {
                write!(f, "malformed term {s:?}, expected `exponent:coefficient`")
            }
            PolyParseError::BadExponent(s) => write!(f, "bad exponent {s:?}"),
            PolyParseError::BadCoefficient(s) => write!(f, "bad coefficient {s:?}"),
            PolyParseError::DuplicateExponent(e) => write!(f, "duplicate exponent {e}"),
        }
    }
}

impl std::error::Error for PolyParseError {}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c.into())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Multiplication by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        let mut p = Self::zero();
        for (e, c) in self.iter() {
            p.terms.insert(e + k, c.clone());
        }
        p
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        if c.is_zero() {
            return p;
        }
        for (e, k) in self.iter() {
            p.terms.insert(e, k * c);
        }
        p
    }

    /// Evaluate at a nonzero rational. Panics on zero input when negative
    /// exponents are present.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in self.iter() {
            let power = rational_pow(x, e);
            acc += BigRational::from(c.clone()) * power;
        }
        acc
    }

    /// Parse the sparse `exp:coeff,...` form. The empty string is the zero
    /// polynomial. Duplicate exponents are rejected.
    pub fn parse(text: &str) -> Result<Self, PolyParseError> {
        let mut p = Self::zero();
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(p);
        }
        for part in trimmed.split(',') {
            let part = part.trim();
            let (e_str, c_str) = part
                .split_once(':')
                .ok_or_else(|| PolyParseError::MalformedTerm(part.to_string()))?;
            let exp: i64 = e_str
                .trim()
                .parse()
                .map_err(|_| PolyParseError::BadExponent(e_str.trim().to_string()))?;
            let coeff: BigInt = c_str
                .trim()
                .parse()
                .map_err(|_| PolyParseError::BadCoefficient(c_str.trim().to_string()))?;
            if p.terms.contains_key(&exp) {
                return Err(PolyParseError::DuplicateExponent(exp));
            }
            if !coeff.is_zero() {
                p.terms.insert(exp, coeff);
            }
        }
        Ok(p)
    }

    /// Canonical sparse text form, increasing exponents. Zero is the empty
    /// string.
    pub fn to_text(&self) -> String {
        self.iter()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Human-readable form, e.g. `-3 + 13t - 4t^2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.iter().enumerate() {
            let mag = c.abs();
            let sign = c.is_negative();
            if i == 0 {
                if sign {
                    out.push('-');
                }
            } else if sign {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && e != 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            out.push_str(&coeff_part);
            out.push_str(&var_part);
        }
        out
    }

    /// Split off the power of `t`: returns `(s, P)` with `self = t^s * P` and
    /// `P(0) != 0`. The zero polynomial splits as `(0, 0)`.
    pub fn split_shift(&self) -> (i64, IntPoly) {
        match self.min_exp() {
            None => (0, IntPoly::zero()),
            Some(s) => {
                let max = self.max_exp().unwrap();
                let mut coeffs = vec![BigInt::zero(); (max - s + 1) as usize];
                for (e, c) in self.iter() {
                    coeffs[(e - s) as usize] = c.clone();
                }
                (s, IntPoly::new(coeffs))
            }
        }
    }

    /// Dense conversion; fails when negative exponents are present.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        match self.min_exp() {
            None => Some(IntPoly::zero()),
            Some(s) if s >= 0 => {
                let max = self.max_exp().unwrap();
                let mut coeffs = vec![BigInt::zero(); (max + 1) as usize];
                for (e, c) in self.iter() {
                    coeffs[e as usize] = c.clone();
                }
                Some(IntPoly::new(coeffs))
            }
            Some(_) => None,
        }
    }
}

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut base = if e > 0 { x.clone() } else { x.recip() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.pretty())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.iter() {
            out.terms.insert(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Dense integer polynomial, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Content: gcd of coefficients (nonnegative), 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut content = self.content();
        if self.leading().unwrap().is_negative() {
            content = -content;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Exact division: `Some(q)` with `self = q * divisor` or `None`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dn = self.degree()?;
        let dd = divisor.degree()?;
        if dn < dd {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    /// Coefficient array for JSON output (ascending exponents).
    pub fn coeff_vec(&self) -> Vec<BigInt> {
        self.coeffs.clone()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent().pretty())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.to_laurent().pretty())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}
