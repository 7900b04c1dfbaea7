//! Hilbert coefficient streams.
//!
//! The Hilbert series of the algebra is `1/f(t)`; its coefficients satisfy
//! the recurrence `a_n = sum_j n_j a_{n-j} - a_{n-d}` with `a_0 = 1` and
//! `a_{<0} = 0`, obtained by equating coefficients in `f * H = 1`.

use crate::degree::DegreeData;
use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    NegativeExponent(i64),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NegativeExponent(e) => write!(
                f,
                "series multiplication needs a polynomial without negative \
                 exponents; found exponent {e} (shift the input first)"
            ),
        }
    }
}

impl std::error::Error for SeriesError {}

/// An immutable prefix of the Hilbert coefficient sequence for one degree
/// data value. Extension returns a new stream.
#[derive(Clone, Debug)]
pub struct HilbertStream {
    dd: DegreeData,
    coeffs: Vec<BigInt>,
}

impl HilbertStream {
    pub fn new(dd: DegreeData) -> Self {
        Self { dd, coeffs: vec![BigInt::from(1)] }
    }

    pub fn degree_data(&self) -> &DegreeData {
        &self.dd
    }

    /// Computed prefix `a_0, ..., a_k`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// A new stream whose prefix covers indices `0..=n`.
    pub fn extended_to(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        extend_coeffs(&self.dd, &mut coeffs, n);
        Self { dd: self.dd.clone(), coeffs }
    }

    pub fn coeff(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }
}

fn extend_coeffs(dd: &DegreeData, coeffs: &mut Vec<BigInt>, n: usize) {
    let d = dd.pairing_degree();
    while coeffs.len() <= n {
        let i = coeffs.len() as i64;
        let mut next = BigInt::zero();
        for (&j, &mult) in dd.multiplicities() {
            if i - j >= 0 {
                next += BigInt::from(mult) * &coeffs[(i - j) as usize];
            }
        }
        if i - d >= 0 {
            next -= &coeffs[(i - d) as usize];
        }
        coeffs.push(next);
    }
}

/// Hilbert coefficients `a_0, ..., a_n`.
pub fn hilbert_coeffs(dd: &DegreeData, n: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::from(1)];
    extend_coeffs(dd, &mut coeffs, n);
    coeffs
}

/// Coefficients `b_0, ..., b_n` of `p(t) * H(t)` where `H` is the Hilbert
/// series. `p` must not have negative exponents.
pub fn series_product_coeffs(
    p: &LaurentPoly,
    dd: &DegreeData,
    n: usize,
) -> Result<Vec<BigInt>, SeriesError> {
    if let Some(e) = p.min_exp() {
        if e < 0 {
            return Err(SeriesError::NegativeExponent(e));
        }
    }
    let a = hilbert_coeffs(dd, n);
    Ok(convolve_prefix(p, &a, n))
}

pub(crate) fn convolve_prefix(p: &LaurentPoly, a: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut b = vec![BigInt::zero(); n + 1];
    for (k, c) in p.iter() {
        debug_assert!(k >= 0);
        for (i, slot) in b.iter_mut().enumerate().skip(k as usize) {
            *slot += c * &a[i - k as usize];
        }
    }
    b
}

/// Extendable coefficient sequence of `p(t) * H(t)`, grown on demand.
#[derive(Clone, Debug)]
pub struct SeriesStream {
    p: LaurentPoly,
    dd: DegreeData,
    hilbert: Vec<BigInt>,
    product: Vec<BigInt>,
}

impl SeriesStream {
    pub fn new(p: LaurentPoly, dd: DegreeData) -> Result<Self, SeriesError> {
        if let Some(e) = p.min_exp() {
            if e < 0 {
                return Err(SeriesError::NegativeExponent(e));
            }
        }
        Ok(Self { p, dd, hilbert: vec![BigInt::from(1)], product: Vec::new() })
    }

    pub fn degree_data(&self) -> &DegreeData {
        &self.dd
    }

    /// Ensure indices `0..=n` are computed and return the prefix.
    pub fn prefix(&mut self, n: usize) -> &[BigInt] {
        extend_coeffs(&self.dd, &mut self.hilbert, n);
        while self.product.len() <= n {
            let i = self.product.len() as i64;
            let mut acc = BigInt::zero();
            for (k, c) in self.p.iter() {
                if k <= i {
                    acc += c * &self.hilbert[(i - k) as usize];
                }
            }
            self.product.push(acc);
        }
        &self.product[..=n]
    }

    pub fn coeff(&mut self, i: usize) -> BigInt {
        self.prefix(i)[i].clone()
    }
}
