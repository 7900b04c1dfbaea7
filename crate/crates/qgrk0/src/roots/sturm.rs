//! Sturm chains over exact rationals.
//!
//! Chain elements are kept as primitive integer polynomials, rescaled only by
//! positive rationals so that sign variations are preserved.

use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn from_int(p: &IntPoly) -> Self {
        Self {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Remainder of `self` by `div` (classical division, `div` nonzero).
    fn rem(mut self, div: &RatPoly) -> RatPoly {
        let dd = div.degree();
        let lead = div.coeffs.last().unwrap().clone();
        while !self.is_zero() && self.degree() >= dd && !self.coeffs.is_empty() {
            let dn = self.degree();
            if dn < dd {
                break;
            }
            let q = self.coeffs[dn].clone() / lead.clone();
            for (i, c) in div.coeffs.iter().enumerate() {
                let idx = dn - dd + i;
                let delta = &q * c;
                self.coeffs[idx] -= delta;
            }
            self.trim();
        }
        self
    }

    /// Scale by a positive rational into a primitive integer polynomial.
    /// The sign of every coefficient is preserved.
    fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num_integer::Integer::lcm(&denom_lcm, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num_integer::Integer::gcd(&content, c);
        }
        IntPoly::new(ints.iter().map(|c| c / &content).collect())
    }
}

/// Sturm chain of the squarefree part of a polynomial. Counts distinct real
/// roots in intervals with non-root endpoints.
#[derive(Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let sf = squarefree_part(p);
        let mut chain = Vec::new();
        if sf.is_zero() {
            return Self { chain };
        }
        chain.push(sf.clone());
        let deriv = sf.derivative();
        if deriv.is_zero() {
            return Self { chain };
        }
        chain.push(deriv);
        loop {
            let n = chain.len();
            let prev = RatPoly::from_int(&chain[n - 2]);
            let last = RatPoly::from_int(&chain[n - 1]);
            let rem = prev.rem(&last);
            if rem.is_zero() {
                break;
            }
            let neg: Vec<BigRational> = rem.coeffs.iter().map(|c| -c.clone()).collect();
            chain.push(RatPoly { coeffs: neg }.to_primitive_int());
        }
        Self { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev_sign = 0i8;
        for p in &self.chain {
            let v = p.eval_rational(x);
            let sign = if v.is_zero() {
                continue;
            } else if v.is_positive() {
                1i8
            } else {
                -1i8
            };
            if prev_sign != 0 && sign != prev_sign {
                count += 1;
            }
            prev_sign = sign;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`. With non-root endpoints
    /// this equals the open-interval count.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        assert!(lo < hi);
        self.variations_at(lo) - self.variations_at(hi)
    }
}

/// Greatest common divisor over the rationals, returned primitive with
/// positive leading coefficient.
pub fn int_poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let mut r0 = RatPoly::from_int(a);
    let mut r1 = RatPoly::from_int(b);
    if r0.degree() < r1.degree() {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let rem = r0.clone().rem(&r1);
        if rem.is_zero() {
            return r1.to_primitive_int().primitive();
        }
        r0 = r1;
        r1 = rem;
    }
}

/// `p` divided by `gcd(p, p')`: same distinct roots, all simple.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    if p.is_zero() || p.degree() == Some(0) {
        return p.primitive();
    }
    let g = int_poly_gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return p.primitive();
    }
    // division is exact up to a rational scalar; go through rationals
    let num = RatPoly::from_int(p);
    let den = RatPoly::from_int(&g);
    let mut quot_coeffs = vec![BigRational::zero(); num.degree() - den.degree() + 1];
    let mut rem = num;
    let lead = den.coeffs.last().unwrap().clone();
    while !rem.is_zero() && rem.degree() >= den.degree() {
        let dn = rem.degree();
        let q = rem.coeffs[dn].clone() / lead.clone();
        quot_coeffs[dn - den.degree()] = q.clone();
        for (i, c) in den.coeffs.iter().enumerate() {
            let idx = dn - den.degree() + i;
            let delta = &q * c;
            rem.coeffs[idx] -= delta;
        }
        rem.trim();
    }
    assert!(rem.is_zero(), "gcd must divide exactly");
    RatPoly { coeffs: quot_coeffs }.to_primitive_int()
}

/// An upper bound strictly above the absolute value of every real root.
pub fn root_bound(p: &IntPoly) -> BigRational {
    let lead = BigRational::from(p.leading().expect("nonzero polynomial").clone());
    let mut max = BigRational::zero();
    for c in p.coeffs() {
        let ratio = (BigRational::from(c.clone()) / &lead).abs();
        if ratio > max {
            max = ratio;
        }
    }
    max + BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_roots_of_quadratic() {
        // t^2 - 3t + 1: roots (3 +- sqrt5)/2 ~ 0.382, 2.618
        let p = IntPoly::from_i64(&[1, -3, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rat(0, 1), &rat(1, 1)), 1);
        assert_eq!(chain.count_roots(&rat(1, 1), &rat(3, 1)), 1);
        assert_eq!(chain.count_roots(&rat(0, 1), &rat(3, 1)), 2);
        assert_eq!(chain.count_roots(&rat(1, 2), &rat(2, 1)), 0);
    }

    #[test]
    fn counts_distinct_roots_of_nonsquarefree() {
        // (t-1)^2 (t+2): distinct roots 1 and -2
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rat(-3, 1), &rat(2, 1)), 2);
        assert_eq!(chain.count_roots(&rat(0, 1), &rat(2, 1)), 1);
    }

    #[test]
    fn gcd_of_common_factor() {
        // (t-1)(t+2) and (t-1)(t-3) share t-1
        let a = IntPoly::from_i64(&[-2, 1, 1]);
        let b = IntPoly::from_i64(&[3, -4, 1]);
        assert_eq!(int_poly_gcd(&a, &b), IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = IntPoly::from_i64(&[1, -3, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(int_poly_gcd(&a, &b).degree(), Some(0));
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        // (t-1)^2 (t+2) -> (t-1)(t+2)
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(squarefree_part(&p), IntPoly::from_i64(&[-2, 1, 1]));
    }

    #[test]
    fn root_bound_clears_roots() {
        let p = IntPoly::from_i64(&[1, -3, 1]);
        let b = root_bound(&p);
        assert!(b > rat(262, 100));
    }
}
