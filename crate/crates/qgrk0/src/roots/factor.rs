//! Integer factorization of the defining polynomial.
//!
//! Strategy: split off the squarefree part with an exact gcd, then
//! reconstruct integer factors from numerically clustered companion-matrix
//! roots. A candidate subset of roots is accepted only when its monic
//! polynomial rounds to integers within 1e-4 and divides exactly; everything
//! numeric is double-checked by exact division, so a wrong cluster can only
//! cause `FactorizationAmbiguous`, never a wrong factor.

use super::RootsError;
use crate::poly::IntPoly;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

const ROUNDING_TOLERANCE: f64 = 1e-4;

/// All complex roots of `p`, as eigenvalues of the companion matrix.
pub fn companion_roots(p: &IntPoly) -> Vec<Complex64> {
    let deg = p.degree().expect("nonzero polynomial");
    if deg == 0 {
        return Vec::new();
    }
    let lead = p
        .leading()
        .unwrap()
        .to_f64()
        .expect("leading coefficient in f64 range");
    let mut m = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        let c = p.coeff(i).to_f64().expect("coefficient in f64 range");
        m[(i, deg - 1)] = -c / lead;
    }
    let eigen = m.complex_eigenvalues();
    let mut roots: Vec<Complex64> = eigen.iter().map(|z| Complex64::new(z.re, z.im)).collect();
    roots.sort_by(|a, b| {
        a.norm()
            .partial_cmp(&b.norm())
            .unwrap()
            .then(a.re.partial_cmp(&b.re).unwrap())
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    roots
}

/// Monic polynomial with the given roots, as complex coefficients
/// (ascending).
fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        coeffs.push(Complex64::zero());
        for i in (0..coeffs.len() - 1).rev() {
            let shifted = coeffs[i];
            coeffs[i + 1] += shifted;
            coeffs[i] = -r * shifted;
        }
    }
    // build gives ascending order already: constant first
    coeffs
}

fn round_to_int_poly(coeffs: &[Complex64]) -> Option<IntPoly> {
    let mut ints = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if c.im.abs() > ROUNDING_TOLERANCE {
            return None;
        }
        let rounded = c.re.round();
        if (c.re - rounded).abs() > ROUNDING_TOLERANCE {
            return None;
        }
        ints.push(BigInt::from(rounded as i64));
    }
    Some(IntPoly::new(ints))
}

/// Factor a squarefree monic integer polynomial into irreducibles.
pub fn factor_squarefree_monic(p: &IntPoly) -> Result<Vec<IntPoly>, RootsError> {
    assert!(p.is_monic(), "expected a monic polynomial");
    let mut remaining = p.clone();
    let mut factors = Vec::new();
    'peel: loop {
        let deg = remaining.degree().unwrap();
        if deg == 0 {
            break;
        }
        if deg == 1 {
            factors.push(remaining.clone());
            break;
        }
        let roots = companion_roots(&remaining);
        for size in 1..=deg / 2 {
            let mut subset = first_combination(size);
            loop {
                let chosen: Vec<Complex64> = subset.iter().map(|&i| roots[i]).collect();
                if let Some(candidate) = round_to_int_poly(&poly_from_roots(&chosen)) {
                    if candidate.degree() == Some(size) && candidate.is_monic() {
                        if let Some(quotient) = remaining.exact_div(&candidate) {
                            factors.push(candidate);
                            remaining = quotient;
                            continue 'peel;
                        }
                    }
                }
                if !next_combination(&mut subset, deg) {
                    break;
                }
            }
        }
        // No proper factor: `remaining` should be irreducible. Sanity-check
        // that the full root set reproduces its coefficients, otherwise the
        // numeric clustering cannot be trusted.
        match round_to_int_poly(&poly_from_roots(&roots)) {
            Some(whole) if whole == remaining => {
                factors.push(remaining.clone());
                break;
            }
            _ => {
                return Err(RootsError::FactorizationAmbiguous(format!(
                    "numeric roots of degree-{deg} remainder do not reproduce its coefficients"
                )))
            }
        }
    }
    Ok(factors)
}

fn first_combination(size: usize) -> Vec<usize> {
    (0..size).collect()
}

fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - (k - i) {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Multiplicity of `factor` in `p` by repeated exact division, together with
/// the fully deflated quotient.
pub fn strip_multiplicity(p: &IntPoly, factor: &IntPoly) -> (u32, IntPoly) {
    let mut mult = 0;
    let mut current = p.clone();
    while let Some(q) = current.exact_div(factor) {
        mult += 1;
        current = q;
    }
    (mult, current)
}

/// Test-grade irreducibility certificate for degree <= 3: a primitive
/// polynomial of degree 2 or 3 is irreducible over the integers iff it has
/// no rational root.
pub fn low_degree_irreducible(p: &IntPoly) -> Option<bool> {
    match p.degree() {
        Some(1) => Some(true),
        Some(2) | Some(3) => Some(!has_rational_root(p)),
        _ => None,
    }
}

fn has_rational_root(p: &IntPoly) -> bool {
    let constant = p.coeff(0);
    let lead = p.leading().unwrap().clone();
    if constant.is_zero() {
        return true;
    }
    for num in divisors(&constant.abs()) {
        for den in divisors(&lead.abs()) {
            for sign in [1i64, -1] {
                let x = num_rational::BigRational::new(&num * BigInt::from(sign), den.clone());
                if p.eval_rational(&x).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut k = BigInt::from(1);
    while &k * &k <= *n {
        if (n % &k).is_zero() {
            out.push(k.clone());
            out.push(n / &k);
        }
        k += 1;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_quadratic() {
        let p = IntPoly::from_i64(&[1, -3, 1]);
        let roots = companion_roots(&p);
        assert_eq!(roots.len(), 2);
        let golden = (3.0 - 5.0f64.sqrt()) / 2.0;
        assert!((roots[0].re - golden).abs() < 1e-10);
        assert!(roots[0].im.abs() < 1e-10);
        assert!((roots[1].re - 1.0 / golden).abs() < 1e-10);
    }

    #[test]
    fn factors_reducible_cubic() {
        // t^3 - 2t^2 - 2t + 1 = (t + 1)(t^2 - 3t + 1)
        let p = IntPoly::from_i64(&[1, -2, -2, 1]);
        let mut factors = factor_squarefree_monic(&p).unwrap();
        factors.sort_by_key(|f| f.degree());
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], IntPoly::from_i64(&[1, 1]));
        assert_eq!(factors[1], IntPoly::from_i64(&[1, -3, 1]));
    }

    #[test]
    fn leaves_irreducible_quadratic_alone() {
        let p = IntPoly::from_i64(&[1, -3, 1]);
        let factors = factor_squarefree_monic(&p).unwrap();
        assert_eq!(factors, vec![p]);
    }

    #[test]
    fn combination_iterator_visits_all() {
        let mut c = first_combination(2);
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn rational_root_detection() {
        assert!(has_rational_root(&IntPoly::from_i64(&[-2, 1, 1]))); // (t-1)(t+2)
        assert!(!has_rational_root(&IntPoly::from_i64(&[1, -3, 1])));
        assert_eq!(
            low_degree_irreducible(&IntPoly::from_i64(&[1, -3, 1])),
            Some(true)
        );
        assert_eq!(
            low_degree_irreducible(&IntPoly::from_i64(&[-2, 1, 1])),
            Some(false)
        );
    }

    #[test]
    fn multiplicity_stripping() {
        // (t-1)^2 (t+2)
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        let (mult, rest) = strip_multiplicity(&p, &IntPoly::from_i64(&[-1, 1]));
        assert_eq!(mult, 2);
        assert_eq!(rest, IntPoly::from_i64(&[2, 1]));
    }
}
