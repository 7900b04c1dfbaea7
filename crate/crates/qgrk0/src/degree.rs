//! Degree data: the validated multiset of generator degrees that determines
//! everything else in this crate.

use crate::poly::{IntPoly, LaurentPoly};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Validated generator degrees `(d_1 <= ... <= d_g)` together with the
/// derived quantities: the pairing degree `d` (the constant value of
/// `d_i + d_{g+1-i}`), the degree sum, and the multiplicity of each degree
/// value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeData {
    degrees: Vec<i64>,
    pairing_degree: i64,
    degree_sum: i64,
    multiplicities: BTreeMap<i64, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeError {
    NonPositiveDegree(i64),
    TooFewGenerators(usize),
    PairingBroken { position: usize, sum: i64, expected: i64 },
    GcdNotOne(i64),
}

impl fmt::Display for DegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeError::NonPositiveDegree(d) => {
                write!(f, "generator degrees must be positive, got {d}")
            }
            DegreeError::TooFewGenerators(g) => write!(
                f,
                "need at least 3 generators, got {g}; the 2-generator case \
                 reduces to a weighted polynomial ring and is not handled here"
            ),
            DegreeError::PairingBroken { position, sum, expected } => write!(
                f,
                "degrees are not symmetrically paired: d_{} + d_{{g+1-{}}} = {} but the \
                 first pair sums to {}",
                position, position, sum, expected
            ),
            DegreeError::GcdNotOne(g) => {
                write!(f, "generator degrees must have gcd 1, got gcd {g}")
            }
        }
    }
}

impl std::error::Error for DegreeError {}

/// Validate a raw degree sequence. Input order does not matter; degrees are
/// sorted before the pairing check.
pub fn validate_degrees(raw: &[i64]) -> Result<DegreeData, DegreeError> {
    for &d in raw {
        if d <= 0 {
            return Err(DegreeError::NonPositiveDegree(d));
        }
    }
    if raw.len() < 3 {
        return Err(DegreeError::TooFewGenerators(raw.len()));
    }
    let mut degrees = raw.to_vec();
    degrees.sort_unstable();
    let g = degrees.len();
    let expected = degrees[0] + degrees[g - 1];
    for i in 0..g {
        let sum = degrees[i] + degrees[g - 1 - i];
        if sum != expected {
            return Err(DegreeError::PairingBroken { position: i + 1, sum, expected });
        }
    }
    let gcd = degrees
        .iter()
        .fold(0i64, |acc, &d| num_integer::Integer::gcd(&acc, &d));
    if gcd != 1 {
        return Err(DegreeError::GcdNotOne(gcd));
    }
    let mut multiplicities = BTreeMap::new();
    for &d in &degrees {
        *multiplicities.entry(d).or_insert(0) += 1;
    }
    let degree_sum = degrees.iter().sum();
    Ok(DegreeData {
        degrees,
        pairing_degree: expected,
        degree_sum,
        multiplicities,
    })
}

impl DegreeData {
    pub fn new(raw: &[i64]) -> Result<Self, DegreeError> {
        validate_degrees(raw)
    }

    /// Sorted generator degrees.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Number of generators.
    pub fn generator_count(&self) -> usize {
        self.degrees.len()
    }

    /// The constant value of `d_i + d_{g+1-i}`; also the degree of the
    /// defining polynomial.
    pub fn pairing_degree(&self) -> i64 {
        self.pairing_degree
    }

    /// Sum of all generator degrees; also the vertex count of the second
    /// graph.
    pub fn degree_sum(&self) -> i64 {
        self.degree_sum
    }

    /// Map from degree value to the number of generators with that degree.
    pub fn multiplicities(&self) -> &BTreeMap<i64, i64> {
        &self.multiplicities
    }

    /// Number of generators of degree `j` (zero when none).
    pub fn multiplicity(&self, j: i64) -> i64 {
        self.multiplicities.get(&j).copied().unwrap_or(0)
    }

    /// The reciprocal of the Hilbert series:
    /// `f(t) = t^d - sum_j n_j t^j + 1`, monic of degree `d` with constant
    /// term 1 and palindromic coefficients.
    pub fn defining_poly(&self) -> LaurentPoly {
        self.defining_int_poly().to_laurent()
    }

    pub(crate) fn defining_int_poly(&self) -> IntPoly {
        let d = self.pairing_degree as usize;
        let mut coeffs = vec![BigInt::from(0); d + 1];
        coeffs[0] = BigInt::from(1);
        coeffs[d] = BigInt::from(1);
        for (&j, &n) in &self.multiplicities {
            coeffs[j as usize] -= BigInt::from(n);
        }
        IntPoly::new(coeffs)
    }
}

impl fmt::Debug for DegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeData{:?}", self.degrees)
    }
}

impl fmt::Display for DegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All valid degree data with degree sum at most `max_degree_sum`, in
/// lexicographic order of the sorted degree vector. Used by the exhaustive
/// sweeps.
pub fn enumerate_degree_data(max_degree_sum: i64) -> Vec<DegreeData> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(current: &mut Vec<i64>, remaining: i64, min_next: i64, out: &mut Vec<DegreeData>) {
        if current.len() >= 3 {
            if let Ok(dd) = validate_degrees(current) {
                out.push(dd);
            }
        }
        let mut next = min_next;
        while next <= remaining {
            current.push(next);
            rec(current, remaining - next, next, out);
            current.pop();
            next += 1;
        }
    }
    rec(&mut current, max_degree_sum, 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_1_2_3() {
        let dd = validate_degrees(&[1, 2, 3]).unwrap();
        assert_eq!(dd.pairing_degree(), 4);
        assert_eq!(dd.degree_sum(), 6);
        assert_eq!(dd.generator_count(), 3);
        let n: Vec<(i64, i64)> = dd.multiplicities().iter().map(|(&j, &n)| (j, n)).collect();
        assert_eq!(n, vec![(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn pairing_violation() {
        assert!(matches!(
            validate_degrees(&[1, 1, 2]),
            Err(DegreeError::PairingBroken { .. })
        ));
    }

    #[test]
    fn gcd_violation() {
        assert_eq!(validate_degrees(&[2, 2, 2]), Err(DegreeError::GcdNotOne(2)));
    }

    #[test]
    fn nonpositive_and_too_few() {
        assert_eq!(
            validate_degrees(&[1, -1, 1]),
            Err(DegreeError::NonPositiveDegree(-1))
        );
        assert_eq!(
            validate_degrees(&[1, 0, 1]),
            Err(DegreeError::NonPositiveDegree(0))
        );
        assert_eq!(
            validate_degrees(&[1, 1]),
            Err(DegreeError::TooFewGenerators(2))
        );
    }

    #[test]
    fn input_order_is_irrelevant() {
        let a = validate_degrees(&[3, 1, 2]).unwrap();
        let b = validate_degrees(&[1, 2, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.degrees(), &[1, 2, 3]);
    }

    #[test]
    fn defining_poly_examples() {
        // all generators in degree one
        let f = validate_degrees(&[1, 1, 1]).unwrap().defining_poly();
        assert_eq!(f.to_text(), "0:1,1:-3,2:1");
        // the Lehmer example
        let f = validate_degrees(&[5, 6, 7]).unwrap().defining_poly();
        assert_eq!(f.to_text(), "0:1,5:-1,6:-1,7:-1,12:1");
        // reducible degree-3 case
        let f = validate_degrees(&[1, 1, 2, 2]).unwrap().defining_poly();
        assert_eq!(f.to_text(), "0:1,1:-2,2:-2,3:1");
    }

    #[test]
    fn defining_poly_is_reciprocal() {
        for dd in enumerate_degree_data(10) {
            let f = dd.defining_poly();
            let d = dd.pairing_degree();
            for (e, c) in f.iter() {
                assert_eq!(c, &f.coeff(d - e), "palindrome break at {e} for {dd}");
            }
            assert_eq!(f.coeff(0), BigInt::from(1));
            assert_eq!(f.coeff(d), BigInt::from(1));
            assert_eq!(f.max_exp(), Some(d));
        }
    }

    #[test]
    fn enumeration_finds_known_instances() {
        let all = enumerate_degree_data(9);
        let find = |v: &[i64]| all.iter().any(|dd| dd.degrees() == v);
        assert!(find(&[1, 1, 1]));
        assert!(find(&[1, 2, 3]));
        assert!(find(&[1, 1, 2, 2]));
        assert!(find(&[2, 3, 4]));
        assert!(find(&[1, 1, 1, 2, 2, 2]));
        // everything enumerated is valid and within budget
        for dd in &all {
            assert!(dd.degree_sum() <= 9);
            assert!(validate_degrees(dd.degrees()).is_ok());
        }
        // and nothing obviously missing: re-validate a rejection
        assert!(!find(&[1, 1, 2]));
    }
}
