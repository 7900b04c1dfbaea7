//! Arithmetic in the ordered group `Z[t, t^-1]/(f)`.
//!
//! Since `f` is monic with constant term 1, `t` is a unit modulo `f` and
//! every class has a unique representative of degree `< d`. The positive cone
//! consists of the classes whose representative is positive at the `(0,1)`
//! root of `f`; when `f` is reducible, nonzero classes vanishing there are
//! incomparable to zero and reported as such.

use crate::degree::DegreeData;
use crate::hilbert;
use crate::jsonint::JsonInt;
use crate::poly::{IntPoly, LaurentPoly};
use crate::roots::{self, FactorList, RootsError, Sign};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A class in `Z[t,t^-1]/(f)`, stored as its canonical degree-`< d`
/// representative.
#[derive(Clone, PartialEq, Eq)]
pub struct K0Class {
    rep: IntPoly,
    dd: DegreeData,
}

/// Position of a class relative to the positive cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConePosition {
    Positive,
    Zero,
    Negative,
    /// Nonzero but vanishing at the ordering root; only possible when `f`
    /// is reducible.
    Incomparable,
}

impl fmt::Display for ConePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConePosition::Positive => "positive",
            ConePosition::Zero => "zero",
            ConePosition::Negative => "negative",
            ConePosition::Incomparable => "incomparable",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for ConePosition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "positive" => Ok(ConePosition::Positive),
            "zero" => Ok(ConePosition::Zero),
            "negative" => Ok(ConePosition::Negative),
            "incomparable" => Ok(ConePosition::Incomparable),
            other => Err(format!("unknown cone position {other:?}")),
        }
    }
}

/// Canonical representative of a Laurent polynomial modulo `(f)`.
///
/// Negative exponents are eliminated with `1 = sum_j n_j t^j - t^d` (valid
/// modulo `f`), then the result is reduced by long division against the
/// monic `f`.
pub fn reduce(p: &LaurentPoly, dd: &DegreeData) -> K0Class {
    let d = dd.pairing_degree();
    let mut work = p.clone();
    while let Some(e) = work.min_exp() {
        if e >= 0 {
            break;
        }
        let c = work.coeff(e);
        let mut rewrite = LaurentPoly::zero();
        for (&j, &n) in dd.multiplicities() {
            rewrite = &rewrite + &LaurentPoly::monomial(e + j, &c * BigInt::from(n));
        }
        rewrite = &rewrite - &LaurentPoly::monomial(e + d, c.clone());
        work = &(&work - &LaurentPoly::monomial(e, c)) + &rewrite;
    }
    let dense = work.to_int_poly().expect("negative exponents eliminated");
    let rep = mod_monic(&dense, &dd.defining_int_poly());
    K0Class { rep, dd: dd.clone() }
}

/// Remainder of `p` modulo a monic divisor.
fn mod_monic(p: &IntPoly, divisor: &IntPoly) -> IntPoly {
    assert!(divisor.is_monic());
    let dd = divisor.degree().unwrap();
    let mut rem: Vec<BigInt> = p.coeffs().to_vec();
    while rem.len() > dd {
        let k = rem.len() - 1;
        let top = rem.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        for (i, c) in divisor.coeffs().iter().take(dd).enumerate() {
            rem[k - dd + i] -= &top * c;
        }
    }
    IntPoly::new(rem)
}

/// True iff the class of `q` is zero, i.e. `f` divides `q` up to a power of
/// `t`. For the q-polynomial of a module description this characterizes the
/// finite-dimensional (torsion) modules.
pub fn classify_torsion(q: &LaurentPoly, dd: &DegreeData) -> bool {
    reduce(q, dd).is_zero()
}

/// Image of a class in the number ring generated by the ordering root, or
/// the factorization that obstructs it.
#[derive(Clone, Debug)]
pub enum ZThetaImage {
    /// Coordinates in the power basis `1, theta, ..., theta^(d-1)`.
    Coordinates(Vec<BigInt>),
    /// `f` is reducible; the evaluation map is not injective.
    Unavailable(FactorList),
}

/// Evaluation of a class component of the splitting along one irreducible
/// factor of `f`.
#[derive(Clone, Debug, PartialEq)]
pub enum SplitEvaluation {
    /// Linear factor `t - root`: the exact integer value at the root.
    AtIntegerRoot { root: BigInt, value: BigInt },
    /// Higher-degree factor: the representative reduced modulo the factor.
    ModFactor { factor: Vec<BigInt>, coords: Vec<BigInt>, owns_theta: bool },
}

impl K0Class {
    pub fn degree_data(&self) -> &DegreeData {
        &self.dd
    }

    /// The canonical degree-`< d` representative.
    pub fn representative(&self) -> &IntPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Representative coefficients padded to length `d`.
    pub fn coordinates(&self) -> Vec<BigInt> {
        let d = self.dd.pairing_degree() as usize;
        let mut out = self.rep.coeffs().to_vec();
        out.resize(d, BigInt::zero());
        out
    }

    pub fn cone_position(&self) -> ConePosition {
        if self.rep.is_zero() {
            return ConePosition::Zero;
        }
        match roots::sign_at_theta(&self.rep.to_laurent(), &self.dd) {
            Sign::Positive => ConePosition::Positive,
            Sign::Negative => ConePosition::Negative,
            Sign::Zero => ConePosition::Incomparable,
        }
    }

    /// The class of `t^-k * rep`: the image of the degree shift by `k`.
    pub fn shift(&self, k: i64) -> K0Class {
        reduce(&self.rep.to_laurent().shifted(-k), &self.dd)
    }

    /// Coordinates in the power basis of the ordering root when `f` is
    /// irreducible.
    pub fn to_z_theta(&self) -> Result<ZThetaImage, RootsError> {
        let factors = roots::factor_f(&self.dd)?;
        if factors.is_irreducible() {
            Ok(ZThetaImage::Coordinates(self.coordinates()))
        } else {
            Ok(ZThetaImage::Unavailable(factors))
        }
    }

    /// Per-factor evaluations: exact integer values at integer roots of
    /// linear factors, coordinate vectors modulo the other factors.
    pub fn split_evaluations(&self) -> Result<Vec<SplitEvaluation>, RootsError> {
        let factors = roots::factor_f(&self.dd)?;
        let mut out = Vec::new();
        for (index, (factor, _)) in factors.factors().iter().enumerate() {
            if factor.degree() == Some(1) {
                let root = -factor.coeff(0);
                let value = self.rep.eval_bigint(&root);
                out.push(SplitEvaluation::AtIntegerRoot { root, value });
            } else {
                let rem = mod_monic(&self.rep, factor);
                let mut coords = rem.coeffs().to_vec();
                coords.resize(factor.degree().unwrap(), BigInt::zero());
                out.push(SplitEvaluation::ModFactor {
                    factor: factor.coeff_vec(),
                    coords,
                    owns_theta: index == factors.theta_index(),
                });
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> K0ClassJson {
        K0ClassJson {
            degrees: self.dd.degrees().to_vec(),
            rep: self.coordinates().into_iter().map(JsonInt).collect(),
            cone: self.cone_position().to_string(),
        }
    }
}

impl fmt::Debug for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0Class({} mod f{})", self.rep, self.dd)
    }
}

impl Add for &K0Class {
    type Output = K0Class;
    fn add(self, rhs: &K0Class) -> K0Class {
        assert_eq!(self.dd, rhs.dd, "classes live over the same degree data");
        // canonical representatives are closed under addition
        K0Class { rep: &self.rep + &rhs.rep, dd: self.dd.clone() }
    }
}

impl Sub for &K0Class {
    type Output = K0Class;
    fn sub(self, rhs: &K0Class) -> K0Class {
        assert_eq!(self.dd, rhs.dd, "classes live over the same degree data");
        K0Class { rep: &self.rep - &rhs.rep, dd: self.dd.clone() }
    }
}

impl Neg for &K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        K0Class { rep: -&self.rep, dd: self.dd.clone() }
    }
}

impl Mul for &K0Class {
    type Output = K0Class;
    fn mul(self, rhs: &K0Class) -> K0Class {
        assert_eq!(self.dd, rhs.dd, "classes live over the same degree data");
        reduce(&(&self.rep * &rhs.rep).to_laurent(), &self.dd)
    }
}

/// JSON form of a class.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct K0ClassJson {
    pub degrees: Vec<i64>,
    pub rep: Vec<JsonInt>,
    pub cone: String,
}

/// Exact ratio `a_n / a_{n+m}` of Hilbert coefficients, used by the
/// convergence checks.
pub fn hilbert_ratio(dd: &DegreeData, n: usize, m: usize) -> num_rational::BigRational {
    let coeffs = hilbert::hilbert_coeffs(dd, n + m);
    num_rational::BigRational::new(coeffs[n].clone(), coeffs[n + m].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::validate_degrees;
    use proptest::prelude::*;

    fn dd3() -> DegreeData {
        validate_degrees(&[1, 1, 1]).unwrap()
    }

    fn dd1122() -> DegreeData {
        validate_degrees(&[1, 1, 2, 2]).unwrap()
    }

    fn poly(text: &str) -> LaurentPoly {
        LaurentPoly::parse(text).unwrap()
    }

    #[test]
    fn reduce_of_f_is_zero() {
        let dd = dd3();
        assert!(reduce(&dd.defining_poly(), &dd).is_zero());
    }

    #[test]
    fn reduce_inverse_t() {
        // t^-1 = 3 - t modulo t^2 - 3t + 1; check t(3 - t) = 1 mod f
        let dd = dd3();
        let class = reduce(&poly("-1:1"), &dd);
        assert_eq!(class.representative(), &IntPoly::from_i64(&[3, -1]));
        let product = &poly("1:1") * &class.representative().to_laurent();
        assert_eq!(
            reduce(&product, &dd).representative(),
            &IntPoly::from_i64(&[1])
        );
    }

    #[test]
    fn reduce_witness_difference() {
        // q = 1 + t for A + A(-1); q - p = 4f for p = -3 + 13t - 4t^2
        let dd = dd3();
        let q = poly("0:1,1:1");
        let p = poly("0:-3,1:13,2:-4");
        assert!(reduce(&(&q - &p), &dd).is_zero());
    }

    #[test]
    fn reduce_is_idempotent() {
        let dd = dd3();
        let class = reduce(&poly("-2:7,0:1,3:-2"), &dd);
        let again = reduce(&class.representative().to_laurent(), &dd);
        assert_eq!(class, again);
    }

    #[test]
    fn cone_positions() {
        let dd = dd3();
        let q = poly("0:1,1:1");
        assert_eq!(reduce(&q, &dd).cone_position(), ConePosition::Positive);
        assert_eq!(reduce(&LaurentPoly::zero(), &dd).cone_position(), ConePosition::Zero);
        assert_eq!(
            reduce(&poly("0:-1"), &dd).cone_position(),
            ConePosition::Negative
        );
        // 1 + t vanishes at the root -1 of the reducible f but not at theta
        let dd = dd1122();
        assert_eq!(reduce(&poly("0:1,1:1"), &dd).cone_position(), ConePosition::Positive);
    }

    #[test]
    fn incomparable_class_in_reducible_case() {
        // a multiple of t^2 - 3t + 1 is nonzero mod (t+1)(t^2-3t+1) but
        // vanishes at theta
        let dd = dd1122();
        let class = reduce(&poly("0:1,1:-3,2:1"), &dd);
        assert!(!class.is_zero());
        assert_eq!(class.cone_position(), ConePosition::Incomparable);
    }

    #[test]
    fn shift_examples() {
        let dd = dd3();
        let unit = reduce(&LaurentPoly::one(), &dd);
        assert_eq!(unit.shift(1).representative(), &IntPoly::from_i64(&[3, -1]));
        assert_eq!(unit.shift(0), unit);
        assert_eq!(unit.shift(-1).representative(), &IntPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn z_theta_images() {
        let dd = dd3();
        let class = reduce(&poly("0:1,1:1"), &dd);
        match class.to_z_theta().unwrap() {
            ZThetaImage::Coordinates(coords) => {
                assert_eq!(coords, vec![BigInt::from(1), BigInt::from(1)]);
            }
            other => panic!("expected coordinates, got {other:?}"),
        }
        let zero = reduce(&LaurentPoly::zero(), &dd);
        match zero.to_z_theta().unwrap() {
            ZThetaImage::Coordinates(coords) => {
                assert_eq!(coords, vec![BigInt::zero(), BigInt::zero()]);
            }
            other => panic!("expected coordinates, got {other:?}"),
        }
        let dd = dd1122();
        match reduce(&LaurentPoly::one(), &dd).to_z_theta().unwrap() {
            ZThetaImage::Unavailable(factors) => assert_eq!(factors.factors().len(), 2),
            other => panic!("expected unavailable, got {other:?}"),
        }
    }

    #[test]
    fn split_evaluations_reducible() {
        let dd = dd1122();
        let one = reduce(&LaurentPoly::one(), &dd);
        let evals = one.split_evaluations().unwrap();
        assert_eq!(evals.len(), 2);
        assert_eq!(
            evals[0],
            SplitEvaluation::AtIntegerRoot { root: BigInt::from(-1), value: BigInt::from(1) }
        );
        match &evals[1] {
            SplitEvaluation::ModFactor { factor, coords, owns_theta } => {
                assert_eq!(factor, &IntPoly::from_i64(&[1, -3, 1]).coeff_vec());
                assert_eq!(coords, &vec![BigInt::from(1), BigInt::zero()]);
                assert!(owns_theta);
            }
            other => panic!("unexpected {other:?}"),
        }

        let t = reduce(&poly("1:1"), &dd);
        let evals = t.split_evaluations().unwrap();
        assert_eq!(
            evals[0],
            SplitEvaluation::AtIntegerRoot { root: BigInt::from(-1), value: BigInt::from(-1) }
        );
        match &evals[1] {
            SplitEvaluation::ModFactor { coords, .. } => {
                assert_eq!(coords, &vec![BigInt::zero(), BigInt::from(1)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn split_evaluations_irreducible() {
        let dd = dd3();
        let evals = reduce(&poly("0:1,1:1"), &dd).split_evaluations().unwrap();
        assert_eq!(evals.len(), 1);
        match &evals[0] {
            SplitEvaluation::ModFactor { coords, owns_theta, .. } => {
                assert_eq!(coords, &vec![BigInt::from(1), BigInt::from(1)]);
                assert!(owns_theta);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn torsion_classification() {
        let dd = dd3();
        let f = dd.defining_poly();
        assert!(classify_torsion(&f, &dd));
        assert!(!classify_torsion(&LaurentPoly::one(), &dd));
        assert!(classify_torsion(&f.shifted(3), &dd));
    }

    #[test]
    fn class_json_shape() {
        let dd = dd3();
        let json = reduce(&poly("0:1,1:1"), &dd).to_json();
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(text, r#"{"degrees":[1,1,1],"rep":[1,1],"cone":"positive"}"#);
        let back: K0ClassJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::btree_map(-4i64..=4, -30i64..=30, 0..5).prop_map(|m| {
            LaurentPoly::from_terms(m.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reduce_is_additive(a in arb_laurent(), b in arb_laurent()) {
            let dd = dd3();
            let direct = reduce(&(&a + &b), &dd);
            let summed = &reduce(&a, &dd) + &reduce(&b, &dd);
            prop_assert_eq!(direct, summed);
        }

        #[test]
        fn reduce_is_multiplicative(a in arb_laurent(), b in arb_laurent()) {
            let dd = dd1122();
            let direct = reduce(&(&a * &b), &dd);
            let factored = &reduce(&a, &dd) * &reduce(&b, &dd);
            prop_assert_eq!(direct, factored);
        }

        #[test]
        fn shift_round_trip(a in arb_laurent(), k in -6i64..=6) {
            let dd = dd3();
            let class = reduce(&a, &dd);
            prop_assert_eq!(class.shift(k).shift(-k), class);
        }

        #[test]
        fn positive_cone_is_shift_stable(a in arb_laurent(), k in -4i64..=4) {
            let dd = dd3();
            let class = reduce(&a, &dd);
            let pos = class.cone_position();
            if matches!(pos, ConePosition::Positive | ConePosition::Zero) {
                prop_assert_eq!(class.shift(k).cone_position(), pos);
            }
        }
    }
}
