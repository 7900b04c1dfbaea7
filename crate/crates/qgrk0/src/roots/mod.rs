//! Exact real-root isolation for the defining polynomial, exact sign
//! determination at its smallest positive root, integer factorization, and
//! numeric certification of the max-modulus root structure.

mod factor;
mod sturm;
mod trig;

pub use factor::{companion_roots, low_degree_irreducible};
pub use trig::{trig_inequality_check, EqualityCheck, TrigCheckReport, TrigViolation};

use crate::degree::DegreeData;
use crate::poly::{IntPoly, LaurentPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub(crate) use sturm::{int_poly_gcd, SturmChain};

#[derive(Debug, Clone)]
pub enum RootsError {
    FactorizationAmbiguous(String),
    CertificationFailed(Box<MaxModulusReport>),
}

impl fmt::Display for RootsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsError::FactorizationAmbiguous(msg) => {
                write!(f, "factorization could not be verified: {msg}")
            }
            RootsError::CertificationFailed(report) => write!(
                f,
                "max-modulus certification failed at tolerance {}",
                report.tolerance
            ),
        }
    }
}

impl std::error::Error for RootsError {}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => write!(f, "negative"),
            Sign::Zero => write!(f, "zero"),
            Sign::Positive => write!(f, "positive"),
        }
    }
}

/// A rational interval certified (by Sturm count) to contain exactly one
/// real root of its polynomial, with non-root endpoints.
#[derive(Clone)]
pub struct IsolatingInterval {
    poly: IntPoly,
    chain: SturmChain,
    low: BigRational,
    high: BigRational,
}

impl IsolatingInterval {
    pub(crate) fn certify(poly: IntPoly, low: BigRational, high: BigRational) -> Self {
        assert!(low < high);
        assert!(
            !poly.eval_rational(&low).is_zero() && !poly.eval_rational(&high).is_zero(),
            "interval endpoints must not be roots"
        );
        let chain = SturmChain::new(&poly);
        assert_eq!(
            chain.count_roots(&low, &high),
            1,
            "interval must contain exactly one root"
        );
        Self { poly, chain, low, high }
    }

    pub fn low(&self) -> &BigRational {
        &self.low
    }

    pub fn high(&self) -> &BigRational {
        &self.high
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn width(&self) -> BigRational {
        &self.high - &self.low
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.low + &self.high) / BigRational::from(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    /// Bisect until the width is at most `target`.
    pub fn refined(&self, target: &BigRational) -> Self {
        let mut out = self.clone();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        while out.width() > *target {
            let mut mid = (&out.low + &out.high) * &half;
            if out.poly.eval_rational(&mid).is_zero() {
                // the midpoint happens to be the root; a third-point is not
                mid = &out.low + out.width() / BigRational::from(BigInt::from(3));
            }
            if out.chain.count_roots(&out.low, &mid) == 1 {
                out.high = mid;
            } else {
                out.low = mid;
            }
        }
        out
    }

    /// Distinct roots of `other` inside this interval.
    pub fn count_roots_of(&self, other: &IntPoly) -> usize {
        SturmChain::new(other).count_roots(&self.low, &self.high)
    }
}

impl fmt::Debug for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IsolatingInterval({}, {})", self.low, self.high)
    }
}

/// Sturm-certified counts of real roots of `f` in `(0,1)` and `(1, oo)`.
pub fn positive_root_counts(dd: &DegreeData) -> (usize, usize) {
    let f = dd.defining_int_poly();
    let chain = SturmChain::new(&f);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let bound = sturm::root_bound(&f);
    let inner = chain.count_roots(&zero, &one);
    let outer = chain.count_roots(&one, &bound);
    (inner, outer)
}

/// Default isolation width, 10^-12.
pub fn default_isolation_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)))
}

/// Isolate the unique root of `f` in `(0,1)` to the requested width. Also
/// certifies that `f` has exactly one real root in `(0,1)` and exactly one
/// in `(1, oo)`.
pub fn isolate_theta(dd: &DegreeData, width: &BigRational) -> IsolatingInterval {
    assert!(width.is_positive(), "width must be positive");
    let (inner, outer) = positive_root_counts(dd);
    assert_eq!(inner, 1, "defining polynomial must have one root in (0,1)");
    assert_eq!(outer, 1, "defining polynomial must have one root in (1,oo)");
    let f = dd.defining_int_poly();
    let interval = IsolatingInterval::certify(f, BigRational::zero(), BigRational::one());
    interval.refined(width)
}

/// Exact sign of `p` at the smallest positive root of `f`.
///
/// The zero case is decided by an exact gcd with `f`; the nonzero cases by
/// interval evaluation over a shrinking isolating interval, which terminates
/// because the value is then provably nonzero.
pub fn sign_at_theta(p: &LaurentPoly, dd: &DegreeData) -> Sign {
    if p.is_zero() {
        return Sign::Zero;
    }
    // the t^s prefactor has positive value at theta and cannot change signs
    let (_, dense) = p.split_shift();
    let f = dd.defining_int_poly();
    let common = int_poly_gcd(&dense, &f);
    if common.degree().unwrap_or(0) >= 1 {
        let chain = SturmChain::new(&common);
        if chain.count_roots(&BigRational::zero(), &BigRational::one()) >= 1 {
            // a root of gcd(P, f) inside (0,1) must be theta itself
            return Sign::Zero;
        }
    }
    let mut interval = isolate_theta(dd, &BigRational::new(BigInt::one(), BigInt::from(16)));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for _ in 0..20_000 {
        let (lo_val, hi_val) = interval_eval(&dense, &interval.low, &interval.high);
        if lo_val.is_positive() {
            return Sign::Positive;
        }
        if hi_val.is_negative() {
            return Sign::Negative;
        }
        let target = interval.width() * &half;
        interval = interval.refined(&target);
    }
    unreachable!("interval evaluation failed to separate a provably nonzero value from 0")
}

/// Evaluate `p` over `[lo, hi]` with exact interval arithmetic (Horner).
fn interval_eval(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut acc_lo = BigRational::zero();
    let mut acc_hi = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        let products = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mut new_lo = products[0].clone();
        let mut new_hi = products[0].clone();
        for v in &products[1..] {
            if *v < new_lo {
                new_lo = v.clone();
            }
            if *v > new_hi {
                new_hi = v.clone();
            }
        }
        let c = BigRational::from(c.clone());
        acc_lo = new_lo + &c;
        acc_hi = new_hi + c;
    }
    (acc_lo, acc_hi)
}

/// Irreducible integer factorization of `f`, with the factor owning the
/// `(0,1)` root flagged.
#[derive(Clone, Debug)]
pub struct FactorList {
    factors: Vec<(IntPoly, u32)>,
    theta_index: usize,
}

impl FactorList {
    /// `(irreducible factor, multiplicity)` pairs, sorted by degree then
    /// lexicographically by coefficients.
    pub fn factors(&self) -> &[(IntPoly, u32)] {
        &self.factors
    }

    pub fn theta_index(&self) -> usize {
        self.theta_index
    }

    /// The minimal polynomial of the `(0,1)` root.
    pub fn theta_factor(&self) -> &IntPoly {
        &self.factors[self.theta_index].0
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn product(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for (p, mult) in &self.factors {
            for _ in 0..*mult {
                acc = &acc * p;
            }
        }
        acc
    }
}

/// Factor `f` into irreducibles over the integers.
pub fn factor_f(dd: &DegreeData) -> Result<FactorList, RootsError> {
    let f = dd.defining_int_poly();
    let squarefree = sturm::squarefree_part(&f);
    let irreducibles = factor::factor_squarefree_monic(&squarefree)?;
    let mut rest = f.clone();
    let mut factors = Vec::new();
    for irr in irreducibles {
        let (mult, deflated) = factor::strip_multiplicity(&rest, &irr);
        debug_assert!(mult >= 1);
        rest = deflated;
        factors.push((irr, mult));
    }
    if rest != IntPoly::one() {
        return Err(RootsError::FactorizationAmbiguous(
            "factors do not exhaust the polynomial".to_string(),
        ));
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    let product = {
        let mut acc = IntPoly::one();
        for (p, mult) in &factors {
            for _ in 0..*mult {
                acc = &acc * p;
            }
        }
        acc
    };
    if product != f {
        return Err(RootsError::FactorizationAmbiguous(
            "factor product does not reproduce the polynomial".to_string(),
        ));
    }
    let interval = isolate_theta(dd, &BigRational::new(BigInt::one(), BigInt::from(1 << 20)));
    let theta_index = factors
        .iter()
        .position(|(p, _)| interval.count_roots_of(p) >= 1)
        .expect("exactly one factor owns the (0,1) root");
    Ok(FactorList { factors, theta_index })
}

/// One numeric root with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

/// Result of the numeric max-modulus certification.
#[derive(Clone, Debug)]
pub struct MaxModulusReport {
    /// All numeric roots, sorted by increasing modulus.
    pub roots: Vec<ComplexRoot>,
    pub theta: f64,
    pub theta_inv: f64,
    pub theta_low: BigRational,
    pub theta_high: BigRational,
    pub tolerance: f64,
    pub unique_near_theta_inv: bool,
    pub others_below_theta_inv: bool,
    pub unique_near_theta: bool,
    pub others_above_theta: bool,
}

impl MaxModulusReport {
    pub fn passed(&self) -> bool {
        self.unique_near_theta_inv
            && self.others_below_theta_inv
            && self.unique_near_theta
            && self.others_above_theta
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.modulus).collect()
    }
}

/// Default certification tolerance: 1e-9 up to degree 16, 1e-6 beyond
/// (double-precision eigenvalues degrade with degree).
pub fn default_modulus_tolerance(pairing_degree: i64) -> f64 {
    if pairing_degree <= 16 {
        1e-9
    } else {
        1e-6
    }
}

/// Numerically certify that exactly one root of `f` attains the maximal
/// modulus (the real one near `1/theta`), with all other moduli separated by
/// at least `tolerance`, and dually around `theta`.
pub fn certify_max_modulus(
    dd: &DegreeData,
    tolerance: f64,
) -> Result<MaxModulusReport, RootsError> {
    assert!(tolerance > 0.0, "tolerance must be positive");
    let f = dd.defining_int_poly();
    let numeric = companion_roots(&f);
    let roots: Vec<ComplexRoot> = numeric
        .iter()
        .map(|z| ComplexRoot { re: z.re, im: z.im, modulus: z.norm() })
        .collect();

    // refine theta until both theta and 1/theta are pinned far below the
    // certification tolerance
    let budget = BigRational::from_float(tolerance / 1000.0)
        .filter(|w| w.is_positive())
        .unwrap_or_else(|| BigRational::new(BigInt::one(), BigInt::from(10u64.pow(15))));
    let mut interval = isolate_theta(dd, &budget);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    loop {
        let inv_width = interval.width() / (interval.low() * interval.high());
        if inv_width <= budget {
            break;
        }
        let target = interval.width() * &half;
        interval = interval.refined(&target);
    }
    let theta = interval.midpoint_f64();
    let theta_inv_mid = (interval.low().recip() + interval.high().recip())
        / BigRational::from(BigInt::from(2));
    let theta_inv = rational_to_f64(&theta_inv_mid);

    let near_inv: Vec<bool> = roots
        .iter()
        .map(|r| (r.modulus - theta_inv).abs() <= tolerance)
        .collect();
    let near_theta: Vec<bool> = roots
        .iter()
        .map(|r| (r.modulus - theta).abs() <= tolerance)
        .collect();
    let unique_near_theta_inv = near_inv.iter().filter(|&&b| b).count() == 1;
    let others_below_theta_inv = roots
        .iter()
        .zip(&near_inv)
        .filter(|(_, &near)| !near)
        .all(|(r, _)| r.modulus < theta_inv - tolerance);
    let unique_near_theta = near_theta.iter().filter(|&&b| b).count() == 1;
    let others_above_theta = roots
        .iter()
        .zip(&near_theta)
        .filter(|(_, &near)| !near)
        .all(|(r, _)| r.modulus > theta + tolerance);

    let report = MaxModulusReport {
        roots,
        theta,
        theta_inv,
        theta_low: interval.low().clone(),
        theta_high: interval.high().clone(),
        tolerance,
        unique_near_theta_inv,
        others_below_theta_inv,
        unique_near_theta,
        others_above_theta,
    };
    if report.passed() {
        Ok(report)
    } else {
        Err(RootsError::CertificationFailed(Box::new(report)))
    }
}

/// Midpoint of a rational interval as `f64`.
pub fn rational_range_midpoint_f64(low: &BigRational, high: &BigRational) -> f64 {
    rational_to_f64(&((low + high) / BigRational::from(BigInt::from(2))))
}

/// Correctly rounded-ish conversion with ~75 bits of headroom.
pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let scaled: BigInt = (r.numer() << 128u32) / r.denom();
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-128)
}
