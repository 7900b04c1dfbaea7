//! Constructive realization of positive classes.
//!
//! Given a Laurent polynomial `p` that is positive at the ordering root, the
//! algorithm produces an explicit direct sum of shifted free modules and
//! shifted cyclic quotients whose q-polynomial is congruent to `p` modulo
//! `(f)`. The search window is the strictly increasing stretch of the
//! series coefficients of `p/f`; from it the residual coefficients determine
//! the block multiplicities, which the underlying inequalities keep
//! nonnegative.

use crate::degree::DegreeData;
use crate::hilbert::{series_product_coeffs, SeriesStream};
use crate::jsonint::JsonInt;
use crate::k0;
use crate::poly::LaurentPoly;
use crate::roots::{self, Sign};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Search cap for the window start.
pub const SEARCH_CAP: i64 = 10_000;
const MAX_RETRIES: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub enum RealizeError {
    /// The input is not in the strict positive cone.
    NotPositive(Sign),
    /// No strictly increasing window below the search cap; cannot happen
    /// for certified-positive input and signals an internal inconsistency.
    SearchExhausted { cap: i64 },
    /// A proof-guaranteed multiplicity inequality failed even after
    /// restarting the window search with doubled lower bounds.
    MultiplicityNegative { attempts: usize },
}

impl fmt::Display for RealizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizeError::NotPositive(sign) => {
                write!(f, "polynomial is {sign} at the ordering root; realization needs positive")
            }
            RealizeError::SearchExhausted { cap } => {
                write!(f, "no increasing coefficient window found below index {cap}")
            }
            RealizeError::MultiplicityNegative { attempts } => {
                write!(f, "negative block multiplicity after {attempts} window restarts")
            }
        }
    }
}

impl std::error::Error for RealizeError {}

/// One building block of a module description: `A(-shift)^mult` or
/// `(A/x_gen A)(-shift)^mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Free { shift: i64, mult: BigInt },
    Cyclic { gen: usize, shift: i64, mult: BigInt },
}

impl Block {
    fn mult(&self) -> &BigInt {
        match self {
            Block::Free { mult, .. } | Block::Cyclic { mult, .. } => mult,
        }
    }

    fn sort_key(&self) -> (u8, i64, usize) {
        match self {
            Block::Free { shift, .. } => (0, *shift, 0),
            Block::Cyclic { gen, shift, .. } => (1, *shift, *gen),
        }
    }
}

/// A formal direct sum of building blocks, kept in canonical order with
/// merged duplicates and no zero multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleDescription {
    blocks: Vec<Block>,
}

impl ModuleDescription {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Normalize a block list. Panics on a negative multiplicity: callers
    /// hold that invariant.
    pub fn new(blocks: Vec<Block>) -> Self {
        let mut merged: BTreeMap<(u8, i64, usize), BigInt> = BTreeMap::new();
        for b in blocks {
            assert!(
                !b.mult().is_negative(),
                "module description multiplicities must be nonnegative"
            );
            *merged.entry(b.sort_key()).or_insert_with(BigInt::zero) += b.mult();
        }
        let blocks = merged
            .into_iter()
            .filter(|(_, mult)| !mult.is_zero())
            .map(|((kind, shift, gen), mult)| match kind {
                0 => Block::Free { shift, mult },
                _ => Block::Cyclic { gen, shift, mult },
            })
            .collect();
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn to_json(&self) -> ModuleDescriptionJson {
        ModuleDescriptionJson {
            blocks: self
                .blocks
                .iter()
                .map(|b| match b {
                    Block::Free { shift, mult } => BlockJson {
                        kind: "free".to_string(),
                        gen: None,
                        shift: *shift,
                        mult: JsonInt(mult.clone()),
                    },
                    Block::Cyclic { gen, shift, mult } => BlockJson {
                        kind: "cyclic".to_string(),
                        gen: Some(*gen),
                        shift: *shift,
                        mult: JsonInt(mult.clone()),
                    },
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ModuleDescriptionJson) -> Result<Self, String> {
        let mut blocks = Vec::new();
        for b in &json.blocks {
            if b.mult.0.is_negative() {
                return Err(format!("negative multiplicity {}", b.mult.0));
            }
            match b.kind.as_str() {
                "free" => {
                    if b.gen.is_some() {
                        return Err("free blocks take no generator index".to_string());
                    }
                    blocks.push(Block::Free { shift: b.shift, mult: b.mult.0.clone() });
                }
                "cyclic" => {
                    let gen = b.gen.ok_or("cyclic blocks need a generator index")?;
                    blocks.push(Block::Cyclic { gen, shift: b.shift, mult: b.mult.0.clone() });
                }
                other => return Err(format!("unknown block kind {other:?}")),
            }
        }
        Ok(Self::new(blocks))
    }
}

/// JSON form of a module description.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModuleDescriptionJson {
    pub blocks: Vec<BlockJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BlockJson {
    pub kind: String,
    pub gen: Option<usize>,
    pub shift: i64,
    pub mult: JsonInt,
}

/// The q-polynomial of a description: free blocks contribute `mult * t^shift`
/// (a shifted copy of the full Hilbert series), cyclic blocks
/// `mult * t^shift * (1 - t^(d_gen))` (a length-one resolution).
pub fn q_of_module(m: &ModuleDescription, dd: &DegreeData) -> LaurentPoly {
    let degrees = dd.degrees();
    let mut q = LaurentPoly::zero();
    for block in &m.blocks {
        match block {
            Block::Free { shift, mult } => {
                q = &q + &LaurentPoly::monomial(*shift, mult.clone());
            }
            Block::Cyclic { gen, shift, mult } => {
                assert!(
                    *gen >= 1 && *gen <= degrees.len(),
                    "generator index out of range"
                );
                let dj = degrees[gen - 1];
                q = &q + &LaurentPoly::monomial(*shift, mult.clone());
                q = &q - &LaurentPoly::monomial(*shift + dj, mult.clone());
            }
        }
    }
    q
}

/// Smallest `m >= max(lower, d)` such that `b_{m-d} > 0` and
/// `b_{m-d} < b_{m-d+1} < ... < b_m`. Extends the series on demand up to
/// [`SEARCH_CAP`].
pub fn find_m(b: &mut SeriesStream, lower: i64) -> Result<i64, RealizeError> {
    let d = b.degree_data().pairing_degree();
    let mut m = lower.max(d);
    while m <= SEARCH_CAP {
        let prefix = b.prefix(m as usize);
        let window = &prefix[(m - d) as usize..=m as usize];
        if window[0].is_positive() && window.windows(2).all(|w| w[0] < w[1]) {
            return Ok(m);
        }
        m += 1;
    }
    Err(RealizeError::SearchExhausted { cap: SEARCH_CAP })
}

/// Residual coefficients `r_i` for `i` in `[m+1, m+d]`:
/// `r_i = sum_{j=i-m}^{d-1} n_j b_{i-j} - b_{i-d}` with `b` zero at negative
/// indices. Their generating sum equals `p - (sum_{i<=m} b_i t^i) f` exactly.
pub fn residual_coeffs(b: &[BigInt], m: i64, dd: &DegreeData) -> BTreeMap<i64, BigInt> {
    assert!(b.len() as i64 > m, "series prefix must cover index m");
    let d = dd.pairing_degree();
    let fetch = |i: i64| -> BigInt {
        if i < 0 {
            BigInt::zero()
        } else {
            b[i as usize].clone()
        }
    };
    let mut out = BTreeMap::new();
    for i in m + 1..=m + d {
        let mut r = BigInt::zero();
        for (&j, &n) in dd.multiplicities() {
            if j >= i - m {
                r += BigInt::from(n) * fetch(i - j);
            }
        }
        r -= fetch(i - d);
        out.insert(i, r);
    }
    out
}

/// Construct a module description whose q-polynomial is congruent to `p`
/// modulo `(f)`. Requires `p` strictly positive at the ordering root.
pub fn realize(p: &LaurentPoly, dd: &DegreeData) -> Result<ModuleDescription, RealizeError> {
    let sign = roots::sign_at_theta(p, dd);
    if sign != Sign::Positive {
        return Err(RealizeError::NotPositive(sign));
    }
    let base_shift = p.min_exp().expect("positive input is nonzero");
    let shifted = p.shifted(-base_shift);
    let top_degree = shifted.max_exp().unwrap();
    let d = dd.pairing_degree();

    let mut stream = SeriesStream::new(shifted.clone(), dd.clone())
        .expect("shifted polynomial has no negative exponents");
    let mut lower = top_degree.max(d);
    let mut attempts = 0;
    loop {
        let m = find_m(&mut stream, lower)?;
        let b = stream.prefix(m as usize).to_vec();
        match build_blocks(&b, m, dd) {
            Some(blocks) => {
                let shifted_blocks = blocks
                    .into_iter()
                    .map(|block| match block {
                        Block::Free { shift, mult } => {
                            Block::Free { shift: shift + base_shift, mult }
                        }
                        Block::Cyclic { gen, shift, mult } => {
                            Block::Cyclic { gen, shift: shift + base_shift, mult }
                        }
                    })
                    .collect();
                let description = ModuleDescription::new(shifted_blocks);
                let q = q_of_module(&description, dd);
                assert!(
                    k0::reduce(&(&q - p), dd).is_zero(),
                    "constructed q-polynomial must be congruent to the input"
                );
                return Ok(description);
            }
            None => {
                attempts += 1;
                if attempts > MAX_RETRIES {
                    return Err(RealizeError::MultiplicityNegative { attempts });
                }
                lower = 2 * lower.max(m).max(1);
            }
        }
    }
}

/// Blocks realizing `sum r_i t^i`; `None` when a multiplicity would be
/// negative (the caller retries with a larger window).
fn build_blocks(b: &[BigInt], m: i64, dd: &DegreeData) -> Option<Vec<Block>> {
    let d = dd.pairing_degree();
    let degrees = dd.degrees();
    let g = dd.generator_count();
    let r = residual_coeffs(b, m, dd);
    let fetch_b = |i: i64| -> BigInt {
        if i < 0 {
            BigInt::zero()
        } else {
            b[i as usize].clone()
        }
    };
    let mut blocks = Vec::new();
    if d == 2 {
        // all generators in degree one
        let n1 = BigInt::from(dd.multiplicity(1));
        let free_mult = (&n1 - BigInt::one()) * fetch_b(m) - fetch_b(m - 1);
        let cyclic_mult = fetch_b(m);
        if free_mult.is_negative() || cyclic_mult.is_negative() {
            return None;
        }
        blocks.push(Block::Free { shift: m + 1, mult: free_mult });
        blocks.push(Block::Cyclic { gen: 1, shift: m + 1, mult: cyclic_mult });
        return Some(blocks);
    }
    let d1 = degrees[0];
    let dg = degrees[g - 1];
    // middle range: free modules with the residuals as multiplicities
    for i in m + d1 + 1..=m + dg {
        let mult = r[&i].clone();
        if mult.is_negative() {
            return None;
        }
        blocks.push(Block::Free { shift: i, mult });
    }
    // low range paired with the top range through cyclic quotients
    for i in m + 1..=m + d1 {
        let carried = fetch_b(i - d1);
        let free_mult = r[&i].clone() - &carried;
        if free_mult.is_negative() || carried.is_negative() {
            return None;
        }
        blocks.push(Block::Free { shift: i, mult: free_mult });
        blocks.push(Block::Cyclic { gen: g, shift: i, mult: carried });
    }
    Some(blocks)
}

/// Verification report for a claimed realization.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    /// `q_M - p` reduces to zero.
    pub reduce_zero: bool,
    /// The first 200 series coefficients of `q_M * H` are nonnegative.
    pub hilbert_nonnegative: bool,
    /// `q_M` is nonnegative at the ordering root.
    pub sign_nonnegative: bool,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.reduce_zero && self.hilbert_nonnegative && self.sign_nonnegative
    }
}

pub const VERIFY_PREFIX_LEN: usize = 200;

/// Check a `(p, M)` pair: congruence, coefficient nonnegativity, and cone
/// position of `q_M`.
pub fn verify_realization(
    p: &LaurentPoly,
    m: &ModuleDescription,
    dd: &DegreeData,
) -> VerificationReport {
    let q = q_of_module(m, dd);
    let reduce_zero = k0::reduce(&(&q - p), dd).is_zero();
    let hilbert_nonnegative = match q.min_exp() {
        None => true,
        Some(s) => {
            let normalized = q.shifted(-s.min(0));
            series_product_coeffs(&normalized, dd, VERIFY_PREFIX_LEN)
                .expect("negative exponents normalized away")
                .iter()
                .all(|c| !c.is_negative())
        }
    };
    let sign_nonnegative = matches!(roots::sign_at_theta(&q, dd), Sign::Zero | Sign::Positive);
    VerificationReport { reduce_zero, hilbert_nonnegative, sign_nonnegative }
}
