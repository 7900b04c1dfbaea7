//! Built-in example suite: reproduces the worked examples end to end and
//! reports one pass/fail line per item.

use crate::degree::validate_degrees;
use crate::poly::{IntPoly, LaurentPoly};
use crate::qgraph;
use crate::realize::{self, Block, ModuleDescription};
use crate::roots::{self, Sign};
use crate::{hilbert, k0};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SelfTestItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn item(name: &str, result: Result<String, String>) -> SelfTestItem {
    match result {
        Ok(detail) => SelfTestItem { name: name.to_string(), passed: true, detail },
        Err(detail) => SelfTestItem { name: name.to_string(), passed: false, detail },
    }
}

/// Run every item; all must pass on a healthy build.
pub fn run_selftest() -> Vec<SelfTestItem> {
    vec![
        item("lehmer-factorization", lehmer_factorization()),
        item("degree-one-family", degree_one_family()),
        item("reducible-splitting", reducible_splitting()),
        item("negative-series-example", negative_series_example()),
        item("cycle-coefficient-example", cycle_coefficient_example()),
        item("expanded-quiver-shape", expanded_quiver_shape()),
    ]
}

pub fn all_passed(items: &[SelfTestItem]) -> bool {
    items.iter().all(|i| i.passed)
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(format!("check failed: {what}"))
    }
}

fn lehmer_factorization() -> Result<String, String> {
    let dd = validate_degrees(&[5, 6, 7]).map_err(|e| e.to_string())?;
    let f = dd.defining_poly();
    check(f.to_text() == "0:1,5:-1,6:-1,7:-1,12:1", "defining polynomial shape")?;
    let factors = roots::factor_f(&dd).map_err(|e| e.to_string())?;
    check(factors.factors().len() == 2, "two irreducible factors")?;
    check(
        factors.factors()[0].0 == IntPoly::from_i64(&[1, -1, 1]),
        "degree-2 factor",
    )?;
    check(
        factors.factors()[1].0 == IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]),
        "degree-10 factor",
    )?;
    check(factors.theta_index() == 1, "root lives in the degree-10 factor")?;
    let width = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)));
    let theta = roots::isolate_theta(&dd, &width).midpoint_f64();
    let inv = 1.0 / theta;
    check((inv - 1.17628).abs() < 5e-6, "1/theta to five decimals")?;
    Ok(format!("f factors into degrees 2 and 10; 1/theta = {inv:.6}"))
}

fn degree_one_family() -> Result<String, String> {
    for g in 3..=6i64 {
        let degrees = vec![1i64; g as usize];
        let dd = validate_degrees(&degrees).map_err(|e| e.to_string())?;
        let expected_f = LaurentPoly::from_terms([(0, 1), (1, -g), (2, 1)]);
        check(dd.defining_poly() == expected_f, "quadratic defining polynomial")?;
        let factors = roots::factor_f(&dd).map_err(|e| e.to_string())?;
        check(factors.is_irreducible(), "irreducible for all-degree-one data")?;
        let width = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
        let mid = roots::isolate_theta(&dd, &width).midpoint_f64();
        let closed = (g as f64 - ((g * g - 4) as f64).sqrt()) / 2.0;
        check((mid - closed).abs() <= 1.5e-12, "closed-form root matches interval")?;
    }
    Ok("g = 3..6: quadratic, irreducible, root matches closed form to 1e-12".to_string())
}

fn reducible_splitting() -> Result<String, String> {
    let dd = validate_degrees(&[1, 1, 2, 2]).map_err(|e| e.to_string())?;
    let factors = roots::factor_f(&dd).map_err(|e| e.to_string())?;
    check(factors.factors().len() == 2, "two factors")?;
    check(factors.factors()[0].0 == IntPoly::from_i64(&[1, 1]), "linear factor t + 1")?;
    check(
        factors.factors()[1].0 == IntPoly::from_i64(&[1, -3, 1]),
        "quadratic factor",
    )?;
    let one = k0::reduce(&LaurentPoly::one(), &dd);
    let evals = one.split_evaluations().map_err(|e| e.to_string())?;
    check(evals.len() == 2, "two split components")?;
    check(
        matches!(&evals[0], k0::SplitEvaluation::AtIntegerRoot { root, value }
            if *root == BigInt::from(-1) && *value == BigInt::one()),
        "unit evaluates to 1 at -1",
    )?;
    let class = k0::reduce(&LaurentPoly::from_terms([(0, 1), (1, 1)]), &dd);
    check(
        class.cone_position() == k0::ConePosition::Positive,
        "1 + t is positive",
    )?;
    check(
        class.representative().eval_bigint(&BigInt::from(-1)) == BigInt::from(0),
        "1 + t vanishes at -1",
    )?;
    Ok("splitting through (t+1)(t^2-3t+1) behaves as expected".to_string())
}

fn negative_series_example() -> Result<String, String> {
    let dd = validate_degrees(&[1, 1, 1]).map_err(|e| e.to_string())?;
    let p = LaurentPoly::parse("0:-3,1:13,2:-4").unwrap();
    check(roots::sign_at_theta(&p, &dd) == Sign::Positive, "p positive at the root")?;
    let b = hilbert::series_product_coeffs(&p, &dd, 2).map_err(|e| e.to_string())?;
    check(
        b == vec![BigInt::from(-3), BigInt::from(4), BigInt::from(11)],
        "series prefix -3, 4, 11",
    )?;
    check(b[0] < BigInt::from(0), "leading series coefficient negative")?;
    let witness = ModuleDescription::new(vec![
        Block::Free { shift: 0, mult: BigInt::one() },
        Block::Free { shift: 1, mult: BigInt::one() },
    ]);
    let q = realize::q_of_module(&witness, &dd);
    let expected = dd.defining_poly().scaled(&BigInt::from(4));
    check(&q - &p == expected, "q - p is exactly 4f")?;
    check(
        realize::verify_realization(&p, &witness, &dd).all_pass(),
        "witness verifies",
    )?;
    let constructed = realize::realize(&p, &dd).map_err(|e| e.to_string())?;
    check(
        realize::verify_realization(&p, &constructed, &dd).all_pass(),
        "constructed description verifies",
    )?;
    Ok("p = -3+13t-4t^2 realizes although its series has a negative coefficient".to_string())
}

fn cycle_coefficient_example() -> Result<String, String> {
    let dd = validate_degrees(&[2, 3, 4]).map_err(|e| e.to_string())?;
    let (_, second) = qgraph::build_graphs(&dd);
    let det = qgraph::char_poly_det(&second);
    let cycles = qgraph::char_poly_cycles(&second, &dd);
    let expected = dd.defining_poly().shifted(dd.degree_sum() - dd.pairing_degree());
    check(det == cycles, "both characteristic polynomial routes agree")?;
    check(det == expected, "identity with the shifted defining polynomial")?;
    check(
        det.coeff(dd.degree_sum() - 5) == BigInt::from(0),
        "weight-5 coefficient vanishes",
    )?;
    let unions = qgraph::hat_spanning_unions(&[1, 2], 3);
    let mut components: Vec<usize> = unions.iter().map(|u| u.len()).collect();
    components.sort_unstable();
    check(components == vec![1, 2], "exactly the two cancelling unions")?;
    Ok("weight-5 coefficient cancels between the two spanning unions".to_string())
}

fn expanded_quiver_shape() -> Result<String, String> {
    let dd = validate_degrees(&[1, 2, 3]).map_err(|e| e.to_string())?;
    let (quiver, second) = qgraph::build_graphs(&dd);
    check(quiver.vertices().len() == 4, "four quiver vertices")?;
    check(quiver.arrows().len() == 6, "six quiver arrows")?;
    check(second.vertex_count() == 6, "six second-graph vertices")?;
    // exactly one composable pair is not an edge, and it is a_1_0 -> a_3_0
    let mut missing = Vec::new();
    for (u, au) in quiver.arrows().iter().enumerate() {
        for (v, av) in quiver.arrows().iter().enumerate() {
            if au.head == av.tail && !second.has_edge(u, v) {
                missing.push((au.label, av.label));
            }
        }
    }
    check(
        missing
            == vec![(
                qgraph::ArrowLabel { gen: 1, idx: 0 },
                qgraph::ArrowLabel { gen: 3, idx: 0 },
            )],
        "exactly the one removed composition",
    )?;
    Ok("expanded quiver and second graph have the expected shape".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_passes() {
        let items = run_selftest();
        for i in &items {
            assert!(i.passed, "{}: {}", i.name, i.detail);
        }
        assert!(all_passed(&items));
        assert_eq!(items.len(), 6);
    }
}
