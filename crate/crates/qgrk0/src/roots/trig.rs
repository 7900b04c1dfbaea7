//! Grid verification of three trigonometric inequalities used by the
//! root-separation argument:
//!
//! 1. `3 + cos(2e) - cos(e+p) - cos(e-p) - cos(e+q) - cos(e-q) >= 0`
//! 2. `3 + cos(2e) - cos(e+p) - 2cos(e) - cos(e-p) >= 0`
//! 3. `3 + cos(2e) - 2cos(e+p) - 2cos(e-p) >= 0`
//!
//! with equality exactly at the all-cosines-equal-to-plus/minus-one
//! configurations stated per expression.

use std::f64::consts::PI;

pub fn expr1(eta: f64, phi: f64, psi: f64) -> f64 {
    3.0 + (2.0 * eta).cos()
        - (eta + psi).cos()
        - (eta - psi).cos()
        - (eta + phi).cos()
        - (eta - phi).cos()
}

pub fn expr2(eta: f64, psi: f64) -> f64 {
    3.0 + (2.0 * eta).cos() - (eta + psi).cos() - 2.0 * eta.cos() - (eta - psi).cos()
}

pub fn expr3(eta: f64, psi: f64) -> f64 {
    3.0 + (2.0 * eta).cos() - 2.0 * (eta + psi).cos() - 2.0 * (eta - psi).cos()
}

#[derive(Clone, Debug)]
pub struct TrigViolation {
    pub expr: usize,
    pub point: (f64, f64, f64),
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct EqualityCheck {
    pub expr: usize,
    pub point: (f64, f64, f64),
    pub value: f64,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct TrigCheckReport {
    pub grid_step: f64,
    pub points_checked: usize,
    pub violations: Vec<TrigViolation>,
    pub minima: [f64; 3],
    pub equality_checks: Vec<EqualityCheck>,
}

impl TrigCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.equality_checks.iter().all(|c| c.ok)
    }
}

const NEGATIVITY_SLACK: f64 = 1e-12;
const EQUALITY_SLACK: f64 = 1e-9;

/// Evaluate all three expressions over `[0, 2pi)` grids (the first in three
/// variables, the others in two) and check nonnegativity plus the stated
/// equality configurations.
pub fn trig_inequality_check(grid_step: f64) -> TrigCheckReport {
    assert!(
        grid_step > 0.0 && grid_step <= PI / 10.0 + 1e-12,
        "grid step must be in (0, pi/10]"
    );
    let n = (2.0 * PI / grid_step).floor() as usize;
    let grid: Vec<f64> = (0..n).map(|k| k as f64 * grid_step).collect();

    let mut violations = Vec::new();
    let mut minima = [f64::INFINITY; 3];
    let mut points = 0usize;

    for &eta in &grid {
        for &phi in &grid {
            for &psi in &grid {
                let v = expr1(eta, phi, psi);
                points += 1;
                if v < minima[0] {
                    minima[0] = v;
                }
                if v < -NEGATIVITY_SLACK {
                    violations.push(TrigViolation { expr: 1, point: (eta, phi, psi), value: v });
                }
            }
        }
    }
    for &eta in &grid {
        for &psi in &grid {
            points += 2;
            let v2 = expr2(eta, psi);
            if v2 < minima[1] {
                minima[1] = v2;
            }
            if v2 < -NEGATIVITY_SLACK {
                violations.push(TrigViolation { expr: 2, point: (eta, 0.0, psi), value: v2 });
            }
            let v3 = expr3(eta, psi);
            if v3 < minima[2] {
                minima[2] = v3;
            }
            if v3 < -NEGATIVITY_SLACK {
                violations.push(TrigViolation { expr: 3, point: (eta, psi, psi), value: v3 });
            }
        }
    }

    let mut equality_checks = Vec::new();
    let mut push_eq = |expr: usize, point: (f64, f64, f64), value: f64| {
        equality_checks.push(EqualityCheck { expr, point, value, ok: value.abs() <= EQUALITY_SLACK });
    };
    push_eq(1, (0.0, 0.0, 0.0), expr1(0.0, 0.0, 0.0));
    push_eq(1, (PI, PI, PI), expr1(PI, PI, PI));
    push_eq(2, (0.0, 0.0, 0.0), expr2(0.0, 0.0));
    push_eq(3, (0.0, 0.0, 0.0), expr3(0.0, 0.0));
    push_eq(3, (PI, PI, PI), expr3(PI, PI));

    TrigCheckReport { grid_step, points_checked: points, violations, minima, equality_checks }
}
