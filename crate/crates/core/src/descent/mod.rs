//! K-steepest descent for `min_K F(x)` over `R^n`.
//!
//! At each iterate the direction solves
//! `min_d max_{c in C} <c, J d> + 0.5 |d|^2`, whose dual is the min-norm
//! point of the pulled-back gradients `q_i = J^T c_i`. Steps are accepted by
//! an Armijo rule in the cone order: `phi(F(x + t d) - F(x) - beta t J d) <= 0`.

mod objective;
pub mod problems;
mod simplex;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

pub use objective::{
    check_jacobian, forward_difference_jacobian, FnObjective, JacobianCheck, VectorObjective,
};
pub use simplex::{simplex_qp, SimplexWeights, DEFAULT_GAP_TOL, DEFAULT_MAX_ITERS};

use crate::error::{Error, Result};
use crate::gauge::{FiniteGauge, Gauge};
use crate::vector::{check_dim, dot};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DescentConfig {
    /// Armijo slope fraction in (0, 1).
    pub beta: f64,
    /// Step contraction in (0, 1).
    pub shrink: f64,
    pub t0: f64,
    /// Stop once `|theta| <= theta_tol`.
    pub theta_tol: f64,
    pub max_iters: usize,
    pub max_backtracks: usize,
}

impl Default for DescentConfig {
    fn default() -> Self {
        Self {
            beta: 0.1,
            shrink: 0.5,
            t0: 1.0,
            theta_tol: 1e-8,
            max_iters: 500,
            max_backtracks: 60,
        }
    }
}

impl DescentConfig {
    pub fn validate(&self) -> Result<()> {
        let open_unit = |v: f64| v > 0.0 && v < 1.0;
        if !open_unit(self.beta) {
            return Err(Error::Precondition(format!(
                "beta must lie in (0, 1), got {}",
                self.beta
            )));
        }
        if !open_unit(self.shrink) {
            return Err(Error::Precondition(format!(
                "shrink must lie in (0, 1), got {}",
                self.shrink
            )));
        }
        if !(self.t0 > 0.0 && self.t0.is_finite()) {
            return Err(Error::Precondition(format!(
                "t0 must be positive, got {}",
                self.t0
            )));
        }
        if !(self.theta_tol >= 0.0 && self.theta_tol.is_finite()) {
            return Err(Error::Precondition(format!(
                "theta_tol must be nonnegative, got {}",
                self.theta_tol
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    Converged,
    MaxIters,
    LineSearchFailed,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Converged => "converged",
            Self::MaxIters => "max_iters",
            Self::LineSearchFailed => "line_search_failed",
        }
    }
}

/// Record of a solver run. `theta_values[k]` belongs to `iterates[k]`;
/// `step_sizes[k]` moves `iterates[k]` to `iterates[k + 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescentTrace {
    pub iterates: Vec<Vec<f64>>,
    pub objective_values: Vec<Vec<f64>>,
    #[serde(rename = "theta")]
    pub theta_values: Vec<f64>,
    #[serde(rename = "steps")]
    pub step_sizes: Vec<f64>,
    pub termination: Termination,
}

impl DescentTrace {
    pub fn iterations(&self) -> usize {
        self.step_sizes.len()
    }

    pub fn final_point(&self) -> &[f64] {
        self.iterates
            .last()
            .expect("trace holds the starting point")
    }

    pub fn final_theta(&self) -> f64 {
        *self
            .theta_values
            .last()
            .expect("trace holds a theta per iterate")
    }

    /// `max_k phi(F(x_{k+1}) - F(x_k))`; nonpositive for a K-decreasing run.
    pub fn max_step_increase<G: Gauge + ?Sized>(&self, phi: &G) -> Result<f64> {
        self.objective_values
            .windows(2)
            .map(|w| phi.value(&sub(&w[1], &w[0])))
            .try_fold(f64::NEG_INFINITY, |acc, v| Ok(acc.max(v?)))
    }

    /// `max_k phi(F(x_k) - F(x_0))`.
    pub fn max_increase_from_start<G: Gauge + ?Sized>(&self, phi: &G) -> Result<f64> {
        let start = &self.objective_values[0];
        self.objective_values
            .iter()
            .map(|f| phi.value(&sub(f, start)))
            .try_fold(f64::NEG_INFINITY, |acc, v| Ok(acc.max(v?)))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    pub d: Vec<f64>,
    /// Optimal value of the direction subproblem, `-0.5 |d|^2`.
    pub theta: f64,
    pub weights: SimplexWeights,
}

/// Solves the direction subproblem through its simplex dual.
pub fn steepest_descent_direction(jac: &DMatrix<f64>, gauge: &FiniteGauge) -> Result<Direction> {
    let m = gauge.cone().dim();
    if jac.nrows() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: jac.nrows(),
        });
    }
    let pullbacks: Vec<Vec<f64>> = gauge
        .dual_set()
        .iter()
        .map(|c| {
            (jac.transpose() * DVector::from_column_slice(c))
                .iter()
                .copied()
                .collect()
        })
        .collect();
    let weights = simplex_qp(&pullbacks, DEFAULT_GAP_TOL, DEFAULT_MAX_ITERS)?;
    let d: Vec<f64> = weights
        .combine(&pullbacks)
        .into_iter()
        .map(|v| -v)
        .collect();
    let theta = -0.5 * dot(&d, &d);
    Ok(Direction { d, theta, weights })
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineSearch {
    pub step: f64,
    pub accepted: bool,
    /// `F(x + step d)` at the returned step.
    pub value: Vec<f64>,
}

/// Backtracks over `t0 shrink^k`, `k = 0..=max_backtracks`, returning the first
/// step with `max_{c in C} <c, F(x + t d) - F(x) - beta t J d> <= 0`.
pub fn armijo_linesearch<O: VectorObjective + ?Sized>(
    obj: &O,
    x: &[f64],
    d: &[f64],
    jac: &DMatrix<f64>,
    gauge: &FiniteGauge,
    cfg: &DescentConfig,
) -> Result<LineSearch> {
    let fx = eval_checked(obj, x)?;
    backtrack(obj, x, &fx, d, jac, gauge, cfg)
}

fn backtrack<O: VectorObjective + ?Sized>(
    obj: &O,
    x: &[f64],
    fx: &[f64],
    d: &[f64],
    jac: &DMatrix<f64>,
    gauge: &FiniteGauge,
    cfg: &DescentConfig,
) -> Result<LineSearch> {
    check_dim(x.len(), d)?;
    if dot(d, d) == 0.0 {
        return Err(Error::Precondition(
            "line search needs a descent direction with theta < 0".into(),
        ));
    }
    let jd: Vec<f64> = (jac * DVector::from_column_slice(d))
        .iter()
        .copied()
        .collect();
    let mut t = cfg.t0;
    let mut trial = Vec::with_capacity(x.len());
    for k in 0..=cfg.max_backtracks {
        trial.clear();
        trial.extend(x.iter().zip(d).map(|(a, b)| a + t * b));
        let ft = eval_checked(obj, &trial)?;
        let excess: Vec<f64> = ft
            .iter()
            .zip(fx)
            .zip(&jd)
            .map(|((a, b), j)| a - b - cfg.beta * t * j)
            .collect();
        if gauge.evaluate(&excess)?.value <= 0.0 {
            return Ok(LineSearch {
                step: t,
                accepted: true,
                value: ft,
            });
        }
        if k == cfg.max_backtracks {
            return Ok(LineSearch {
                step: t,
                accepted: false,
                value: ft,
            });
        }
        t *= cfg.shrink;
    }
    unreachable!("the loop returns on its last iteration")
}

/// Runs K-steepest descent from `x0` until `|theta| <= theta_tol`, the
/// iteration cap, or a failed line search.
pub fn solve<O: VectorObjective + ?Sized>(
    obj: &O,
    gauge: &FiniteGauge,
    x0: &[f64],
    cfg: &DescentConfig,
) -> Result<DescentTrace> {
    cfg.validate()?;
    check_dim(obj.domain_dim(), x0)?;
    if gauge.cone().dim() != obj.range_dim() {
        return Err(Error::DimensionMismatch {
            expected: obj.range_dim(),
            found: gauge.cone().dim(),
        });
    }

    let mut x = x0.to_vec();
    let mut fx = eval_checked(obj, &x)?;
    let mut trace = DescentTrace {
        iterates: vec![x.clone()],
        objective_values: vec![fx.clone()],
        theta_values: Vec::new(),
        step_sizes: Vec::new(),
        termination: Termination::MaxIters,
    };
    loop {
        let jac = obj.jacobian(&x);
        if jac.nrows() != obj.range_dim()
            || jac.ncols() != obj.domain_dim()
            || jac.iter().any(|v| !v.is_finite())
        {
            return Err(Error::NonFiniteObjective { x });
        }
        let dir = steepest_descent_direction(&jac, gauge)?;
        trace.theta_values.push(dir.theta);
        if dir.theta.abs() <= cfg.theta_tol {
            trace.termination = Termination::Converged;
            break;
        }
        if trace.iterations() >= cfg.max_iters {
            trace.termination = Termination::MaxIters;
            break;
        }
        let ls = backtrack(obj, &x, &fx, &dir.d, &jac, gauge, cfg)?;
        if !ls.accepted {
            trace.termination = Termination::LineSearchFailed;
            break;
        }
        x.iter_mut()
            .zip(&dir.d)
            .for_each(|(xi, di)| *xi += ls.step * di);
        fx = ls.value;
        trace.iterates.push(x.clone());
        trace.objective_values.push(fx.clone());
        trace.step_sizes.push(ls.step);
    }
    Ok(trace)
}

fn eval_checked<O: VectorObjective + ?Sized>(obj: &O, x: &[f64]) -> Result<Vec<f64>> {
    let f = obj.eval(x);
    if f.len() != obj.range_dim() || f.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteObjective { x: x.to_vec() });
    }
    Ok(f)
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
