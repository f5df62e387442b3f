//! Built-in test problems addressable by name.

use nalgebra::DMatrix;

use super::objective::FnObjective;

pub const PROBLEM_IDS: &[&str] = &["biobjective-quadratic", "scalar-quadratic"];

/// `F(x) = (|x|^2, |x - 1|^2)`: its Pareto-critical set is the segment from 0 to the all-ones vector.
pub fn biobjective_quadratic(n: usize) -> FnObjective {
    FnObjective::new(n, 2, |x| {
        vec![
            x.iter().map(|v| v * v).sum(),
            x.iter().map(|v| (v - 1.0) * (v - 1.0)).sum(),
        ]
    })
    .with_jacobian(move |x| {
        DMatrix::from_fn(2, x.len(), |i, j| {
            if i == 0 {
                2.0 * x[j]
            } else {
                2.0 * (x[j] - 1.0)
            }
        })
    })
}

/// `F(x) = |x|^2` with a single objective.
pub fn scalar_quadratic(n: usize) -> FnObjective {
    FnObjective::new(n, 1, |x| vec![x.iter().map(|v| v * v).sum()])
        .with_jacobian(|x| DMatrix::from_fn(1, x.len(), |_, j| 2.0 * x[j]))
}

/// Looks up a problem by id, instantiated for a domain of dimension `n`.
pub fn builtin_problem(id: &str, n: usize) -> Option<FnObjective> {
    match id {
        "biobjective-quadratic" => Some(biobjective_quadratic(n)),
        "scalar-quadratic" => Some(scalar_quadratic(n)),
        _ => None,
    }
}
