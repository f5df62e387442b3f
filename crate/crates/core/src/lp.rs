//! Small linear programs behind the feasibility searches.

use minilp::{ComparisonOp, OptimizationDirection, Problem};

use crate::error::{Error, Result};

fn lp_err(e: minilp::Error) -> Error {
    Error::Lp(e.to_string())
}

/// Infinity-norm distance from `target` to the convex hull of `points`:
/// `min s` subject to `|sum_i l_i p_i - target|_inf <= s`, `l` in the simplex.
pub(crate) fn hull_distance_inf(points: &[&[f64]], target: &[f64]) -> Result<f64> {
    let dim = target.len();
    let mut lp = Problem::new(OptimizationDirection::Minimize);
    let s = lp.add_var(1.0, (0.0, f64::INFINITY));
    let weights: Vec<_> = points
        .iter()
        .map(|_| lp.add_var(0.0, (0.0, f64::INFINITY)))
        .collect();
    lp.add_constraint(weights.iter().map(|&w| (w, 1.0)), ComparisonOp::Eq, 1.0);
    for j in 0..dim {
        let terms: Vec<_> = weights
            .iter()
            .zip(points)
            .filter(|(_, p)| p[j] != 0.0)
            .map(|(&w, p)| (w, p[j]))
            .collect();
        // sum l p_j - s <= t_j and sum l p_j + s >= t_j
        let upper: Vec<_> = terms.iter().copied().chain([(s, -1.0)]).collect();
        let lower: Vec<_> = terms.iter().copied().chain([(s, 1.0)]).collect();
        lp.add_constraint(upper, ComparisonOp::Le, target[j]);
        lp.add_constraint(lower, ComparisonOp::Ge, target[j]);
    }
    let sol = lp.solve().map_err(lp_err)?;
    Ok(sol.objective().max(0.0))
}

/// Largest margin `s <= 1` such that some `x` in the unit box has `<x, n_i> >= s` for every row.
/// Positive exactly when the rows admit a strictly feasible direction.
pub(crate) fn max_strict_margin(normals: &[&[f64]], dim: usize) -> Result<f64> {
    let mut lp = Problem::new(OptimizationDirection::Maximize);
    let s = lp.add_var(1.0, (f64::NEG_INFINITY, 1.0));
    let xs: Vec<_> = (0..dim).map(|_| lp.add_var(0.0, (-1.0, 1.0))).collect();
    for n in normals {
        let terms: Vec<_> = xs
            .iter()
            .zip(n.iter())
            .filter(|(_, &c)| c != 0.0)
            .map(|(&x, &c)| (x, c))
            .chain([(s, -1.0)])
            .collect();
        lp.add_constraint(terms, ComparisonOp::Ge, 0.0);
    }
    let sol = lp.solve().map_err(lp_err)?;
    Ok(sol.objective())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_distance_of_member_is_zero() {
        let pts: [&[f64]; 2] = [&[0.0, 1.0], &[1.0, -1.0]];
        let d = hull_distance_inf(&pts, &[0.5, 0.0]).unwrap();
        assert!(d.abs() < 1e-12);
        let d = hull_distance_inf(&pts, &[0.0, 0.0]).unwrap();
        assert!(d > 0.1);
    }

    #[test]
    fn strict_margin_detects_half_plane() {
        let rows: [&[f64]; 2] = [&[1.0, 0.0], &[0.0, 1.0]];
        assert!(max_strict_margin(&rows, 2).unwrap() > 0.5);
        let rows: [&[f64]; 3] = [&[1.0, 0.0], &[0.0, 1.0], &[0.0, -1.0]];
        assert!(max_strict_margin(&rows, 2).unwrap() <= 1e-12);
    }
}
