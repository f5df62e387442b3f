//! Min-norm point of a convex hull over the simplex.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::dot;

pub const DEFAULT_GAP_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITERS: usize = 10_000;

/// Convex weights, one per vector of the hull.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplexWeights {
    pub lambda: Vec<f64>,
}

impl SimplexWeights {
    /// `sum_i lambda_i v_i`.
    pub fn combine<V: AsRef<[f64]>>(&self, vectors: &[V]) -> Vec<f64> {
        let dim = vectors.first().map_or(0, |v| v.as_ref().len());
        let mut out = vec![0.0; dim];
        for (v, &l) in vectors.iter().zip(&self.lambda) {
            if l != 0.0 {
                for (o, x) in out.iter_mut().zip(v.as_ref()) {
                    *o += l * x;
                }
            }
        }
        out
    }
}

/// Minimizes `0.5 |sum_i lambda_i v_i|^2` over the probability simplex.
///
/// Wolfe's min-norm-point method: the Frank-Wolfe vertex `argmin_j <u, v_j>`
/// joins the active set, then the weights move toward the min-norm point of
/// the active set's affine hull, dropping vertices whose weight reaches zero.
/// Stops once the duality gap `<u, u> - min_j <u, v_j>` (with `u` the current
/// combination) is at most `gap_tol * max(1, max_j |v_j|^2)`; the returned
/// weights satisfy `<u, v_j> >= <u, u> - gap` for every `j`. Each vertex
/// addition and each pull-back counts as one iteration.
pub fn simplex_qp<V: AsRef<[f64]>>(
    vectors: &[V],
    gap_tol: f64,
    max_iters: usize,
) -> Result<SimplexWeights> {
    let first = vectors.first().ok_or(Error::Empty("vector list"))?;
    let dim = first.as_ref().len();
    for v in vectors {
        if v.as_ref().len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.as_ref().len(),
            });
        }
    }
    let p = vectors.len();
    let norms: Vec<f64> = vectors
        .iter()
        .map(|v| dot(v.as_ref(), v.as_ref()))
        .collect();
    let (start, _) = argmin(&norms);
    let tol = gap_tol * norms.iter().copied().fold(1.0_f64, f64::max);
    let mut weights = SimplexWeights {
        lambda: vec![0.0; p],
    };
    weights.lambda[start] = 1.0;
    let mut active = vec![start];

    let mut best_gap = f64::INFINITY;
    let mut iters = 0;
    while iters < max_iters {
        let u = weights.combine(vectors);
        let grads: Vec<f64> = vectors.iter().map(|v| dot(v.as_ref(), &u)).collect();
        let (s, g_s) = argmin(&grads);
        let gap = dot(&u, &u) - g_s;
        best_gap = best_gap.min(gap);
        if gap <= tol {
            return Ok(weights);
        }
        if active.contains(&s) {
            // The affine step already sits at this face's optimum up to rounding.
            break;
        }
        active.push(s);
        iters += 1;
        while iters < max_iters {
            iters += 1;
            let Some(mu) = affine_min_norm(vectors, &active) else {
                break;
            };
            if mu.iter().all(|m| *m > 0.0) {
                for (&i, m) in active.iter().zip(&mu) {
                    weights.lambda[i] = *m;
                }
                break;
            }
            // Move toward mu until the first weight hits zero.
            let t = active
                .iter()
                .zip(&mu)
                .filter(|(_, m)| **m <= 0.0)
                .map(|(&i, m)| weights.lambda[i] / (weights.lambda[i] - m))
                .fold(1.0_f64, f64::min);
            for (&i, m) in active.iter().zip(&mu) {
                let l = &mut weights.lambda[i];
                *l += t * (m - *l);
            }
            let keep: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&i| weights.lambda[i] > 0.0)
                .collect();
            for &i in &active {
                if weights.lambda[i] <= 0.0 {
                    weights.lambda[i] = 0.0;
                }
            }
            if keep.len() == active.len() {
                // t hit a weight only up to rounding; drop the smallest.
                let (pos, _) = argmin(
                    &active
                        .iter()
                        .map(|&i| weights.lambda[i])
                        .collect::<Vec<_>>(),
                );
                weights.lambda[active[pos]] = 0.0;
                active.remove(pos);
            } else {
                active = keep;
            }
            let total: f64 = active.iter().map(|&i| weights.lambda[i]).sum();
            active.iter().for_each(|&i| weights.lambda[i] /= total);
        }
    }
    Err(Error::Convergence {
        what: "simplex QP",
        iterations: iters,
        residual: best_gap,
    })
}

/// Weights `mu` over `active` minimizing `|sum mu_i v_i|` subject to `sum mu_i = 1`.
fn affine_min_norm<V: AsRef<[f64]>>(vectors: &[V], active: &[usize]) -> Option<Vec<f64>> {
    let k = active.len();
    let mut kkt = DMatrix::zeros(k + 1, k + 1);
    for (r, &i) in active.iter().enumerate() {
        for (c, &j) in active.iter().enumerate() {
            kkt[(r, c)] = dot(vectors[i].as_ref(), vectors[j].as_ref());
        }
        kkt[(r, k)] = 1.0;
        kkt[(k, r)] = 1.0;
    }
    let mut rhs = DVector::zeros(k + 1);
    rhs[k] = 1.0;
    let sol = match kkt.clone().lu().solve(&rhs) {
        Some(sol) if sol.iter().all(|v| v.is_finite()) => sol,
        _ => {
            let svd = kkt.svd(true, true);
            let eps = 1e-13 * svd.singular_values.max();
            svd.solve(&rhs, eps).ok()?
        }
    };
    let mu: Vec<f64> = sol.iter().take(k).copied().collect();
    mu.iter().all(|m| m.is_finite()).then_some(mu)
}

fn argmin(values: &[f64]) -> (usize, f64) {
    values
        .iter()
        .copied()
        .enumerate()
        .fold(
            (0, f64::INFINITY),
            |best, cur| if cur.1 < best.1 { cur } else { best },
        )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(vs: &[Vec<f64>]) -> SimplexWeights {
        simplex_qp(vs, DEFAULT_GAP_TOL, DEFAULT_MAX_ITERS).unwrap()
    }

    #[test]
    fn symmetric_pair() {
        let w = qp(&[vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(w.lambda, vec![0.5, 0.5]);
    }

    #[test]
    fn colinear_picks_shorter() {
        let w = qp(&[vec![2.0, 0.0], vec![4.0, 0.0]]);
        assert_eq!(w.lambda, vec![1.0, 0.0]);
    }

    #[test]
    fn origin_inside_hull() {
        let vs = [vec![1.0, 1.0], vec![1.0, -1.0], vec![-1.0, 0.0]];
        let w = qp(&vs);
        let u = w.combine(&vs);
        assert!(dot(&u, &u) <= 1e-12);
        for v in &vs {
            assert!(dot(v, &u) >= dot(&u, &u) - DEFAULT_GAP_TOL);
        }
    }

    #[test]
    fn iteration_cap_reports_gap() {
        let vs = [vec![1.0, 1.0], vec![1.0, -1.0], vec![-1.0, 0.3]];
        match simplex_qp(&vs, 0.0, 1) {
            Err(Error::Convergence { residual, .. }) => assert!(residual > 0.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_and_ragged() {
        let empty: [Vec<f64>; 0] = [];
        assert!(simplex_qp(&empty, 1e-12, 10).is_err());
        assert!(simplex_qp(&[vec![1.0], vec![1.0, 2.0]], 1e-12, 10).is_err());
    }
}
