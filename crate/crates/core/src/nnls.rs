//! Lawson-Hanson active-set nonnegative least squares on small dense problems.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::vector::dot;

#[derive(Debug, Clone)]
pub(crate) struct NnlsSolution {
    #[allow(dead_code)]
    pub coeffs: Vec<f64>,
    pub fitted: Vec<f64>,
}

/// Minimizes `|sum_j c_j a_j - b|` over `c >= 0`, where `a_j` are the `columns`.
pub(crate) fn nnls(columns: &[&[f64]], b: &[f64]) -> Result<NnlsSolution> {
    let m = b.len();
    let p = columns.len();
    let cap = 100 * p.max(1);
    let scale = columns
        .iter()
        .map(|c| dot(c, c).sqrt())
        .fold(0.0_f64, f64::max)
        .max(1.0)
        * dot(b, b).sqrt().max(1.0);
    let dual_tol = 1e-13 * scale;

    let mut x = vec![0.0; p];
    let mut passive = vec![false; p];
    let mut excluded = vec![false; p];
    let mut iterations = 0;

    loop {
        let fitted = combine(columns, &x, m);
        let resid: Vec<f64> = b.iter().zip(&fitted).map(|(bi, fi)| bi - fi).collect();
        let resid_sq = dot(&resid, &resid);

        let entering = (0..p)
            .filter(|&j| !passive[j] && !excluded[j])
            .map(|j| (j, dot(columns[j], &resid)))
            .filter(|&(_, w)| w > dual_tol)
            .max_by(|a, b| a.1.total_cmp(&b.1));
        let Some((j, _)) = entering else {
            return Ok(NnlsSolution { coeffs: x, fitted });
        };
        passive[j] = true;

        let mut first = true;
        loop {
            iterations += 1;
            if iterations > cap {
                return Err(Error::Convergence {
                    what: "nnls projection",
                    iterations,
                    residual: resid_sq.sqrt(),
                });
            }
            let set: Vec<usize> = (0..p).filter(|&i| passive[i]).collect();
            let z = least_squares(columns, &set, b);
            if first && z[set.iter().position(|&i| i == j).unwrap()] <= 0.0 {
                // stagnation: the entering column cannot improve the fit numerically
                passive[j] = false;
                excluded[j] = true;
                break;
            }
            first = false;
            if z.iter().all(|&v| v > 0.0) {
                for (&i, &v) in set.iter().zip(&z) {
                    x[i] = v;
                }
                excluded.iter_mut().for_each(|e| *e = false);
                break;
            }
            let alpha = set
                .iter()
                .zip(&z)
                .filter(|(_, &zi)| zi <= 0.0)
                .map(|(&i, &zi)| x[i] / (x[i] - zi))
                .fold(f64::INFINITY, f64::min);
            for (&i, &zi) in set.iter().zip(&z) {
                x[i] += alpha * (zi - x[i]);
                if x[i] <= 1e-300 {
                    x[i] = 0.0;
                    passive[i] = false;
                }
            }
            if !passive.iter().any(|&a| a) {
                break;
            }
        }
    }
}

fn combine(columns: &[&[f64]], coeffs: &[f64], m: usize) -> Vec<f64> {
    let mut out = vec![0.0; m];
    for (col, &c) in columns.iter().zip(coeffs) {
        if c != 0.0 {
            for (o, v) in out.iter_mut().zip(col.iter()) {
                *o += c * v;
            }
        }
    }
    out
}

fn least_squares(columns: &[&[f64]], set: &[usize], b: &[f64]) -> Vec<f64> {
    let m = b.len();
    let a = DMatrix::from_fn(m, set.len(), |r, c| columns[set[c]][r]);
    let rhs = DVector::from_column_slice(b);
    let svd = a.svd(true, true);
    let eps = 1e-13 * svd.singular_values.max().max(1.0);
    svd.solve(&rhs, eps)
        .map(|v| v.iter().copied().collect())
        .unwrap_or_else(|_| vec![0.0; set.len()])
}
