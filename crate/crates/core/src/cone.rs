//! Closed convex pointed cones with nonempty interior in R^m.
//!
//! Three representations are supported: polyhedral cones carrying both a
//! V-representation (generators of K) and generators of the positive polar
//! cone K+, the nonnegative orthant, and the Lorentz (second-order) cone
//! `{(xbar, t) : |xbar| <= t}` with the axis stored in the last coordinate.
//!
//! Every query is phrased in terms of `-K`, the set on which gauge functionals
//! are nonpositive.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp;
use crate::nnls::nnls;
use crate::vector::{check_dim, check_tol, dot, norm, RealVec};

/// Default membership tolerance, relative to the norm of each dual generator.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Relative tolerance under which two rays are considered duplicates.
pub const DEDUP_TOL: f64 = 1e-12;

/// Largest ambient dimension accepted by brute-force facet enumeration.
pub const MAX_POLAR_DIM: usize = 6;

/// Largest generator count accepted by brute-force facet enumeration.
pub const MAX_POLAR_GENERATORS: usize = 24;

const FACET_TOL: f64 = 1e-10;
const RANK_TOL: f64 = 1e-10;

/// Position of a point relative to `-K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeClassification {
    InteriorOfMinusK,
    BoundaryOfMinusK,
    Exterior,
}

impl ConeClassification {
    /// Labels a signed score with a symmetric boundary band of width `tol`.
    pub fn from_score(score: f64, tol: f64) -> Self {
        if score < -tol {
            Self::InteriorOfMinusK
        } else if score > tol {
            Self::Exterior
        } else {
            Self::BoundaryOfMinusK
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::InteriorOfMinusK => "interior_of_minus_k",
            Self::BoundaryOfMinusK => "boundary_of_minus_k",
            Self::Exterior => "exterior",
        }
    }
}

/// A polyhedral cone `K = cone(generators)` together with generators of `K+`.
///
/// `dual_generators` must contain every extreme ray of `K+`; the oriented
/// distance inside `-K` is computed from them.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyhedralCone {
    dim: usize,
    generators: Vec<RealVec>,
    dual_generators: Vec<RealVec>,
    unit_duals: Vec<RealVec>,
}

impl PolyhedralCone {
    /// Builds a cone from its generators, computing `K+` by facet enumeration
    /// when `dual_generators` is `None`.
    pub fn new(
        dim: usize,
        generators: Vec<RealVec>,
        dual_generators: Option<Vec<RealVec>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let generators = validate_rays(dim, generators, "generator")?;
        let dual_generators = match dual_generators {
            Some(d) => validate_rays(dim, d, "dual generator")?,
            None => facet_rays(dim, &generators)?,
        };
        for (i, g) in generators.iter().enumerate() {
            let gn = g.norm();
            for (j, w) in dual_generators.iter().enumerate() {
                let inner = dot(g, w) / (gn * w.norm());
                if inner < -DEFAULT_TOL {
                    return Err(Error::InconsistentDual {
                        generator: i,
                        dual: j,
                        inner,
                    });
                }
            }
        }
        let unit_duals = dual_generators.iter().map(RealVec::normalized).collect();
        Ok(Self {
            dim,
            generators,
            dual_generators,
            unit_duals,
        })
    }

    /// Convenience constructor from plain rows; the dimension is taken from the first row.
    pub fn from_rows(
        generators: &[Vec<f64>],
        dual_generators: Option<&[Vec<f64>]>,
    ) -> Result<Self> {
        let dim = generators.first().ok_or(Error::Empty("generators"))?.len();
        let to_vecs = |rows: &[Vec<f64>]| -> Result<Vec<RealVec>> {
            rows.iter().map(|r| RealVec::new(r.clone())).collect()
        };
        let duals = dual_generators.map(to_vecs).transpose()?;
        Self::new(dim, to_vecs(generators)?, duals)
    }

    /// The nonnegative orthant with unit-vector generators on both sides.
    pub fn orthant(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let units: Vec<RealVec> = (0..dim).map(|i| RealVec::unit(dim, i)).collect();
        Self::new(dim, units.clone(), Some(units))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[RealVec] {
        &self.generators
    }

    pub fn dual_generators(&self) -> &[RealVec] {
        &self.dual_generators
    }

    /// Dual generators scaled to unit norm, in the same order.
    pub fn unit_dual_generators(&self) -> &[RealVec] {
        &self.unit_duals
    }

    /// Positive polar cone `K+`, generated by the extreme rays of
    /// `{y : <g, y> >= 0 for all generators g}`.
    ///
    /// The result carries this cone's generators as its dual generators, so
    /// `polar(polar(K))` re-enumerates the facets of `K+` from scratch.
    pub fn polar(&self) -> Result<PolyhedralCone> {
        if !self.is_pointed(DEFAULT_TOL)? {
            return Err(Error::NotPointed);
        }
        let rays = facet_rays(self.dim, &self.generators)?;
        PolyhedralCone::new(self.dim, rays, Some(self.generators.clone()))
    }

    /// True iff no nonzero `x` has both `x` and `-x` in the cone.
    ///
    /// Decided by the infinity-norm distance from the origin to the convex
    /// hull of the unit generators: a nonnegative combination vanishes
    /// exactly when that distance is zero.
    pub fn is_pointed(&self, tol: f64) -> Result<bool> {
        check_tol(tol)?;
        let units: Vec<RealVec> = self.generators.iter().map(RealVec::normalized).collect();
        let pts: Vec<&[f64]> = units.iter().map(|u| u.as_slice()).collect();
        let dist = lp::hull_distance_inf(&pts, &vec![0.0; self.dim])?;
        Ok(dist > tol)
    }

    /// True iff some `x` satisfies `<x, w> > 0` for every dual generator `w`
    /// and the generators span the whole space. The second condition guards
    /// against a supplied dual list that misses rays of `K+`.
    pub fn has_nonempty_interior(&self, tol: f64) -> Result<bool> {
        check_tol(tol)?;
        if !spans_space(self.dim, &self.generators) {
            return Ok(false);
        }
        let rows: Vec<&[f64]> = self.unit_duals.iter().map(|u| u.as_slice()).collect();
        Ok(lp::max_strict_margin(&rows, self.dim)? > tol)
    }

    fn dual_score(&self, x: &[f64]) -> f64 {
        self.unit_duals
            .iter()
            .map(|w| dot(x, w))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn project_onto_minus_k(&self, x: &[f64]) -> Result<Vec<f64>> {
        let neg: Vec<RealVec> = self
            .generators
            .iter()
            .map(|g| {
                let n = g.norm();
                RealVec::new(g.iter().map(|v| -v / n).collect()).expect("finite generator")
            })
            .collect();
        let cols: Vec<&[f64]> = neg.iter().map(|c| c.as_slice()).collect();
        Ok(nnls(&cols, x)?.fitted)
    }
}

fn validate_rays(dim: usize, rays: Vec<RealVec>, what: &'static str) -> Result<Vec<RealVec>> {
    if rays.is_empty() {
        return Err(Error::Empty(what));
    }
    let mut out: Vec<RealVec> = Vec::with_capacity(rays.len());
    let mut units: Vec<RealVec> = Vec::with_capacity(rays.len());
    for (index, r) in rays.into_iter().enumerate() {
        check_dim(dim, &r)?;
        if r.norm() == 0.0 {
            return Err(Error::ZeroVector { what, index });
        }
        let u = r.normalized();
        let duplicate = units.iter().any(|v| {
            v.iter()
                .zip(u.iter())
                .all(|(a, b)| (a - b).abs() <= DEDUP_TOL)
        });
        if !duplicate {
            units.push(u);
            out.push(r);
        }
    }
    Ok(out)
}

/// True when every ray of `a` is a positive multiple of a ray of `b` and vice versa,
/// comparing unit directions entrywise within `tol`.
pub fn same_ray_set(a: &[RealVec], b: &[RealVec], tol: f64) -> bool {
    let covered = |from: &[RealVec], to: &[RealVec]| {
        from.iter().all(|r| {
            let u = r.normalized();
            to.iter().any(|s| {
                let v = s.normalized();
                u.iter().zip(v.iter()).all(|(p, q)| (p - q).abs() <= tol)
            })
        })
    };
    covered(a, b) && covered(b, a)
}

/// Extreme rays of `{y : <g, y> >= 0}` by brute force over `(dim - 1)`-subsets of generators.
fn facet_rays(dim: usize, generators: &[RealVec]) -> Result<Vec<RealVec>> {
    if dim > MAX_POLAR_DIM {
        return Err(Error::Unsupported(format!(
            "facet enumeration limited to dim <= {MAX_POLAR_DIM}, got {dim}"
        )));
    }
    if generators.len() > MAX_POLAR_GENERATORS {
        return Err(Error::Unsupported(format!(
            "facet enumeration limited to {MAX_POLAR_GENERATORS} generators, got {}",
            generators.len()
        )));
    }
    let units: Vec<RealVec> = generators.iter().map(RealVec::normalized).collect();
    let mut rays: Vec<RealVec> = Vec::new();
    for subset in Combinations::new(units.len(), dim - 1) {
        let Some(y) = null_vector(dim, &subset, &units) else {
            continue;
        };
        let neg: Vec<f64> = y.iter().map(|v| -v).collect();
        let feasible = |cand: &[f64]| units.iter().all(|g| dot(g, cand) >= -FACET_TOL);
        match (feasible(&y), feasible(&neg)) {
            (true, true) => return Err(Error::EmptyInterior),
            (true, false) => rays.push(RealVec::new(y).expect("finite")),
            (false, true) => rays.push(RealVec::new(neg).expect("finite")),
            (false, false) => {}
        }
    }
    if rays.is_empty() {
        return Err(Error::NotPointed);
    }
    validate_rays(dim, rays, "facet normal")
}

/// Unit vector orthogonal to the selected rows when they have rank `dim - 1`.
fn spans_space(dim: usize, rays: &[RealVec]) -> bool {
    if rays.len() < dim {
        return false;
    }
    let m = DMatrix::from_fn(dim, rays.len(), |i, j| rays[j][i] / rays[j].norm());
    let sv = m.svd(false, false).singular_values;
    let mut sorted: Vec<f64> = sv.iter().copied().collect();
    sorted.sort_by(|a, b| b.total_cmp(a));
    sorted[dim - 1] > RANK_TOL * sorted[0].max(1.0)
}

fn null_vector(dim: usize, subset: &[usize], rows: &[RealVec]) -> Option<Vec<f64>> {
    let mut m = DMatrix::<f64>::zeros(dim, dim);
    for (r, &i) in subset.iter().enumerate() {
        for c in 0..dim {
            m[(r, c)] = rows[i][c];
        }
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t?;
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]));
    if dim > 1 && svd.singular_values[order[1]] <= RANK_TOL {
        return None;
    }
    let y: Vec<f64> = v_t.row(order[0]).iter().copied().collect();
    let n = norm(&y);
    Some(y.into_iter().map(|v| v / n).collect())
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// A closed convex pointed cone with nonempty interior.
#[derive(Debug, Clone, PartialEq)]
pub enum ConeRep {
    Polyhedral(PolyhedralCone),
    Orthant {
        dim: usize,
    },
    /// `{(xbar, t) : |xbar| <= t}`, axis in the last coordinate.
    Lorentz {
        dim: usize,
    },
}

impl ConeRep {
    pub fn orthant(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self::Orthant { dim })
    }

    pub fn lorentz(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Unsupported(format!(
                "Lorentz cone needs dim >= 2, got {dim}"
            )));
        }
        Ok(Self::Lorentz { dim })
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Polyhedral(p) => p.dim(),
            Self::Orthant { dim } | Self::Lorentz { dim } => *dim,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Polyhedral(_) => "polyhedral",
            Self::Orthant { .. } => "orthant",
            Self::Lorentz { .. } => "lorentz",
        }
    }

    /// `max <x, w>/|w|` over the extreme rays `w` of `K+`.
    ///
    /// Negative on the interior of `-K`, zero on its boundary and positive
    /// outside; positively homogeneous in `x`.
    pub fn dual_score(&self, x: &[f64]) -> Result<f64> {
        check_dim(self.dim(), x)?;
        Ok(match self {
            Self::Polyhedral(p) => p.dual_score(x),
            Self::Orthant { .. } => x.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            Self::Lorentz { dim } => {
                let (bar, t) = x.split_at(dim - 1);
                (norm(bar) + t[0]) / std::f64::consts::SQRT_2
            }
        })
    }

    /// Membership in `-K` through the dual inequalities `<x, w> <= tol |w|`.
    pub fn contains_minus_k(&self, x: &[f64], tol: f64) -> Result<bool> {
        check_tol(tol)?;
        Ok(self.dual_score(x)? <= tol)
    }

    /// Trichotomy of `x` relative to `-K` with a boundary band of width `tol`.
    pub fn classify_dual(&self, x: &[f64], tol: f64) -> Result<ConeClassification> {
        check_tol(tol)?;
        Ok(ConeClassification::from_score(self.dual_score(x)?, tol))
    }

    /// Membership of a dual vector in `K+`.
    pub fn dual_contains(&self, c: &[f64], tol: f64) -> Result<bool> {
        check_dim(self.dim(), c)?;
        check_tol(tol)?;
        let cn = norm(c);
        Ok(match self {
            Self::Polyhedral(p) => p
                .generators()
                .iter()
                .all(|g| dot(g, c) >= -tol * g.norm() * cn),
            Self::Orthant { .. } => c.iter().all(|&v| v >= -tol * cn),
            Self::Lorentz { dim } => {
                let (bar, t) = c.split_at(dim - 1);
                norm(bar) <= t[0] + tol * cn
            }
        })
    }

    /// Euclidean projection onto `-K`.
    pub fn project_onto_minus_k(&self, x: &[f64]) -> Result<RealVec> {
        check_dim(self.dim(), x)?;
        let y = match self {
            Self::Polyhedral(p) => p.project_onto_minus_k(x)?,
            Self::Orthant { .. } => x.iter().map(|&v| v.min(0.0)).collect(),
            Self::Lorentz { dim } => {
                let neg: Vec<f64> = x.iter().map(|v| -v).collect();
                project_lorentz(&neg, *dim)
                    .into_iter()
                    .map(|v| -v)
                    .collect()
            }
        };
        RealVec::new(y)
    }

    /// The positive polar cone. Orthant and Lorentz cones are self-dual.
    pub fn polar(&self) -> Result<ConeRep> {
        Ok(match self {
            Self::Polyhedral(p) => Self::Polyhedral(p.polar()?),
            other => other.clone(),
        })
    }

    /// Unit extreme rays of `K+`, or `None` when there are infinitely many.
    pub fn unit_dual_rays(&self) -> Option<Vec<RealVec>> {
        match self {
            Self::Polyhedral(p) => Some(p.unit_dual_generators().to_vec()),
            Self::Orthant { dim } => Some((0..*dim).map(|i| RealVec::unit(*dim, i)).collect()),
            Self::Lorentz { dim: 2 } => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                Some(vec![
                    RealVec::new(vec![h, h]).expect("finite"),
                    RealVec::new(vec![-h, h]).expect("finite"),
                ])
            }
            Self::Lorentz { .. } => None,
        }
    }
}

/// Closed-form projection onto the Lorentz cone `{(xbar, t) : |xbar| <= t}`.
fn project_lorentz(z: &[f64], dim: usize) -> Vec<f64> {
    let (bar, t) = z.split_at(dim - 1);
    let s = t[0];
    let nb = norm(bar);
    if nb <= s {
        z.to_vec()
    } else if nb <= -s {
        vec![0.0; dim]
    } else {
        let a = (nb + s) / 2.0;
        let mut out: Vec<f64> = bar.iter().map(|v| a * v / nb).collect();
        out.push(a);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[f64]) -> RealVec {
        RealVec::new(v.to_vec()).unwrap()
    }

    fn poly(gens: &[&[f64]]) -> PolyhedralCone {
        let rows: Vec<Vec<f64>> = gens.iter().map(|g| g.to_vec()).collect();
        PolyhedralCone::from_rows(&rows, None).unwrap()
    }

    #[test]
    fn contains_minus_k_examples() {
        let o = ConeRep::orthant(2).unwrap();
        assert!(o.contains_minus_k(&[-1.0, -2.0], 1e-9).unwrap());
        assert!(!o.contains_minus_k(&[1.0, -1.0], 1e-9).unwrap());
        let l = ConeRep::lorentz(3).unwrap();
        assert!(l.contains_minus_k(&[0.0, 0.0, -2.0], 1e-9).unwrap());
        assert!(matches!(
            o.contains_minus_k(&[1.0], 1e-9),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            o.contains_minus_k(&[1.0, 1.0], -1.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let o = ConeRep::orthant(2).unwrap();
        let c = |x: &[f64]| o.classify_dual(x, 1e-9).unwrap();
        assert_eq!(c(&[-1.0, -1.0]), ConeClassification::InteriorOfMinusK);
        assert_eq!(c(&[0.0, -1.0]), ConeClassification::BoundaryOfMinusK);
        assert_eq!(c(&[1.0, -1.0]), ConeClassification::Exterior);
    }

    #[test]
    fn polar_of_orthant_is_orthant() {
        let k = poly(&[&[1.0, 0.0], &[0.0, 1.0]]);
        let p = k.polar().unwrap();
        assert!(same_ray_set(p.generators(), k.generators(), 1e-12));
        let k3 = poly(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        assert!(same_ray_set(
            k3.polar().unwrap().generators(),
            k3.generators(),
            1e-12
        ));
    }

    #[test]
    fn polar_of_skewed_wedge() {
        let k = poly(&[&[1.0, 0.0], &[1.0, 1.0]]);
        let p = k.polar().unwrap();
        assert!(same_ray_set(
            p.generators(),
            &[rv(&[0.0, 1.0]), rv(&[1.0, -1.0])],
            1e-12
        ));
        // the computed dual generators are the same rays
        assert!(same_ray_set(k.dual_generators(), p.generators(), 1e-12));
    }

    #[test]
    fn polar_rejects_bad_input() {
        let line = PolyhedralCone::from_rows(
            &[vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0]],
            Some(&[vec![0.0, 1.0]]),
        )
        .unwrap();
        assert_eq!(line.polar(), Err(Error::NotPointed));
        let big = PolyhedralCone::orthant(7).unwrap();
        assert!(matches!(big.polar(), Err(Error::Unsupported(_))));
        // a ray in the plane has no pointed polar
        assert_eq!(
            PolyhedralCone::from_rows(&[vec![1.0, 0.0]], None),
            Err(Error::EmptyInterior)
        );
    }

    #[test]
    fn pointedness_examples() {
        assert!(poly(&[&[1.0, 0.0], &[0.0, 1.0]]).is_pointed(1e-9).unwrap());
        let line = PolyhedralCone::from_rows(
            &[vec![1.0, 0.0], vec![-1.0, 0.0]],
            Some(&[vec![0.0, 1.0], vec![0.0, -1.0]]),
        )
        .unwrap();
        assert!(!line.is_pointed(1e-9).unwrap());
        assert!(poly(&[&[1.0, 0.0], &[1.0, 1.0], &[0.0, 1.0]])
            .is_pointed(1e-9)
            .unwrap());
    }

    #[test]
    fn interior_examples() {
        assert!(PolyhedralCone::orthant(2)
            .unwrap()
            .has_nonempty_interior(1e-9)
            .unwrap());
        let ray = PolyhedralCone::from_rows(
            &[vec![1.0, 0.0]],
            Some(&[vec![1.0, 0.0], vec![0.0, 1.0], vec![0.0, -1.0]]),
        )
        .unwrap();
        assert!(!ray.has_nonempty_interior(1e-9).unwrap());
        let short_duals =
            PolyhedralCone::from_rows(&[vec![1.0, 0.0]], Some(&[vec![1.0, 0.0]])).unwrap();
        assert!(!short_duals.has_nonempty_interior(1e-9).unwrap());
        assert!(poly(&[&[1.0, 0.0], &[1.0, 1.0]])
            .has_nonempty_interior(1e-9)
            .unwrap());
    }

    #[test]
    fn projection_examples() {
        let o = ConeRep::orthant(2).unwrap();
        assert_eq!(
            o.project_onto_minus_k(&[3.0, 4.0]).unwrap().as_slice(),
            &[0.0, 0.0]
        );
        assert_eq!(
            o.project_onto_minus_k(&[-1.0, 2.0]).unwrap().as_slice(),
            &[-1.0, 0.0]
        );
        let k = ConeRep::Polyhedral(poly(&[&[1.0, 0.0], &[1.0, 1.0]]));
        let x = [-2.0, -0.5];
        let y = k.project_onto_minus_k(&x).unwrap();
        assert!(y.iter().zip(&x).all(|(a, b)| (a - b).abs() < 1e-12));
    }

    #[test]
    fn lorentz_projection_branches() {
        let l = ConeRep::lorentz(3).unwrap();
        // already in -K
        let y = l.project_onto_minus_k(&[0.1, 0.0, -1.0]).unwrap();
        assert_eq!(y.as_slice(), &[0.1, 0.0, -1.0]);
        // in K: projects to the apex
        let y = l.project_onto_minus_k(&[0.1, 0.0, 1.0]).unwrap();
        assert_eq!(y.as_slice(), &[0.0, 0.0, 0.0]);
        // elsewhere: onto the boundary
        let y = l.project_onto_minus_k(&[3.0, 4.0, -1.0]).unwrap();
        assert!(l.dual_score(&y).unwrap().abs() < 1e-12);
    }

    #[test]
    fn rejects_zero_and_dedups() {
        assert!(matches!(
            PolyhedralCone::from_rows(&[vec![0.0, 0.0]], None),
            Err(Error::ZeroVector { .. })
        ));
        let k = PolyhedralCone::from_rows(&[vec![1.0, 0.0], vec![2.0, 0.0], vec![0.0, 1.0]], None)
            .unwrap();
        assert_eq!(k.generators().len(), 2);
    }

    #[test]
    fn rejects_inconsistent_duals() {
        let r =
            PolyhedralCone::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]], Some(&[vec![1.0, -1.0]]));
        assert!(matches!(r, Err(Error::InconsistentDual { .. })));
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(6, 2).count(), 15);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn one_dimensional_cone() {
        let k = PolyhedralCone::from_rows(&[vec![2.0]], None).unwrap();
        assert_eq!(k.dual_generators()[0].as_slice(), &[1.0]);
    }
}
