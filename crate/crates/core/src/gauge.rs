//! Gauge functionals `phi(x) = sup_{c in C} <x, c>` for a set `C` generating `K+`.
//!
//! A gauge is continuous and sublinear, negative on the interior of `-K` and
//! positive off `-K`. Two kinds are provided: [`FiniteGauge`] over a finite
//! dual set, and [`OrientedDistanceGauge`], the signed distance
//! `d(x, -K) - d(x, R^m \ -K)`, whose dual set is the whole unit-norm slice of `K+`.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::cone::{ConeClassification, ConeRep, PolyhedralCone, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::lp;
use crate::nnls::nnls;
use crate::vector::{check_dim, check_tol, dot, norm, RealVec};

/// Default seed for every sampling routine.
pub const DEFAULT_SEED: u64 = 42;

/// Points whose dual score lies within this distance of zero are exempt from strict sign checks.
pub const BOUNDARY_EXEMPTION: f64 = 1e-6;

const GENERATION_TOL: f64 = 1e-8;

/// A sublinear functional attached to a cone.
pub trait Gauge {
    fn cone(&self) -> &ConeRep;

    fn value(&self, x: &[f64]) -> Result<f64>;

    /// Label from the sign of `phi(x)` with a boundary band of width `tol`.
    fn classify_by_sign(&self, x: &[f64], tol: f64) -> Result<ConeClassification> {
        check_tol(tol)?;
        Ok(ConeClassification::from_score(self.value(x)?, tol))
    }
}

/// Result of evaluating a finite gauge: the value and the lowest index attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub index: usize,
}

/// `phi(x) = max_{c in C} <x, c>` for a finite `C` in `K+ \ {0}` generating `K+`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGauge {
    cone: ConeRep,
    dual_set: Vec<RealVec>,
}

impl FiniteGauge {
    /// Validates that every element of `dual_set` is a nonzero member of `K+`
    /// and, when `K+` has finitely many extreme rays, that `C` generates it.
    pub fn new(cone: ConeRep, dual_set: Vec<RealVec>) -> Result<Self> {
        if dual_set.is_empty() {
            return Err(Error::Empty("dual set"));
        }
        for (index, c) in dual_set.iter().enumerate() {
            check_dim(cone.dim(), c)?;
            if c.norm() == 0.0 {
                return Err(Error::ZeroVector {
                    what: "dual vector",
                    index,
                });
            }
            if !cone.dual_contains(c, DEFAULT_TOL)? {
                return Err(Error::NotInDualCone { index });
            }
        }
        if let Some(rays) = cone.unit_dual_rays() {
            let units: Vec<RealVec> = dual_set.iter().map(RealVec::normalized).collect();
            let cols: Vec<&[f64]> = units.iter().map(|u| u.as_slice()).collect();
            for (index, w) in rays.iter().enumerate() {
                let fit = nnls(&cols, w)?;
                let resid: f64 = norm(
                    &w.iter()
                        .zip(&fit.fitted)
                        .map(|(a, b)| a - b)
                        .collect::<Vec<_>>(),
                );
                if resid > GENERATION_TOL {
                    return Err(Error::DoesNotGenerate { index });
                }
            }
        }
        Ok(Self { cone, dual_set })
    }

    /// The orthant gauge with `C = {e_1, ..., e_m}`.
    pub fn orthant(dim: usize) -> Result<Self> {
        let cone = ConeRep::orthant(dim)?;
        Self::new(cone, (0..dim).map(|i| RealVec::unit(dim, i)).collect())
    }

    /// Finite surrogate of the unit-sphere dual set: the unit-normalized dual generators.
    ///
    /// Agrees with the oriented distance inside `-K` and wherever the nearest
    /// point of `-K` is reached along a single dual ray; elsewhere outside `-K`
    /// it is a strict lower bound (e.g. 4 versus 5 at `(3, 4)` for the orthant).
    pub fn from_unit_dual_sphere(cone: &PolyhedralCone) -> Self {
        Self {
            dual_set: cone.unit_dual_generators().to_vec(),
            cone: ConeRep::Polyhedral(cone.clone()),
        }
    }

    pub fn dual_set(&self) -> &[RealVec] {
        &self.dual_set
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<Evaluation> {
        check_dim(self.cone.dim(), x)?;
        let mut best = Evaluation {
            value: f64::NEG_INFINITY,
            index: 0,
        };
        for (index, c) in self.dual_set.iter().enumerate() {
            let value = dot(x, c);
            if value > best.value {
                best = Evaluation { value, index };
            }
        }
        Ok(best)
    }

    /// Drops every dual vector lying in the convex hull of the remaining ones.
    ///
    /// Vectors are visited in order and tested against the current survivors,
    /// so of two equal vectors the later one is kept.
    pub fn minimal_generating_subset(&self, tol: f64) -> Result<FiniteGauge> {
        check_tol(tol)?;
        let mut kept = vec![true; self.dual_set.len()];
        for i in 0..self.dual_set.len() {
            let others: Vec<&[f64]> = self
                .dual_set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && kept[j])
                .map(|(_, c)| c.as_slice())
                .collect();
            if others.is_empty() {
                continue;
            }
            if lp::hull_distance_inf(&others, &self.dual_set[i])? <= tol {
                kept[i] = false;
            }
        }
        Ok(Self {
            cone: self.cone.clone(),
            dual_set: self
                .dual_set
                .iter()
                .zip(&kept)
                .filter(|(_, &k)| k)
                .map(|(c, _)| c.clone())
                .collect(),
        })
    }
}

impl Gauge for FiniteGauge {
    fn cone(&self) -> &ConeRep {
        &self.cone
    }

    fn value(&self, x: &[f64]) -> Result<f64> {
        Ok(self.evaluate(x)?.value)
    }
}

/// `phi(x) = d(x, -K) - d(x, R^m \ -K)` in the Euclidean norm.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedDistanceGauge {
    cone: ConeRep,
}

impl OrientedDistanceGauge {
    pub fn new(cone: ConeRep) -> Self {
        Self { cone }
    }

    pub fn oriented_distance(&self, x: &[f64]) -> Result<f64> {
        check_dim(self.cone.dim(), x)?;
        Ok(match &self.cone {
            ConeRep::Orthant { .. } => {
                if x.iter().any(|&v| v > 0.0) {
                    norm(&x.iter().map(|&v| v.max(0.0)).collect::<Vec<_>>())
                } else {
                    x.iter().copied().fold(f64::NEG_INFINITY, f64::max)
                }
            }
            ConeRep::Lorentz { dim } => {
                let (bar, t) = x.split_at(dim - 1);
                let nb = norm(bar);
                if t[0] >= nb {
                    nb.hypot(t[0])
                } else {
                    (nb + t[0]) / std::f64::consts::SQRT_2
                }
            }
            ConeRep::Polyhedral(_) => {
                // inside -K the distance to the complement is the nearest facet distance
                let score = self.cone.dual_score(x)?;
                if score <= 0.0 {
                    score
                } else {
                    let y = self.cone.project_onto_minus_k(x)?;
                    norm(
                        &x.iter()
                            .zip(y.iter())
                            .map(|(a, b)| a - b)
                            .collect::<Vec<_>>(),
                    )
                }
            }
        })
    }
}

impl Gauge for OrientedDistanceGauge {
    fn cone(&self) -> &ConeRep {
        &self.cone
    }

    fn value(&self, x: &[f64]) -> Result<f64> {
        self.oriented_distance(x)
    }
}

/// Either gauge kind, as loaded from a gauge file.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyGauge {
    Finite(FiniteGauge),
    Oriented(OrientedDistanceGauge),
}

impl Gauge for AnyGauge {
    fn cone(&self) -> &ConeRep {
        match self {
            Self::Finite(g) => g.cone(),
            Self::Oriented(g) => g.cone(),
        }
    }

    fn value(&self, x: &[f64]) -> Result<f64> {
        match self {
            Self::Finite(g) => g.value(x),
            Self::Oriented(g) => g.value(x),
        }
    }
}

/// Sample lower bound for `sup <x, c>` over the unit-norm slice `{c in K+ : |c| = 1}`.
///
/// Polyhedral cones are sampled by random convex combinations of at most `dim`
/// dual generators (every point of `K+` is such a combination), orthant and
/// Lorentz cones by direct sampling of their unit slice. Each sample is
/// normalized, so the result never exceeds the true supremum.
pub fn dual_sphere_value(cone: &ConeRep, x: &[f64], n_samples: usize, seed: u64) -> Result<f64> {
    check_dim(cone.dim(), x)?;
    if n_samples == 0 {
        return Err(Error::Precondition("n_samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = cone.dim();
    let mut best = f64::NEG_INFINITY;
    let mut buf = vec![0.0; dim];
    for k in 0..n_samples {
        buf.iter_mut().for_each(|v| *v = 0.0);
        match cone {
            ConeRep::Polyhedral(p) => {
                let rays = p.unit_dual_generators();
                let size = rng.random_range(1..=dim.min(rays.len()));
                for i in index::sample(&mut rng, rays.len(), size) {
                    let w: f64 = rng.sample(Exp1);
                    for (b, r) in buf.iter_mut().zip(rays[i].iter()) {
                        *b += w * r;
                    }
                }
            }
            ConeRep::Orthant { .. } => {
                for b in buf.iter_mut() {
                    let z: f64 = rng.sample(StandardNormal);
                    *b = z.abs();
                }
            }
            ConeRep::Lorentz { .. } => {
                let (bar, t) = buf.split_at_mut(dim - 1);
                for b in bar.iter_mut() {
                    *b = rng.sample(StandardNormal);
                }
                let nb = norm(bar);
                if nb == 0.0 {
                    continue;
                }
                // alternate between extreme rays and the interior of the slice
                let radius = if k % 2 == 0 {
                    1.0
                } else {
                    rng.random::<f64>().powf(1.0 / (dim - 1) as f64)
                };
                bar.iter_mut().for_each(|b| *b *= radius / nb);
                t[0] = 1.0;
            }
        }
        let n = norm(&buf);
        if n > 0.0 && n.is_finite() {
            best = best.max(dot(x, &buf) / n);
        }
    }
    if best == f64::NEG_INFINITY {
        return Err(Error::NoSample);
    }
    Ok(best)
}

/// Random point of `K` (not uniform; used to populate `-K` in property checks).
pub fn sample_cone_point<R: Rng>(cone: &ConeRep, rng: &mut R) -> Vec<f64> {
    let dim = cone.dim();
    match cone {
        ConeRep::Polyhedral(p) => {
            let mut out = vec![0.0; dim];
            for g in p.generators() {
                let w: f64 = rng.sample(Exp1);
                let gn = g.norm();
                for (o, v) in out.iter_mut().zip(g.iter()) {
                    *o += w * v / gn;
                }
            }
            out
        }
        ConeRep::Orthant { .. } => (0..dim)
            .map(|_| rng.sample::<f64, _>(StandardNormal).abs())
            .collect(),
        ConeRep::Lorentz { .. } => {
            let mut out: Vec<f64> = (0..dim - 1).map(|_| rng.sample(StandardNormal)).collect();
            let nb = norm(&out);
            let t = nb * (1.0 + rng.random::<f64>());
            out.push(t);
            out
        }
    }
}

/// Outcome of [`verify_gauge_axioms`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaugeReport {
    pub seed: u64,
    pub tol: f64,
    pub checked_points: usize,
    pub homogeneity_violations: usize,
    pub worst_homogeneity: f64,
    pub subadditivity_violations: usize,
    pub worst_subadditivity: f64,
    pub sign_violations: usize,
    pub worst_sign: f64,
    pub sign_exempt: usize,
}

impl GaugeReport {
    pub fn passed(&self) -> bool {
        self.homogeneity_violations == 0
            && self.subadditivity_violations == 0
            && self.sign_violations == 0
    }
}

/// Checks positive homogeneity, subadditivity and sign agreement with the
/// dual-inequality classification on random standard-normal points.
///
/// Each sample draws `x`, `y` and `t = exp(u)` with `u` uniform in `[-3, 3]`
/// and tests `|phi(tx) - t phi(x)| <= tol (1 + |phi(x)|)` and
/// `phi(x + y) <= phi(x) + phi(y) + tol`. Signs are compared at `x` and at a
/// random point of `-K`, skipping points within [`BOUNDARY_EXEMPTION`] of
/// the boundary. The origin is checked once with `phi(0) = 0`.
pub fn verify_gauge_axioms<G: Gauge + ?Sized>(
    phi: &G,
    n_samples: usize,
    seed: u64,
    tol: f64,
) -> Result<GaugeReport> {
    check_tol(tol)?;
    if n_samples == 0 {
        return Err(Error::Precondition("n_samples must be at least 1".into()));
    }
    let cone = phi.cone();
    let dim = cone.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = GaugeReport {
        seed,
        tol,
        checked_points: n_samples,
        homogeneity_violations: 0,
        worst_homogeneity: 0.0,
        subadditivity_violations: 0,
        worst_subadditivity: 0.0,
        sign_violations: 0,
        worst_sign: 0.0,
        sign_exempt: 0,
    };

    let origin = phi.value(&vec![0.0; dim])?;
    report.worst_homogeneity = origin.abs();
    if origin.abs() > tol {
        report.homogeneity_violations += 1;
    }

    let check_sign = |x: &[f64], fx: f64, report: &mut GaugeReport| -> Result<()> {
        let score = cone.dual_score(x)?;
        if score.abs() <= BOUNDARY_EXEMPTION || fx.abs() <= BOUNDARY_EXEMPTION {
            report.sign_exempt += 1;
            return Ok(());
        }
        if ConeClassification::from_score(fx, tol) != cone.classify_dual(x, tol)? {
            report.sign_violations += 1;
            report.worst_sign = report.worst_sign.max(fx.abs());
        }
        Ok(())
    };

    for _ in 0..n_samples {
        let x: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let y: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let t = rng.random_range(-3.0..=3.0_f64).exp();

        let fx = phi.value(&x)?;
        let fy = phi.value(&y)?;
        let tx: Vec<f64> = x.iter().map(|v| t * v).collect();
        let ftx = phi.value(&tx)?;
        let homog = (ftx - t * fx).abs() / (1.0 + fx.abs());
        report.worst_homogeneity = report.worst_homogeneity.max(homog);
        if homog > tol {
            report.homogeneity_violations += 1;
        }

        let xy: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let excess = phi.value(&xy)? - fx - fy;
        report.worst_subadditivity = report.worst_subadditivity.max(excess);
        if excess > tol {
            report.subadditivity_violations += 1;
        }

        check_sign(&x, fx, &mut report)?;
        let inner: Vec<f64> = sample_cone_point(cone, &mut rng)
            .into_iter()
            .map(|v| -v)
            .collect();
        let fi = phi.value(&inner)?;
        check_sign(&inner, fi, &mut report)?;
    }
    Ok(report)
}
