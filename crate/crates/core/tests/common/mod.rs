#![allow(dead_code)]

use conegauge::{ConeRep, PolyhedralCone, RealVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal_vec<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.sample(StandardNormal)).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn unit<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let v = normal_vec(rng, dim);
        let n = norm(&v);
        if n > 1e-3 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// Orthonormal frame `(axis, b1, b2)` in R^3 by Gram-Schmidt.
fn frame3<R: Rng>(rng: &mut R) -> [Vec<f64>; 3] {
    let a = unit(rng, 3);
    let mut b = unit(rng, 3);
    let p = dot(&a, &b);
    b.iter_mut().zip(&a).for_each(|(bi, ai)| *bi -= p * ai);
    let nb = norm(&b);
    b.iter_mut().for_each(|bi| *bi /= nb);
    let c = vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ];
    [a, b, c]
}

/// Angles in `[0, 2pi)` with pairwise circular gap at least `gap`.
fn spread_angles<R: Rng>(rng: &mut R, k: usize, gap: f64) -> Vec<f64> {
    let tau = std::f64::consts::TAU;
    loop {
        let mut a: Vec<f64> = (0..k).map(|_| rng.random::<f64>() * tau).collect();
        a.sort_by(f64::total_cmp);
        let ok = a.windows(2).all(|w| w[1] - w[0] >= gap) && (a[0] + tau - a[k - 1]) >= gap;
        if ok {
            return a;
        }
    }
}

/// Random pointed full-dimensional cone in R^2 or R^3 whose generators are all extreme rays.
///
/// R^2: two rays around a random axis. R^3: 3 to 6 rays through a circle of
/// random radius in the slice `<axis, x> = 1`, angularly separated.
pub fn random_extreme_generators<R: Rng>(rng: &mut R, dim: usize) -> Vec<Vec<f64>> {
    let scale = |rng: &mut R, v: Vec<f64>| -> Vec<f64> {
        let s = rng.random_range(0.5..2.0);
        v.into_iter().map(|x| x * s).collect()
    };
    match dim {
        2 => {
            let axis = rng.random::<f64>() * std::f64::consts::TAU;
            let half = rng.random_range(0.15..1.4);
            [axis - half, axis + half]
                .into_iter()
                .map(|a| scale(rng, vec![a.cos(), a.sin()]))
                .collect()
        }
        3 => {
            let [a, b, c] = frame3(rng);
            let k = rng.random_range(3..=6);
            let r = rng.random_range(0.3..1.5);
            spread_angles(rng, k, 0.3)
                .into_iter()
                .map(|th| {
                    let g: Vec<f64> = (0..3)
                        .map(|i| a[i] + r * (th.cos() * b[i] + th.sin() * c[i]))
                        .collect();
                    scale(rng, g)
                })
                .collect()
        }
        _ => panic!("random cones are generated in R^2 and R^3 only"),
    }
}

pub fn random_polyhedral<R: Rng>(rng: &mut R, dim: usize) -> PolyhedralCone {
    let gens = random_extreme_generators(rng, dim);
    PolyhedralCone::from_rows(&gens, None).expect("random cone is pointed and solid")
}

pub fn to_realvecs(rows: &[Vec<f64>]) -> Vec<RealVec> {
    rows.iter()
        .map(|r| RealVec::new(r.clone()).unwrap())
        .collect()
}

/// Random point of `-K`: a negated nonnegative combination of generators or a point of the
/// closed-form cones, with a random fraction of samples pushed to the boundary.
pub fn minus_k_point<R: Rng>(rng: &mut R, cone: &ConeRep) -> Vec<f64> {
    conegauge::gauge::sample_cone_point(cone, rng)
        .into_iter()
        .map(|v| -v)
        .collect()
}
