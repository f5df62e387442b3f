use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// A smooth map `F: R^n -> R^m` minimized in the order induced by a cone.
pub trait VectorObjective {
    fn domain_dim(&self) -> usize;

    fn range_dim(&self) -> usize;

    fn eval(&self, x: &[f64]) -> Vec<f64>;

    /// The `m x n` Jacobian. Defaults to forward differences.
    fn jacobian(&self, x: &[f64]) -> DMatrix<f64> {
        forward_difference_jacobian(self, x)
    }
}

/// Forward differences with step `1e-7 (1 + |x|_inf)`.
pub fn forward_difference_jacobian<O: VectorObjective + ?Sized>(
    obj: &O,
    x: &[f64],
) -> DMatrix<f64> {
    let h = 1e-7 * (1.0 + x.iter().fold(0.0_f64, |a, v| a.max(v.abs())));
    let f0 = obj.eval(x);
    let mut jac = DMatrix::zeros(f0.len(), x.len());
    let mut xp = x.to_vec();
    for j in 0..x.len() {
        xp[j] = x[j] + h;
        let fp = obj.eval(&xp);
        // divide by the representable step actually taken
        let step = xp[j] - x[j];
        for i in 0..f0.len() {
            jac[(i, j)] = (fp[i] - f0[i]) / step;
        }
        xp[j] = x[j];
    }
    jac
}

type EvalFn = Box<dyn Fn(&[f64]) -> Vec<f64>>;
type JacFn = Box<dyn Fn(&[f64]) -> DMatrix<f64>>;

/// A [`VectorObjective`] assembled from closures.
pub struct FnObjective {
    n: usize,
    m: usize,
    eval: EvalFn,
    jacobian: Option<JacFn>,
}

impl FnObjective {
    pub fn new(n: usize, m: usize, eval: impl Fn(&[f64]) -> Vec<f64> + 'static) -> Self {
        Self {
            n,
            m,
            eval: Box::new(eval),
            jacobian: None,
        }
    }

    pub fn with_jacobian(mut self, jacobian: impl Fn(&[f64]) -> DMatrix<f64> + 'static) -> Self {
        self.jacobian = Some(Box::new(jacobian));
        self
    }
}

impl VectorObjective for FnObjective {
    fn domain_dim(&self) -> usize {
        self.n
    }

    fn range_dim(&self) -> usize {
        self.m
    }

    fn eval(&self, x: &[f64]) -> Vec<f64> {
        (self.eval)(x)
    }

    fn jacobian(&self, x: &[f64]) -> DMatrix<f64> {
        match &self.jacobian {
            Some(j) => j(x),
            None => forward_difference_jacobian(self, x),
        }
    }
}

impl std::fmt::Debug for FnObjective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FnObjective")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("analytic_jacobian", &self.jacobian.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobianCheck {
    pub probes: usize,
    pub worst_relative_error: f64,
}

/// Compares the supplied Jacobian against forward differences at standard-normal probes.
///
/// The error at a probe is `max |J - J_fd| / max(1, max |J|)`.
pub fn check_jacobian<O: VectorObjective + ?Sized>(
    obj: &O,
    probes: usize,
    seed: u64,
) -> JacobianCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..probes {
        let x: Vec<f64> = (0..obj.domain_dim())
            .map(|_| StandardNormal.sample(&mut rng))
            .collect();
        let exact = obj.jacobian(&x);
        let fd = forward_difference_jacobian(obj, &x);
        let scale = exact.amax().max(1.0);
        worst = worst.max((exact - fd).amax() / scale);
    }
    JacobianCheck {
        probes,
        worst_relative_error: worst,
    }
}
