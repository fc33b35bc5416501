//! Gauss-Legendre rules and barycentric Chebyshev interpolation.

/// Nodes and weights of an N-point Gauss-Legendre rule on [-1, 1].
///
/// Computed by Newton iteration on the Legendre recurrence; accurate to a few
/// ulps for the orders used here.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 2);
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for k in 0..m {
            // Tricomi-style initial guess for the k-th positive root.
            let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            // One final polish after convergence.
            let (p, d) = legendre_with_derivative(n, x);
            x -= p / d;
            dp = legendre_with_derivative(n, x).1;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[k] = -x;
            weights[k] = w;
            nodes[n - 1 - k] = x;
            weights[n - 1 - k] = w;
        }
        if n % 2 == 1 {
            let (_, d) = legendre_with_derivative(n, 0.0);
            nodes[n / 2] = 0.0;
            weights[n / 2] = 2.0 / (d * d);
        }
        GaussLegendre { nodes, weights }
    }

    /// Integral of `f` over [a, b] with this rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Barycentric interpolant on Chebyshev points of the second kind over [a, b].
#[derive(Debug, Clone)]
pub struct ChebyshevInterpolant {
    a: f64,
    b: f64,
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl ChebyshevInterpolant {
    /// Chebyshev points of the second kind on [a, b], in increasing order.
    pub fn points(a: f64, b: f64, n: usize) -> Vec<f64> {
        assert!(n >= 2);
        (0..n)
            .map(|j| {
                let t = (std::f64::consts::PI * j as f64 / (n - 1) as f64).cos();
                0.5 * (a + b) - 0.5 * (b - a) * t
            })
            .collect()
    }

    /// Build from values sampled at `points(a, b, values.len())`.
    pub fn from_values(a: f64, b: f64, values: Vec<f64>) -> Self {
        let nodes = Self::points(a, b, values.len());
        ChebyshevInterpolant {
            a,
            b,
            nodes,
            values,
        }
    }

    pub fn build<F: FnMut(f64) -> f64>(a: f64, b: f64, n: usize, mut f: F) -> Self {
        let nodes = Self::points(a, b, n);
        let values = nodes.iter().map(|&x| f(x)).collect();
        ChebyshevInterpolant {
            a,
            b,
            nodes,
            values,
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.nodes.len();
        let mut num = 0.0;
        let mut den = 0.0;
        let mut sign = 1.0;
        for j in 0..n {
            let dx = x - self.nodes[j];
            if dx == 0.0 {
                return self.values[j];
            }
            let mut w = sign;
            if j == 0 || j == n - 1 {
                w *= 0.5;
            }
            let t = w / dx;
            num += t * self.values[j];
            den += t;
            sign = -sign;
        }
        num / den
    }
}
