//! Ensemble parameterization and the Gamma-function formulas shared by all
//! modules.
//!
//! Every admissible matrix ensemble is a pair (field, self-adjoint?) which
//! fixes the exponent triple (a, b, c) of the spectral density: self-adjoint
//! spaces have (1, beta, 0), full matrix spaces have (2, beta, beta - 1),
//! where beta = 1, 2, 4 for real, complex, quaternionic entries. All Gamma
//! evaluations go through log-Gamma; only log-scale values cross module
//! boundaries.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParamsError {
    #[error("Schatten exponent must satisfy p >= 1, got {0}")]
    InvalidExponent(f64),
    #[error("matrix size must be >= 1")]
    InvalidSize,
    #[error("gamma ratio requires r != 0")]
    ZeroShift,
    #[error("gamma ratio requires d > 0, got {0}")]
    NonPositiveDimension(f64),
}

/// Natural log of the Gamma function, valid for positive arguments.
pub fn log_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "log_gamma requires x > 0, got {x}");
    libm::lgamma(x)
}

/// Scalar division field of the matrix entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    Real,
    Complex,
    Quaternion,
}

impl Field {
    /// Real dimension beta of the field: 1, 2 or 4.
    pub fn beta(self) -> u32 {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
            Field::Quaternion => 4,
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
            Field::Quaternion => write!(f, "quaternion"),
        }
    }
}

/// One of the six admissible matrix ensembles, with matrix size and Schatten
/// exponent. The single source of parameters for all downstream modules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub field: Field,
    pub self_adjoint: bool,
    pub n: usize,
    pub p: f64,
}

impl EnsembleSpec {
    pub fn new(field: Field, self_adjoint: bool, n: usize, p: f64) -> Result<Self, ParamsError> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(ParamsError::InvalidExponent(p));
        }
        if n == 0 {
            return Err(ParamsError::InvalidSize);
        }
        Ok(EnsembleSpec {
            field,
            self_adjoint,
            n,
            p,
        })
    }

    /// Exponent inside the pairwise interaction |x_i^a - x_j^a|.
    pub fn a(&self) -> u32 {
        if self.self_adjoint {
            1
        } else {
            2
        }
    }

    /// Inverse-temperature exponent of the repulsion; equals beta.
    pub fn b(&self) -> f64 {
        f64::from(self.field.beta())
    }

    /// Exponent of the single-particle weight |x_i|^c.
    pub fn c(&self) -> f64 {
        if self.self_adjoint {
            0.0
        } else {
            f64::from(self.field.beta()) - 1.0
        }
    }

    /// Real dimension d_n of the matrix space.
    pub fn dimension(&self) -> u64 {
        let n = self.n as u64;
        let ab = u64::from(self.a()) * u64::from(self.field.beta());
        let c1 = if self.self_adjoint {
            1
        } else {
            u64::from(self.field.beta())
        };
        ab * n * (n - 1) / 2 + c1 * n
    }

    /// Confinement constant of the Gibbs weight exp(-a b n gamma_p |x|^p).
    pub fn gamma_p(&self) -> f64 {
        gamma_p(self.p).expect("spec invariant guarantees p >= 1")
    }

    /// Log of the Weyl integration coefficient c_n for this ensemble.
    pub fn log_c_n(&self) -> f64 {
        log_c_n(self.a(), self.b(), self.n)
    }

    /// All six admissible (field, self-adjointness) rows, at the given size
    /// and exponent.
    pub fn all_rows(n: usize, p: f64) -> Vec<EnsembleSpec> {
        let mut rows = Vec::with_capacity(6);
        for field in [Field::Real, Field::Complex, Field::Quaternion] {
            for self_adjoint in [false, true] {
                rows.push(EnsembleSpec::new(field, self_adjoint, n, p).unwrap());
            }
        }
        rows
    }
}

/// d_n for raw exponents, as a real number (b and c need not be integral).
pub fn dimension_raw(a: u32, b: f64, c: f64, n: usize) -> f64 {
    let n = n as f64;
    f64::from(a) * b * n * (n - 1.0) / 2.0 + (c + 1.0) * n
}

/// The confinement constant gamma_p = Gamma(p/2) Gamma(1/2) / (2 Gamma((p+1)/2)).
///
/// Evaluated in log scale, so there is no overflow for p well beyond 1e4.
pub fn gamma_p(p: f64) -> Result<f64, ParamsError> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(ParamsError::InvalidExponent(p));
    }
    let log = log_gamma(p / 2.0) + log_gamma(0.5) - log_gamma((p + 1.0) / 2.0) - (2.0f64).ln();
    Ok(log.exp())
}

/// Log-volume of the unitary group U_n(F) with b = dim_R(F).
fn log_unitary_volume(b: f64, n: usize) -> f64 {
    let nf = n as f64;
    let mut log_gamma_sum = 0.0;
    for k in 1..=n {
        log_gamma_sum += log_gamma(b * k as f64 / 2.0);
    }
    b * nf * (nf + 1.0) / 4.0 * (2.0 * std::f64::consts::PI).ln() + nf * (1.0 - b / 2.0) * 2f64.ln()
        - log_gamma_sum
}

/// Log of the Weyl integration coefficient c_n relating matrix-space
/// integrals of spectral functions to n-fold integrals over the line.
///
/// Stable for n up to the thousands: everything is assembled from log-Gamma
/// sums.
pub fn log_c_n(a: u32, b: f64, n: usize) -> f64 {
    let nf = n as f64;
    let log_un = log_unitary_volume(b, n);
    let log_u1 = log_unitary_volume(b, 1);
    let log_factorial = log_gamma(nf + 1.0);
    match a {
        1 => log_un - nf * log_u1 - log_factorial,
        2 => 2.0 * log_un - nf * log_u1 - log_factorial - b * nf * (nf - 1.0) / 2.0 * 2f64.ln(),
        _ => panic!("the interaction exponent a must be 1 or 2, got {a}"),
    }
}

/// Limit of sqrt(n) * c_n^(1/d_n) as n grows.
pub fn c_n_limit(a: u32, b: f64) -> f64 {
    (0.75f64).exp() * (4.0 * std::f64::consts::PI / (f64::from(a) * b)).sqrt()
}

/// The ratio (Gamma(1 + (d+r)/p) / Gamma(1 + d/p))^(-1/r), exactly and in its
/// two-term large-d expansion (d/p)^(1/p) * (1 - (p+r)/(2 p^2 d)).
#[derive(Debug, Clone, Copy)]
pub struct GammaRatioExpansion {
    /// Exact log of the ratio.
    pub exact_log_ratio: f64,
    /// Leading scale factor (d/p)^(1/p).
    pub leading: f64,
    /// Relative first-order correction, -(p+r)/(2 p^2 d).
    pub correction: f64,
}

impl GammaRatioExpansion {
    /// Exact value of the ratio.
    pub fn exact(&self) -> f64 {
        self.exact_log_ratio.exp()
    }

    /// Two-term expansion: leading * (1 + correction).
    pub fn expansion(&self) -> f64 {
        self.leading * (1.0 + self.correction)
    }
}

/// Exact and expanded forms of the inverse Gamma-ratio root appearing in the
/// moment normalization chain. `d` plays the role of the space dimension.
pub fn gamma_ratio(d: f64, r: f64, p: f64) -> Result<GammaRatioExpansion, ParamsError> {
    if r == 0.0 {
        return Err(ParamsError::ZeroShift);
    }
    if !(d > 0.0) {
        return Err(ParamsError::NonPositiveDimension(d));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(ParamsError::InvalidExponent(p));
    }
    let exact_log_ratio = -(log_gamma(1.0 + (d + r) / p) - log_gamma(1.0 + d / p)) / r;
    Ok(GammaRatioExpansion {
        exact_log_ratio,
        leading: (d / p).powf(1.0 / p),
        correction: -(p + r) / (2.0 * p * p * d),
    })
}

/// Exact value of the combined factor
/// (Gamma-ratio at shift q)^(-1/q) * (Gamma-ratio at shift 2)^(1/2)
/// multiplying the moment quotient in the second-order expansion; it equals
/// 1 - (q-2)/(a b p^2 n^2) + o(1/n^2).
pub fn moment_ratio_prefactor(d: f64, q: f64, p: f64) -> Result<f64, ParamsError> {
    let num = gamma_ratio(d, q, p)?.exact_log_ratio;
    let den = gamma_ratio(d, 2.0, p)?.exact_log_ratio;
    Ok((num - den).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dimension_matches_examples() {
        let real_sym = EnsembleSpec::new(Field::Real, true, 3, 2.0).unwrap();
        assert_eq!(real_sym.dimension(), 6);
        let single = EnsembleSpec::new(Field::Real, true, 1, 2.0).unwrap();
        assert_eq!(single.dimension(), 1);
        let complex_full = EnsembleSpec::new(Field::Complex, false, 2, 2.0).unwrap();
        assert_eq!(complex_full.dimension(), 8);
    }

    #[test]
    fn dimension_matches_hand_counts_for_all_rows() {
        // Free real entries of each space at n = 1, 2, 3.
        let expect = |field: Field, sa: bool, n: usize| -> u64 {
            let n = n as u64;
            match (field, sa) {
                (Field::Real, false) => n * n,
                (Field::Complex, false) => 2 * n * n,
                (Field::Quaternion, false) => 4 * n * n,
                (Field::Real, true) => n * (n + 1) / 2,
                (Field::Complex, true) => n * n,
                (Field::Quaternion, true) => 2 * n * n - n,
            }
        };
        for n in 1..=3 {
            for spec in EnsembleSpec::all_rows(n, 2.0) {
                assert_eq!(
                    spec.dimension(),
                    expect(spec.field, spec.self_adjoint, n),
                    "row {:?} self_adjoint={} n={}",
                    spec.field,
                    spec.self_adjoint,
                    n
                );
            }
        }
    }

    #[test]
    fn dimension_strictly_increasing_in_n() {
        for row in EnsembleSpec::all_rows(1, 2.0) {
            let mut prev = 0u64;
            for n in 1..=12 {
                let spec = EnsembleSpec::new(row.field, row.self_adjoint, n, 2.0).unwrap();
                assert!(spec.dimension() > prev);
                prev = spec.dimension();
            }
        }
    }

    #[test]
    fn gamma_p_closed_forms() {
        assert_relative_eq!(gamma_p(2.0).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(
            gamma_p(1.0).unwrap(),
            std::f64::consts::FRAC_PI_2,
            max_relative = 1e-14
        );
        assert_relative_eq!(gamma_p(4.0).unwrap(), 2.0 / 3.0, max_relative = 1e-14);
    }

    #[test]
    fn gamma_p_rejects_p_below_one() {
        assert!(gamma_p(0.99).is_err());
        assert!(gamma_p(f64::NAN).is_err());
        assert!(gamma_p(f64::INFINITY).is_err());
    }

    #[test]
    fn gamma_p_large_exponent_no_overflow() {
        let g = gamma_p(1e4).unwrap();
        assert!(g.is_finite() && g > 0.0);
    }

    #[test]
    fn log_gamma_p_convex_on_grid() {
        // Successive second differences of log gamma_p must stay nonnegative
        // up to rounding: no sign-flip noise above 1e-10.
        let h = 0.05;
        let values: Vec<f64> = (0..=380)
            .map(|i| gamma_p(1.0 + h * i as f64).unwrap().ln())
            .collect();
        for w in values.windows(3) {
            let second = w[2] - 2.0 * w[1] + w[0];
            assert!(second > -1e-10, "second difference {second}");
        }
    }

    #[test]
    fn log_c_n_collapses_at_n_equals_one() {
        assert!(log_c_n(1, 1.0, 1).abs() < 1e-12);
        assert!(log_c_n(1, 2.0, 1).abs() < 1e-12);
        assert!(log_c_n(1, 4.0, 1).abs() < 1e-12);
    }

    #[test]
    fn log_c_n_matches_direct_gamma_products_at_n_two() {
        // Direct evaluation of |U_2| / (|U_1|^2 * 2!) for a = 1, b = 1.
        let pi = std::f64::consts::PI;
        let u2 = (2.0 * pi).powf(1.0 * 2.0 * 3.0 / 4.0) * 2.0f64.powf(2.0 * 0.5)
            / (libm::tgamma(0.5) * libm::tgamma(1.0));
        let u1 = (2.0 * pi).powf(0.5) * 2.0f64.powf(0.5) / libm::tgamma(0.5);
        let direct = u2 / (u1 * u1 * 2.0);
        assert_relative_eq!(log_c_n(1, 1.0, 2).exp(), direct, max_relative = 1e-12);
    }

    #[test]
    fn c_n_root_approaches_limit() {
        for (a, b, c) in [(1u32, 1.0, 0.0), (2u32, 2.0, 1.0)] {
            let limit = c_n_limit(a, b);
            let mut prev_gap = f64::INFINITY;
            for n in [8usize, 32, 128] {
                let d = dimension_raw(a, b, c, n);
                let value = (n as f64).sqrt() * (log_c_n(a, b, n) / d).exp();
                let gap = (value - limit).abs();
                assert!(gap < prev_gap, "gap not shrinking at n={n}: {gap} vs {prev_gap}");
                prev_gap = gap;
            }
            assert!(prev_gap / limit < 0.05);
        }
    }

    #[test]
    fn gamma_ratio_rejects_bad_input() {
        assert_eq!(gamma_ratio(10.0, 0.0, 2.0), Err(ParamsError::ZeroShift));
        assert!(matches!(
            gamma_ratio(0.0, 2.0, 2.0),
            Err(ParamsError::NonPositiveDimension(_))
        ));
    }

    #[test]
    fn moment_prefactor_is_one_at_q_two() {
        for d in [10.0, 100.0, 1234.5] {
            assert_eq!(moment_ratio_prefactor(d, 2.0, 3.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn moment_prefactor_matches_second_order_form() {
        // The combined factor is 1 - (q-2)/(a b p^2 n^2) + o(1/n^2); with
        // d = a b n^2 / 2 this reads 1 - (q-2)/(2 p^2 d).
        let (a, b, p, q) = (1.0, 1.0, 4.0, 4.0);
        let mut prev_scaled_err = f64::INFINITY;
        for n in [8.0f64, 16.0, 32.0, 64.0] {
            let d = a * b * n * (n - 1.0) / 2.0 + n;
            let exact = moment_ratio_prefactor(d, q, p).unwrap();
            let predicted = 1.0 - (q - 2.0) / (a * b * p * p * n * n);
            let scaled_err = (exact - predicted).abs() * n * n;
            assert!(scaled_err < prev_scaled_err);
            prev_scaled_err = scaled_err;
        }
    }

    #[test]
    fn gamma_ratio_expansion_gap_shrinks_with_d() {
        let r = 2.0;
        let p = 4.0;
        let gap = |d: f64| {
            let gr = gamma_ratio(d, r, p).unwrap();
            ((gr.exact() - gr.expansion()) / gr.leading).abs()
        };
        assert!(gap(100.0) < gap(25.0));
        // o(1/n^2) check with d ~ n^2/2: the n^2-scaled gap must shrink.
        let mut prev = f64::INFINITY;
        for n in [8.0f64, 16.0, 32.0, 64.0] {
            let d = n * (n - 1.0) / 2.0 + n;
            let scaled = gap(d) * n * n;
            assert!(scaled < prev);
            prev = scaled;
        }
    }
}
