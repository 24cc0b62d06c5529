//! Floating-point geometry of the affine group `Aff(R)_0` and of its
//! 4-dimensional double `R ⋉ H_3`.

pub mod aff;
pub mod double;
pub mod ode;
pub mod sweep;

use thiserror::Error;

pub use ode::Connection;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("logarithm not invertible at ({0}, {1}): defined only on points (1, x)")]
    NotInvertibleHere(f64, f64),
}

/// Below this `|x|` the removable singularity takes its limit value.
pub const EXACT_BRANCH: f64 = 1e-12;
/// Below this `|x|` a 3-term Taylor expansion is used.
pub const SERIES_BRANCH: f64 = 1e-6;

fn branch(x: f64, series: [f64; 3], closed: impl FnOnce() -> f64) -> f64 {
    let ax = x.abs();
    if ax < EXACT_BRANCH {
        series[0]
    } else if ax < SERIES_BRANCH {
        series[0] + x * (series[1] + x * series[2])
    } else {
        closed()
    }
}

/// `(e^x - 1) / x`.
pub fn exprel(x: f64) -> f64 {
    branch(x, [1.0, 0.5, 1.0 / 6.0], || x.exp_m1() / x)
}

/// `(1 - e^{-x}) / x`.
pub fn exprel_neg(x: f64) -> f64 {
    branch(x, [1.0, -0.5, 1.0 / 6.0], || -(-x).exp_m1() / x)
}

/// `(e^{-x} - 1 + x) / x^2`.
pub fn exp_neg_quad(x: f64) -> f64 {
    branch(x, [0.5, -1.0 / 6.0, 1.0 / 24.0], || {
        ((-x).exp_m1() + x) / (x * x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branches_are_continuous() {
        for f in [exprel, exprel_neg, exp_neg_quad] {
            for x in [SERIES_BRANCH, EXACT_BRANCH, 1e-3] {
                for s in [1.0, -1.0] {
                    let a = f(s * x * (1.0 - 1e-9));
                    let b = f(s * x * (1.0 + 1e-9));
                    assert!((a - b).abs() < 1e-9, "{x} {a} {b}");
                }
            }
        }
        assert_eq!(exprel(0.0), 1.0);
        assert_eq!(exp_neg_quad(0.0), 0.5);
        assert!((exprel(1.0) - (std::f64::consts::E - 1.0)).abs() < 1e-15);
        assert!((exp_neg_quad(2.0) - ((-2.0f64).exp() + 1.0) / 4.0).abs() < 1e-15);
    }
}
