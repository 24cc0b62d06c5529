//! The identity component `Aff(R)_0 = {(a, b) : a > 0}` with product
//! `(a1, b1)(a2, b2) = (a1 a2, a1 b2 + b1)` and Lie algebra `[e1, e2] = e2`.

use serde::Serialize;

use super::ode::{rk4_at, Connection};
use super::{exprel, GeomError};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AffElement {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AffTangent {
    pub xi1: f64,
    pub xi2: f64,
}

pub const IDENTITY: AffElement = AffElement { a: 1.0, b: 0.0 };

impl AffElement {
    pub fn new(a: f64, b: f64) -> Result<Self, GeomError> {
        if a > 0.0 && a.is_finite() && b.is_finite() {
            Ok(Self { a, b })
        } else {
            Err(GeomError::Domain(format!(
                "({a}, {b}) is not in the identity component a > 0"
            )))
        }
    }

    pub fn max_diff(&self, o: &AffElement) -> f64 {
        (self.a - o.a).abs().max((self.b - o.b).abs())
    }
}

impl AffTangent {
    pub fn new(xi1: f64, xi2: f64) -> Self {
        Self { xi1, xi2 }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(s * self.xi1, s * self.xi2)
    }

    pub fn max_diff(&self, o: &AffTangent) -> f64 {
        (self.xi1 - o.xi1).abs().max((self.xi2 - o.xi2).abs())
    }
}

pub fn mul(p: &AffElement, q: &AffElement) -> AffElement {
    AffElement {
        a: p.a * q.a,
        b: p.a * q.b + p.b,
    }
}

pub fn inv(p: &AffElement) -> AffElement {
    AffElement {
        a: 1.0 / p.a,
        b: -p.b / p.a,
    }
}

/// `(e^{ξ1}, ξ2 (e^{ξ1} - 1)/ξ1)`, or `(1, ξ2)` when `ξ1 = 0`.
pub fn exp(xi: &AffTangent) -> AffElement {
    AffElement {
        a: xi.xi1.exp(),
        b: xi.xi2 * exprel(xi.xi1),
    }
}

/// Inverse of [`exp`]: `(ln a, b ln a / (a - 1))`, or `(0, b)` when `a = 1`.
pub fn log(p: &AffElement) -> AffTangent {
    let l = p.a.ln();
    AffTangent {
        xi1: l,
        xi2: p.b / exprel(l),
    }
}

/// Integral curve `t -> exp(t ξ)` of the left-invariant field of `ξ`.
pub fn integral_curve(xi: &AffTangent, t: f64) -> AffElement {
    exp(&xi.scale(t))
}

/// `ω0` with `ω0(e1, e2) = 1`.
pub fn symplectic_form() -> [[f64; 2]; 2] {
    [[0.0, 1.0], [-1.0, 0.0]]
}

/// `∇_{e1} e1 = -e1`, `∇_{e2} e1 = -e2`, all other products zero.
pub fn connection() -> Connection {
    Connection::from_entries(2, &[(1, 1, 1, -1.0), (2, 1, 2, -1.0)])
}

/// Geodesic through the identity with initial velocity `ξ = (ξ1, η)`:
/// `(1, η t)` if `ξ1 = 0`, else `(1 - ln|ξ1 t - 1|, -(η/ξ1) ln|ξ1 t - 1|)`,
/// defined for `1 - e < ξ1 t < 1 + e`, `ξ1 t ≠ 1`.
pub fn geodesic(xi: &AffTangent, t: f64) -> Result<AffElement, GeomError> {
    let (x, eta) = (xi.xi1, xi.xi2);
    if x == 0.0 {
        return Ok(AffElement { a: 1.0, b: eta * t });
    }
    let s = x * t;
    let e = std::f64::consts::E;
    if !(s > 1.0 - e && s < 1.0 + e) || s == 1.0 {
        return Err(GeomError::Domain(format!(
            "geodesic with xi1 = {x} is defined for 1-e < xi1*t < 1+e, xi1*t != 1; got t = {t}"
        )));
    }
    let l = (s - 1.0).abs().ln();
    Ok(AffElement {
        a: 1.0 - l,
        b: -eta / x * l,
    })
}

/// Geodesic exponential `Exp_ε(ξ) = geodesic(ξ, 1)`.
pub fn exp_connection(xi: &AffTangent) -> Result<AffElement, GeomError> {
    geodesic(xi, 1.0)
}

/// Geodesic logarithm, defined only on the slice `{(1, x)}`.
pub fn log_connection(p: &AffElement) -> Result<AffTangent, GeomError> {
    if p.a == 1.0 {
        Ok(AffTangent::new(0.0, p.b))
    } else {
        Err(GeomError::NotInvertibleHere(p.a, p.b))
    }
}

/// RK4 solution of the geodesic equations at the given times (monotone from 0).
pub fn geodesic_rk4(xi: &AffTangent, times: &[f64], substeps: usize) -> Vec<AffElement> {
    let c = connection();
    rk4_at(
        |s| c.geodesic_field(s),
        &[1.0, 0.0, xi.xi1, xi.xi2],
        0.0,
        times,
        substeps,
    )
    .into_iter()
    .map(|s| AffElement { a: s[0], b: s[1] })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        let p = AffElement::new(2.0, 1.0).unwrap();
        let q = AffElement::new(3.0, 4.0).unwrap();
        assert_eq!(mul(&p, &q), AffElement { a: 6.0, b: 9.0 });
        assert_eq!(mul(&IDENTITY, &q), q);
        assert!(mul(&p, &inv(&p)).max_diff(&IDENTITY) < 1e-12);
        assert!(AffElement::new(0.0, 1.0).is_err());
    }

    #[test]
    fn exp_log_values() {
        assert_eq!(
            exp(&AffTangent::new(0.0, 5.0)),
            AffElement { a: 1.0, b: 5.0 }
        );
        let e = exp(&AffTangent::new(1.0, 0.0));
        assert!((e.a - std::f64::consts::E).abs() < 1e-15 && e.b == 0.0);
        assert_eq!(
            log(&AffElement { a: 1.0, b: 7.0 }),
            AffTangent::new(0.0, 7.0)
        );
        let xi = AffTangent::new(-0.7, 2.5);
        assert!(log(&exp(&xi)).max_diff(&xi) < 1e-14);
    }

    #[test]
    fn symplectic() {
        let w = symplectic_form();
        assert_eq!(w[0][1], 1.0);
        assert_eq!(w[1][0], -1.0);
        assert_eq!(w[0][0], 0.0);
    }

    #[test]
    fn geodesic_values_and_domain() {
        let g = geodesic(&AffTangent::new(0.0, 2.0), 3.0).unwrap();
        assert_eq!(g, AffElement { a: 1.0, b: 6.0 });
        let g = geodesic(&AffTangent::new(0.5, 1.0), 1.0).unwrap();
        let ln2 = 2f64.ln();
        assert!((g.a - (1.0 + ln2)).abs() < 1e-15 && (g.b - 2.0 * ln2).abs() < 1e-15);
        assert!(geodesic(&AffTangent::new(0.5, 1.0), 2.0).is_err());
        assert!(geodesic(&AffTangent::new(1.0, 1.0), 4.0).is_err());
        assert!(geodesic(&AffTangent::new(-1.0, 1.0), 1.0).is_ok());
        assert!(geodesic(&AffTangent::new(-1.0, 1.0), -4.0).is_err());
    }

    #[test]
    fn connection_log() {
        assert_eq!(
            exp_connection(&AffTangent::new(0.0, 3.0)).unwrap(),
            AffElement { a: 1.0, b: 3.0 }
        );
        assert_eq!(
            log_connection(&AffElement { a: 1.0, b: 3.0 }).unwrap(),
            AffTangent::new(0.0, 3.0)
        );
        assert!(matches!(
            log_connection(&AffElement { a: 2.0, b: 0.0 }),
            Err(GeomError::NotInvertibleHere(..))
        ));
        assert!(exp_connection(&AffTangent::new(1.0, 0.0)).is_err());
    }
}
