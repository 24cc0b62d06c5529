//! The double group `R ⋉ H_3` of the affine group, with Lie algebra
//! `[e1, e2] = e2`, `[e1, e4] = -e4`, `[e2, e4] = e3`.

use serde::Serialize;

use super::ode::{rk4, Connection};
use super::{exp_neg_quad, exprel, exprel_neg};
use crate::catalog;
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoubleElement {
    pub x: [f64; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoubleTangent {
    pub xi: [f64; 4],
}

pub const IDENTITY: DoubleElement = DoubleElement { x: [0.0; 4] };

fn max_abs_diff(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

impl DoubleElement {
    pub fn new(x: [f64; 4]) -> Self {
        Self { x }
    }

    pub fn max_diff(&self, o: &DoubleElement) -> f64 {
        max_abs_diff(&self.x, &o.x)
    }
}

impl DoubleTangent {
    pub fn new(xi: [f64; 4]) -> Self {
        Self { xi }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.xi.map(|v| s * v))
    }

    pub fn max_diff(&self, o: &DoubleTangent) -> f64 {
        max_abs_diff(&self.xi, &o.xi)
    }
}

/// `(x1+y1, x2 + y2 e^{x1}, x3 + y3 + x2 y4 e^{-x1}, x4 + y4 e^{-x1})`.
pub fn mul(x: &DoubleElement, y: &DoubleElement) -> DoubleElement {
    let [x1, x2, x3, x4] = x.x;
    let [y1, y2, y3, y4] = y.x;
    let (ep, em) = (x1.exp(), (-x1).exp());
    DoubleElement::new([x1 + y1, x2 + y2 * ep, x3 + y3 + x2 * y4 * em, x4 + y4 * em])
}

/// `(-x1, -x2 e^{-x1}, -x3 + x2 x4, -x4 e^{x1})`.
pub fn inv(x: &DoubleElement) -> DoubleElement {
    let [x1, x2, x3, x4] = x.x;
    DoubleElement::new([-x1, -x2 * (-x1).exp(), -x3 + x2 * x4, -x4 * x1.exp()])
}

/// Group exponential; reduces to `(0, ξ2, ξ3 + ξ2ξ4/2, ξ4)` at `ξ1 = 0`.
pub fn exp(xi: &DoubleTangent) -> DoubleElement {
    let [a, b, c, d] = xi.xi;
    DoubleElement::new([
        a,
        b * exprel(a),
        c + b * d * exp_neg_quad(a),
        d * exprel_neg(a),
    ])
}

/// Inverse of [`exp`]; reduces to `(0, y, z - yt/2, t)` at `x = 0`.
pub fn log(p: &DoubleElement) -> DoubleTangent {
    let [x, y, z, t] = p.x;
    let xi2 = y / exprel(x);
    let xi4 = t / exprel_neg(x);
    DoubleTangent::new([x, xi2, z - xi2 * xi4 * exp_neg_quad(x), xi4])
}

/// Heisenberg exponential `(ξ2, ξ3 + ξ2ξ4/2, ξ4)`.
pub fn heis_exp(xi: [f64; 3]) -> [f64; 3] {
    [xi[0], xi[1] + 0.5 * xi[0] * xi[2], xi[2]]
}

/// Heisenberg logarithm `(y2, y3 - y2y4/2, y4)`.
pub fn heis_log(y: [f64; 3]) -> [f64; 3] {
    [y[0], y[1] - 0.5 * y[0] * y[2], y[2]]
}

/// The twelve nonzero Christoffel symbols of the double.
pub fn connection() -> Connection {
    Connection::from_entries(
        4,
        &[
            (1, 1, 1, -1.0),
            (1, 3, 2, 1.0),
            (1, 4, 1, -1.0),
            (1, 4, 4, -1.0),
            (2, 1, 2, -1.0),
            (2, 4, 3, 1.0),
            (3, 1, 2, 1.0),
            (3, 4, 3, -1.0),
            (4, 1, 1, -1.0),
            (4, 1, 4, -1.0),
            (4, 2, 3, 1.0),
            (4, 4, 4, -1.0),
        ],
    )
}

pub const DEFAULT_STEPS: usize = 1000;

/// RK4 trajectory `(t, γ(t))` of the geodesic from the identity with velocity `ξ`.
pub fn geodesic_integrate(xi: &DoubleTangent, t_end: f64, steps: usize) -> Vec<(f64, [f64; 4])> {
    let c = connection();
    let mut y0 = vec![0.0; 4];
    y0.extend_from_slice(&xi.xi);
    rk4(|s| c.geodesic_field(s), &y0, 0.0, t_end, steps)
        .into_iter()
        .map(|(t, s)| (t, [s[0], s[1], s[2], s[3]]))
        .collect()
}

/// Left-invariant complex structure at the identity:
/// `e1 -> e4`, `e2 -> -e3`, `e3 -> e2`, `e4 -> -e1`.
pub fn complex_structure() -> Matrix {
    Matrix::from_i64(4, 4, &[0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexStructureChecks {
    pub squares_to_minus_identity: bool,
    pub j_e1_is_e4: bool,
    /// `j[e1, e2]`.
    pub j_of_bracket: Vec<String>,
    /// `[e1, j e2]`.
    pub bracket_with_j: Vec<String>,
    pub bi_invariant_on_e1_e2: bool,
}

pub fn complex_structure_checks() -> ComplexStructureChecks {
    let j = complex_structure();
    let d = catalog::aff_r().cotangent();
    let e = |i| crate::lie::unit(4, i);
    let lhs = j.mul_vec(&d.bracket(&e(0), &e(1)).expect("dimension 4"));
    let rhs = d.bracket(&e(0), &j.mul_vec(&e(1))).expect("dimension 4");
    let fmt = |v: &[Rational]| v.iter().map(crate::rational::format_rational).collect();
    ComplexStructureChecks {
        squares_to_minus_identity: j.mul(&j) == Matrix::identity(4).neg(),
        j_e1_is_e4: j.mul_vec(&e(0)) == e(3),
        j_of_bracket: fmt(&lhs),
        bracket_with_j: fmt(&rhs),
        bi_invariant_on_e1_e2: lhs == rhs,
    }
}
