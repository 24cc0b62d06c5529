//! Worked-example operators and forms on the catalog cotangent algebras, used
//! as golden data by tests and the `repro` command.
//!
//! `E(i, j)` below denotes the matrix unit sending `e_j` to `e_i` (1-based).

use crate::matrix::Matrix;
use crate::rational::{frac, int, Rational};

fn units(n: usize, entries: &[(usize, usize, Rational)]) -> Matrix {
    let e: Vec<(usize, usize, Rational)> = entries
        .iter()
        .map(|(i, j, x)| (i - 1, j - 1, x.clone()))
        .collect();
    Matrix::from_entries(n, n, &e)
}

fn units_i(n: usize, entries: &[(usize, usize, i64)]) -> Matrix {
    let e: Vec<(usize, usize, Rational)> =
        entries.iter().map(|&(i, j, x)| (i, j, int(x))).collect();
    units(n, &e)
}

/// Basis `φ1..φ5` of `der(T*aff)`.
pub fn aff_derivations() -> Vec<Matrix> {
    vec![
        units_i(4, &[(2, 1, 1), (3, 4, -1)]),
        units_i(4, &[(2, 2, 1), (4, 4, -1)]),
        units_i(4, &[(3, 1, 1)]),
        units_i(4, &[(4, 1, -1), (3, 2, 1)]),
        units_i(4, &[(3, 3, 1), (4, 4, 1)]),
    ]
}

/// Basis `φ1..φ7` of `der(T*so3)`.
pub fn so3_derivations() -> Vec<Matrix> {
    vec![
        units_i(6, &[(2, 1, -1), (1, 2, 1), (5, 4, -1), (4, 5, 1)]),
        units_i(6, &[(3, 1, -1), (1, 3, 1), (6, 4, -1), (4, 6, 1)]),
        units_i(6, &[(3, 2, -1), (2, 3, 1), (6, 5, -1), (5, 6, 1)]),
        units_i(6, &[(5, 1, -1), (4, 2, 1)]),
        units_i(6, &[(6, 1, -1), (4, 3, 1)]),
        units_i(6, &[(4, 4, 1), (5, 5, 1), (6, 6, 1)]),
        units_i(6, &[(6, 2, -1), (5, 3, 1)]),
    ]
}

/// Basis `φ1..φ7` of `der(T*sl2)`.
pub fn sl2_derivations() -> Vec<Matrix> {
    vec![
        units_i(6, &[(2, 2, -1), (3, 3, 1), (5, 5, 1), (6, 6, -1)]),
        units_i(6, &[(4, 4, 1), (5, 5, 1), (6, 6, 1)]),
        units_i(6, &[(1, 2, -1), (3, 1, 2), (4, 6, -2), (5, 4, 1)]),
        units_i(6, &[(1, 3, 1), (2, 1, -2), (4, 5, 2), (6, 4, -1)]),
        units_i(6, &[(5, 3, -1), (6, 2, 1)]),
        units_i(6, &[(4, 2, 1), (5, 1, -1)]),
        units_i(6, &[(4, 3, 1), (6, 1, -1)]),
    ]
}

/// Basis `φ1..φ13` of `Pder(T*G_λ)` for the oscillator algebra.
pub fn oscillator_prederivations(lambda: &Rational) -> Vec<Matrix> {
    let l = lambda.clone();
    let inv = frac(1, 1) / lambda;
    let one = int(1);
    vec![
        units(8, &[(2, 1, one.clone()), (5, 6, -&one)]),
        units_i(
            8,
            &[
                (2, 2, 2),
                (3, 3, 1),
                (4, 4, 1),
                (6, 6, -2),
                (7, 7, -1),
                (8, 8, -1),
            ],
        ),
        units(
            8,
            &[
                (2, 3, -&one),
                (3, 1, l.clone()),
                (5, 7, -&l),
                (7, 6, one.clone()),
            ],
        ),
        units(
            8,
            &[
                (2, 4, one.clone()),
                (4, 1, -&l),
                (5, 8, l.clone()),
                (8, 6, -&one),
            ],
        ),
        units_i(8, &[(2, 6, 1)]),
        units(
            8,
            &[
                (3, 4, -&l),
                (4, 3, l.clone()),
                (7, 8, -&l),
                (8, 7, l.clone()),
            ],
        ),
        units_i(8, &[(5, 1, 1)]),
        units(8, &[(5, 2, int(2)), (7, 3, inv.clone()), (8, 4, inv)]),
        units(8, &[(5, 3, -&l), (7, 1, l.clone())]),
        units(8, &[(5, 4, l.clone()), (8, 1, -&l)]),
        units_i(8, &[(5, 5, 1), (6, 6, 1), (7, 7, 1), (8, 8, 1)]),
        units_i(8, &[(5, 6, 1)]),
        units_i(8, &[(7, 4, -1), (8, 3, 1)]),
    ]
}

/// The two generators (`j11`, `j21`) of the commutant of `ad_x ad_y` on `G_λ`.
pub fn oscillator_jprime() -> Vec<Matrix> {
    vec![
        units_i(4, &[(1, 1, 1), (2, 2, 1), (3, 3, 1), (4, 4, 1)]),
        units_i(4, &[(2, 1, 1)]),
    ]
}

/// `μ_λ(x, y) = x⁻¹y⁰ + x⁰y⁻¹ + (x¹y¹ + ˇx¹ˇy¹)/λ` on `G_λ`.
pub fn oscillator_metric(lambda: &Rational) -> Matrix {
    let inv = frac(1, 1) / lambda;
    units(
        4,
        &[
            (1, 2, int(1)),
            (2, 1, int(1)),
            (3, 3, inv.clone()),
            (4, 4, inv),
        ],
    )
}

/// The five-parameter invariant form family on `T*G_λ`, in the order
/// `(A, B, C, D, E)`: duality, `μ_λ` on `g`, `x⁻¹g⁰ + y⁻¹f⁰`, `x⁻¹y⁻¹`, `f⁰g⁰`.
pub fn oscillator_cotangent_forms(lambda: &Rational) -> Vec<Matrix> {
    let mut b = Matrix::zeros(8, 8);
    b.set_block(0, 0, &oscillator_metric(lambda));
    vec![
        duality(4),
        b,
        units_i(8, &[(1, 6, 1), (6, 1, 1)]),
        units_i(8, &[(1, 1, 1)]),
        units_i(8, &[(6, 6, 1)]),
    ]
}

/// Duality pairing matrix on a `2n`-dimensional cotangent algebra.
pub fn duality(n: usize) -> Matrix {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = int(1);
        m[(n + i, i)] = int(1);
    }
    m
}

/// `μ_{a,b} = a⟨,⟩ + b x1y1` on `T*aff`.
pub fn aff_mu(a: &Rational, b: &Rational) -> Matrix {
    units(
        4,
        &[
            (1, 1, b.clone()),
            (1, 3, a.clone()),
            (3, 1, a.clone()),
            (2, 4, a.clone()),
            (4, 2, a.clone()),
        ],
    )
}

/// `μ_{a,b} = a⟨,⟩ + b K` on `T*sl2`, `K` the Killing form on the `g` block.
pub fn sl2_mu(a: &Rational, b: &Rational) -> Matrix {
    let mut m = duality(3).scale(a);
    let k = Matrix::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]).scale(b);
    for r in 0..3 {
        for c in 0..3 {
            m[(r, c)] += &k[(r, c)];
        }
    }
    m
}

/// Indices (0-based) of the aff derivations that are `μ_{a,b}`-skew: `φ1, φ2, φ4`.
pub const AFF_SKEW: [usize; 3] = [0, 1, 3];

/// Sample `(a, b)` parameters with `a ≠ 0`.
pub fn mu_samples() -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for a in [1, -1, 3] {
        for b in [-2, 0, 5] {
            out.push((int(a), int(b)));
        }
    }
    out
}

/// The Christoffel symbols `(i, j, k, Γ_ij^k)` of the double, 1-based.
pub const DOUBLE_SYMBOLS: [(usize, usize, usize, f64); 12] = [
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
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_symmetry() {
        assert_eq!(aff_derivations().len(), 5);
        assert_eq!(oscillator_prederivations(&int(1)).len(), 13);
        for (a, b) in mu_samples() {
            assert!(aff_mu(&a, &b).is_symmetric());
            assert!(sl2_mu(&a, &b).is_symmetric());
        }
        for f in oscillator_cotangent_forms(&frac(1, 2)) {
            assert!(f.is_symmetric());
        }
        assert_eq!(
            sl2_derivations()[1],
            units_i(6, &[(4, 4, 1), (5, 5, 1), (6, 6, 1)])
        );
    }
}
