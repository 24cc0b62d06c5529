//! Ad-invariant symmetric bilinear forms and their signatures.

use thiserror::Error;

use crate::exec::Execution;
use crate::lie::LieAlgebra;
use crate::linalg::{inertia, nullspace, Inertia};
use crate::matrix::Matrix;
use crate::operators::{adjoint_invariant_j, prederivations_with, solve_linear, OperatorSpace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("form matrix is not symmetric")]
    NotSymmetric,
    #[error("form has size {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("algebra {0:?} is not a cotangent algebra T*g")]
    NotCotangent(String),
    #[error("form is degenerate (inertia {0})")]
    Degenerate(Inertia),
    #[error("form is not an orthogonal structure on {0:?}")]
    NotOrthogonal(String),
    #[error("algebra {0:?} is not simple")]
    NotSimple(String),
}

/// Symmetric bilinear form given by its Gram matrix in the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

/// Space of flattened symmetric Gram matrices.
pub type FormSpace = OperatorSpace;

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self, MetricError> {
        if matrix.is_symmetric() {
            Ok(Self { matrix })
        } else {
            Err(MetricError::NotSymmetric)
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    fn check_dim(&self, g: &LieAlgebra) -> Result<(), MetricError> {
        if self.dim() == g.dim() {
            Ok(())
        } else {
            Err(MetricError::DimensionMismatch {
                expected: g.dim(),
                found: self.dim(),
            })
        }
    }
}

fn invariance_residual(b: &Matrix, ads: &[Matrix]) -> Vec<crate::Rational> {
    // B(ad_x y, z) + B(y, ad_x z) = 0  <=>  ad_x^T B + B ad_x = 0
    let mut out = b.sub(&b.transpose()).into_vec();
    for a in ads {
        out.extend(a.transpose().mul(b).add(&b.mul(a)).into_vec());
    }
    out
}

fn ads(g: &LieAlgebra) -> Vec<Matrix> {
    (0..g.dim()).map(|i| g.ad_basis(i)).collect()
}

pub fn invariant_forms(g: &LieAlgebra) -> FormSpace {
    invariant_forms_with(g, Execution::default())
}

pub fn invariant_forms_with(g: &LieAlgebra, exec: Execution) -> FormSpace {
    let a = ads(g);
    let n = g.dim();
    solve_linear(n, n, exec, |b| invariance_residual(b, &a))
}

pub fn is_invariant(g: &LieAlgebra, b: &Matrix) -> bool {
    invariance_residual(b, &ads(g))
        .iter()
        .all(num_traits::Zero::is_zero)
}

pub fn killing_form(g: &LieAlgebra) -> BilinearForm {
    BilinearForm {
        matrix: g.killing_matrix(),
    }
}

/// `⟨(x,f),(y,g)⟩ = f(y) + g(x)` on `T*g`.
pub fn duality_pairing(d: &LieAlgebra) -> Result<BilinearForm, MetricError> {
    if !d.is_cotangent() {
        return Err(MetricError::NotCotangent(d.name().to_string()));
    }
    Ok(BilinearForm {
        matrix: crate::reference::duality(d.dim() / 2),
    })
}

/// Places a form on `g` in the `g x g` block of `T*g`, zero elsewhere.
pub fn extend_by_zero(b: &BilinearForm) -> BilinearForm {
    let n = b.dim();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    m.set_block(0, 0, &b.matrix);
    BilinearForm { matrix: m }
}

pub fn form_inertia(b: &BilinearForm) -> Inertia {
    inertia(&b.matrix).expect("bilinear forms are symmetric")
}

/// Symmetric, ad-invariant and nondegenerate.
pub fn is_orthogonal_structure(g: &LieAlgebra, b: &BilinearForm) -> bool {
    b.dim() == g.dim() && is_invariant(g, &b.matrix) && form_inertia(b).is_nondegenerate()
}

/// `θ ∘ ad_x = ad*_x ∘ θ` for `θ = B`, i.e. `B ad(e_i) + ad(e_i)^T B = 0`.
pub fn theta_equivariance_check(g: &LieAlgebra, b: &BilinearForm) -> Result<bool, MetricError> {
    b.check_dim(g)?;
    let i = form_inertia(b);
    if !i.is_nondegenerate() {
        return Err(MetricError::Degenerate(i));
    }
    let m = &b.matrix;
    Ok(ads(g)
        .iter()
        .all(|a| m.mul(a).add(&a.transpose().mul(m)).is_zero()))
}

pub fn skew_prederivations(g: &LieAlgebra, b: &BilinearForm) -> Result<OperatorSpace, MetricError> {
    skew_prederivations_with(g, b, Execution::default())
}

/// Prederivations `p` with `B p + p^T B = 0`.
pub fn skew_prederivations_with(
    g: &LieAlgebra,
    b: &BilinearForm,
    exec: Execution,
) -> Result<OperatorSpace, MetricError> {
    b.check_dim(g)?;
    if !is_orthogonal_structure(g, b) {
        return Err(MetricError::NotOrthogonal(g.name().to_string()));
    }
    let n = g.dim();
    let m = &b.matrix;
    let skew = solve_linear(n, n, exec, |p| {
        m.mul(p).add(&p.transpose().mul(m)).into_vec()
    });
    Ok(prederivations_with(g, exec).intersect(&skew))
}

/// For simple `g`, checks that the invariant forms on `T*g` are exactly the
/// span of the duality pairing and the Killing form extended by zero.
pub fn semisimple_cotangent_form_family_check(g: &LieAlgebra) -> Result<bool, MetricError> {
    if !g.is_semisimple() || adjoint_invariant_j(g).dim() != 1 {
        return Err(MetricError::NotSimple(g.name().to_string()));
    }
    let d = g.cotangent();
    let forms = invariant_forms(&d);
    let expected = OperatorSpace::span(
        d.dim(),
        d.dim(),
        &[
            duality_pairing(&d)?.matrix,
            extend_by_zero(&killing_form(g)).matrix,
        ],
    );
    Ok(forms.dim() == 2 && forms == expected)
}

/// The radical of an invariant form is an ideal: `B ad_x v = 0` for every
/// radical vector `v` and basis `x`.
pub fn radical_is_ideal(g: &LieAlgebra, b: &BilinearForm) -> bool {
    let rad = nullspace(&b.matrix);
    let a = ads(g);
    rad.basis_vectors().iter().all(|v| {
        a.iter().all(|ad| {
            b.matrix
                .mul_vec(&ad.mul_vec(v))
                .iter()
                .all(num_traits::Zero::is_zero)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::int;

    #[test]
    fn constructors() {
        assert_eq!(
            BilinearForm::new(Matrix::from_i64(2, 2, &[0, 1, 0, 0])),
            Err(MetricError::NotSymmetric)
        );
        let k = killing_form(&catalog::sl2());
        assert_eq!(extend_by_zero(&k).matrix().block(0, 0, 3, 3), *k.matrix());
        assert!(extend_by_zero(&k).matrix().block(3, 3, 3, 3).is_zero());
    }

    #[test]
    fn duality_requires_cotangent() {
        assert!(matches!(
            duality_pairing(&catalog::sl2()),
            Err(MetricError::NotCotangent(_))
        ));
        let d = catalog::aff_r().cotangent();
        let p = duality_pairing(&d).unwrap();
        assert!(is_orthogonal_structure(&d, &p));
        assert_eq!(p.matrix()[(0, 2)], int(1));
        assert_eq!(p.matrix()[(1, 3)], int(1));
    }

    #[test]
    fn degenerate_paths() {
        let aff = catalog::aff_r();
        let zero = BilinearForm::new(Matrix::zeros(2, 2)).unwrap();
        assert!(!is_orthogonal_structure(&aff, &zero));
        assert!(matches!(
            theta_equivariance_check(&aff, &zero),
            Err(MetricError::Degenerate(_))
        ));
        assert!(matches!(
            skew_prederivations(&aff, &zero),
            Err(MetricError::NotOrthogonal(_))
        ));
        let id3 = BilinearForm::new(Matrix::identity(3)).unwrap();
        assert!(matches!(
            theta_equivariance_check(&aff, &id3),
            Err(MetricError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            semisimple_cotangent_form_family_check(&aff),
            Err(MetricError::NotSimple(_))
        ));
    }
}
