//! Lie algebras given by structure constants over the rationals.
//!
//! A vector of an algebra is a coordinate slice `&[Rational]` of length `dim`
//! against the algebra's basis. Dual vectors use the same representation against
//! the dual basis.

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{inertia, nullspace, Subspace};
use crate::matrix::Matrix;
use crate::rational::{format_rational, Rational};

/// Sparse coefficients `(k, c)` of a bracket `Σ c e_k`.
pub type Terms = Vec<(usize, Rational)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("vector has {found} coordinates, algebra has dimension {expected}")]
    AlgebraMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [e{i}, e{j}] specified more than once")]
    DuplicateBracket { i: usize, j: usize },
    #[error("bracket [e{i}, e{i}] must be zero")]
    SelfBracket { i: usize },
    #[error("expected {expected} basis labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("Jacobi identity fails on basis triple ({a}, {b}, {c})")]
    Jacobi { a: String, b: String, c: String },
    #[error("unknown catalog algebra {0:?}")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

/// Finite-dimensional Lie algebra with rational structure constants `c_{ij}^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    dim: usize,
    // c[(i*n + j)*n + k] = coefficient of e_k in [e_i, e_j]; antisymmetric in (i, j)
    c: Vec<Rational>,
}

/// Collects brackets `[e_i, e_j]` (0-based) before validation.
#[derive(Debug, Clone)]
pub struct LieAlgebraBuilder {
    name: String,
    dim: usize,
    labels: Option<Vec<String>>,
    entries: Vec<(usize, usize, Terms)>,
}

impl LieAlgebraBuilder {
    pub fn labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        self
    }

    /// Sets `[e_i, e_j] = sum coeff * e_k`. Either index order is accepted.
    pub fn bracket(mut self, i: usize, j: usize, coeffs: Vec<(usize, Rational)>) -> Self {
        self.entries.push((i, j, coeffs));
        self
    }

    pub fn build(self) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        let labels = match self.labels {
            Some(l) if l.len() != n => {
                return Err(LieError::LabelCount {
                    expected: n,
                    found: l.len(),
                })
            }
            Some(l) => l,
            None => (1..=n).map(|i| format!("e{i}")).collect(),
        };
        let mut c = vec![Rational::zero(); n * n * n];
        let mut seen = vec![false; n * n];
        for (i, j, coeffs) in self.entries {
            for idx in [i, j] {
                if idx >= n {
                    return Err(LieError::IndexOutOfRange { index: idx, dim: n });
                }
            }
            if i == j {
                if coeffs.iter().all(|(_, x)| x.is_zero()) {
                    continue;
                }
                return Err(LieError::SelfBracket { i: i + 1 });
            }
            let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
            if std::mem::replace(&mut seen[a * n + b], true) {
                return Err(LieError::DuplicateBracket { i: a + 1, j: b + 1 });
            }
            for (k, x) in coeffs {
                if k >= n {
                    return Err(LieError::IndexOutOfRange { index: k, dim: n });
                }
                let x = if s < 0 { -x } else { x };
                c[(a * n + b) * n + k] += &x;
                c[(b * n + a) * n + k] -= &x;
            }
        }
        let g = LieAlgebra {
            name: self.name,
            labels,
            dim: n,
            c,
        };
        g.check_jacobi()?;
        Ok(g)
    }
}

impl LieAlgebra {
    pub fn builder(name: impl Into<String>, dim: usize) -> LieAlgebraBuilder {
        LieAlgebraBuilder {
            name: name.into(),
            dim,
            labels: None,
            entries: Vec::new(),
        }
    }

    pub fn abelian(n: usize) -> LieAlgebra {
        // no brackets: Jacobi is vacuous
        Self::builder(format!("abelian({n})"), n)
            .build()
            .expect("abelian algebra is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim;
        &self.c[(i * n + j) * n + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Terms)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(usize, Rational)> = self
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k, x.clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push((i, j, terms));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(LieError::AlgebraMismatch {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let s = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x`: column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Matrix, LieError> {
        self.check_len(x)?;
        let n = self.dim;
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| self.bracket_unchecked(x, &unit(n, j)))
            .collect();
        Ok(Matrix::from_columns(n, &cols))
    }

    /// `ad_{e_i}`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, x) in self.basis_bracket(i, j).iter().enumerate() {
                m[(k, j)] = x.clone();
            }
        }
        m
    }

    /// Matrix of the coadjoint action on the dual basis: `ad*_x = -(ad_x)^T`.
    pub fn coad_matrix(&self, x: &[Rational]) -> Result<Matrix, LieError> {
        Ok(self.ad_matrix(x)?.transpose().neg())
    }

    pub fn coad_basis(&self, i: usize) -> Matrix {
        self.ad_basis(i).transpose().neg()
    }

    /// `K_ij = trace(ad e_i . ad e_j)`.
    pub fn killing_matrix(&self) -> Matrix {
        let n = self.dim;
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// `Z(g) = ∩_i ker ad(e_i)`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut stacked = Matrix::zeros(0, n);
        for i in 0..n {
            stacked = stacked.vstack(&self.ad_basis(i));
        }
        nullspace(&stacked)
    }

    /// `[g, g]`, spanned by all basis brackets.
    pub fn derived_ideal(&self) -> Subspace {
        let n = self.dim;
        let rows: Vec<Vec<Rational>> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_bracket(i, j).to_vec())
            .collect();
        Subspace::row_space(&Matrix::from_rows(n, rows))
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_ideal().dim() == self.dim
    }

    /// Cartan criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.dim > 0
            && inertia(&self.killing_matrix())
                .map(|i| i.is_nondegenerate())
                .unwrap_or(false)
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
                    let a = self.bracket_unchecked(&ei, self.basis_bracket(j, k));
                    let b = self.bracket_unchecked(&ej, self.basis_bracket(k, i));
                    let c = self.bracket_unchecked(&ek, self.basis_bracket(i, j));
                    if a.iter()
                        .zip(&b)
                        .zip(&c)
                        .any(|((a, b), c)| !(a + b + c).is_zero())
                    {
                        return Err(LieError::Jacobi {
                            a: self.labels[i].clone(),
                            b: self.labels[j].clone(),
                            c: self.labels[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `T*g = g ⋉ g*` on the basis `(e_1..e_n, e_1*..e_n*)` with
    /// `[(x,f),(y,g)] = ([x,y], ad*_x g - ad*_y f)`.
    pub fn cotangent(&self) -> LieAlgebra {
        let n = self.dim;
        let mut b = Self::builder(format!("T*{}", self.name), 2 * n).labels(
            self.labels
                .iter()
                .cloned()
                .chain(self.labels.iter().map(|l| format!("{l}*"))),
        );
        for (i, j, terms) in self.nonzero_brackets() {
            b = b.bracket(i, j, terms);
        }
        // [e_i, e_j*] = ad*_{e_i} e_j* = -sum_m c_{im}^j e_m*
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(usize, Rational)> = (0..n)
                    .filter(|&m| !self.structure_constant(i, m, j).is_zero())
                    .map(|m| (n + m, -self.structure_constant(i, m, j).clone()))
                    .collect();
                if !terms.is_empty() {
                    b = b.bracket(i, n + j, terms);
                }
            }
        }
        b.build()
            .expect("cotangent of a Lie algebra satisfies Jacobi")
    }

    /// If this algebra is `T*h` for `h` spanned by its first half of the basis,
    /// returns `h`.
    pub fn cotangent_base(&self) -> Option<LieAlgebra> {
        if self.dim == 0 || !self.dim.is_multiple_of(2) {
            return None;
        }
        let n = self.dim / 2;
        let mut b = Self::builder(
            self.name.strip_prefix("T*").unwrap_or("base").to_string(),
            n,
        )
        .labels(self.labels[..n].iter().cloned());
        for i in 0..n {
            for j in i + 1..n {
                let br = self.basis_bracket(i, j);
                if br[n..].iter().any(|x| !x.is_zero()) {
                    return None;
                }
                let terms: Vec<(usize, Rational)> = br[..n]
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k, x.clone()))
                    .collect();
                if !terms.is_empty() {
                    b = b.bracket(i, j, terms);
                }
            }
        }
        let base = b.build().ok()?;
        let cot = base.cotangent();
        (cot.c == self.c).then_some(base)
    }

    pub fn is_cotangent(&self) -> bool {
        self.cotangent_base().is_some()
    }

    /// `a ⊕ b` with block-diagonal structure constants.
    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (a.dim, b.dim);
        let mut labels: Vec<String> = a.labels.clone();
        for l in &b.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let mut builder = Self::builder(format!("{}+{}", a.name, b.name), n + m).labels(labels);
        for (i, j, t) in a.nonzero_brackets() {
            builder = builder.bracket(i, j, t);
        }
        for (i, j, t) in b.nonzero_brackets() {
            builder = builder.bracket(
                n + i,
                n + j,
                t.into_iter().map(|(k, x)| (n + k, x)).collect(),
            );
        }
        builder
            .build()
            .expect("direct sum of Lie algebras satisfies Jacobi")
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra {:?} (dim {})", self.name, self.dim)?;
        for (i, j, t) in self.nonzero_brackets() {
            let rhs: Vec<String> = t
                .iter()
                .map(|(k, x)| format!("{} {}", format_rational(x), self.labels[*k]))
                .collect();
            write!(
                f,
                "\n  [{}, {}] = {}",
                self.labels[i],
                self.labels[j],
                rhs.join(" + ")
            )?;
        }
        Ok(())
    }
}

/// Standard basis vector `e_i` of `Q^n`.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::int;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit(n, i)
    }

    fn neg(v: Vec<Rational>) -> Vec<Rational> {
        v.into_iter().map(|x| -x).collect()
    }

    #[test]
    fn aff_and_so3_brackets() {
        let aff = catalog::aff_r();
        assert_eq!(aff.bracket(&e(2, 0), &e(2, 1)).unwrap(), e(2, 1));
        let so3 = catalog::so3();
        assert_eq!(so3.bracket(&e(3, 0), &e(3, 1)).unwrap(), neg(e(3, 2)));
        let x = vec![int(3), int(-1), int(2)];
        assert!(so3.bracket(&x, &x).unwrap().iter().all(Zero::is_zero));
        assert!(matches!(
            so3.bracket(&e(2, 0), &x),
            Err(LieError::AlgebraMismatch { .. })
        ));
    }

    #[test]
    fn ad_and_coad() {
        let aff = catalog::aff_r();
        assert_eq!(aff.ad_basis(0), Matrix::from_i64(2, 2, &[0, 0, 0, 1]));
        for i in 0..2 {
            assert_eq!(aff.coad_basis(i), aff.ad_basis(i).transpose().neg());
            assert_eq!(aff.ad_matrix(&e(2, i)).unwrap(), aff.ad_basis(i));
        }
        let ab = LieAlgebra::abelian(3);
        assert!(ab.ad_basis(1).is_zero());
    }

    #[test]
    fn killing_forms() {
        assert_eq!(
            catalog::sl2().killing_matrix(),
            Matrix::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0])
        );
        assert!(LieAlgebra::abelian(3).killing_matrix().is_zero());
    }

    #[test]
    fn predicates() {
        let h3 = catalog::h3();
        let z = h3.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&e(3, 2)).unwrap());
        let sl2 = catalog::sl2();
        assert!(sl2.is_semisimple() && sl2.is_perfect());
        assert_eq!(sl2.center().dim(), 0);
        let ab = LieAlgebra::abelian(4);
        assert_eq!(ab.center().dim(), 4);
        assert_eq!(ab.derived_ideal().dim(), 0);
        assert!(!ab.is_semisimple());
        assert!(!catalog::aff_r().is_semisimple());
    }

    #[test]
    fn jacobi_failure_names_triple() {
        let err = LieAlgebra::builder("bad", 3)
            .bracket(0, 1, vec![(2, int(1))])
            .bracket(0, 2, vec![(0, int(1))])
            .build()
            .unwrap_err();
        assert!(matches!(err, LieError::Jacobi { .. }));
        assert!(err.to_string().contains("(e1, e2, e3)"));
    }

    #[test]
    fn builder_rejects_bad_input() {
        assert!(matches!(
            LieAlgebra::builder("x", 2).bracket(0, 2, vec![]).build(),
            Err(LieError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            LieAlgebra::builder("x", 2)
                .bracket(0, 1, vec![(1, int(1))])
                .bracket(1, 0, vec![(1, int(-1))])
                .build(),
            Err(LieError::DuplicateBracket { .. })
        ));
        assert!(matches!(
            LieAlgebra::builder("x", 2).labels(["a"]).build(),
            Err(LieError::LabelCount { .. })
        ));
        // reversed order stores the negated bracket
        let g = LieAlgebra::builder("x", 2)
            .bracket(1, 0, vec![(1, int(-1))])
            .build()
            .unwrap();
        assert_eq!(g, catalog::aff_r().with_name("x"));
    }

    #[test]
    fn cotangent_aff_table() {
        let d = catalog::aff_r().cotangent();
        let got: Vec<(usize, usize, Terms)> = d.nonzero_brackets();
        assert_eq!(
            got,
            vec![
                (0, 1, vec![(1, int(1))]),
                (0, 3, vec![(3, int(-1))]),
                (1, 3, vec![(2, int(1))]),
            ]
        );
        assert!(d.is_cotangent());
        assert_eq!(
            d.cotangent_base().unwrap().nonzero_brackets(),
            catalog::aff_r().nonzero_brackets()
        );
        assert!(!catalog::sl2().is_cotangent());
        assert!(LieAlgebra::abelian(2).cotangent().is_abelian());
    }

    #[test]
    fn cotangent_so3_table() {
        let d = catalog::so3().cotangent();
        let expect = [
            (0, 4, 5, -1),
            (0, 5, 4, 1),
            (1, 3, 5, 1),
            (1, 5, 3, -1),
            (2, 3, 4, -1),
            (2, 4, 3, 1),
        ];
        for (i, j, k, s) in expect {
            let mut v = vec![int(0); 6];
            v[k] = int(s);
            assert_eq!(d.basis_bracket(i, j), &v[..], "[e{}, e{}]", i + 1, j + 1);
        }
        // 𝔤* is an abelian ideal
        for i in 3..6 {
            for j in 3..6 {
                assert!(d.basis_bracket(i, j).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn direct_sums() {
        let s = LieAlgebra::direct_sum(&catalog::sl2(), &catalog::so3());
        assert_eq!(s.dim(), 6);
        assert!(s.is_semisimple());
        let t = LieAlgebra::direct_sum(&catalog::so3(), &LieAlgebra::abelian(1));
        assert_eq!(t.center().dim(), 1);
        assert_eq!(
            s.killing_matrix(),
            Matrix::block_diag(
                &catalog::sl2().killing_matrix(),
                &catalog::so3().killing_matrix()
            )
        );
    }
}
