//! Exact linear algebra over the rationals: reduced row-echelon form, kernels,
//! the subspace lattice, and Sylvester inertia by congruence.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::matrix::Matrix;
use crate::rational::{sign, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Reduced row-echelon form and the pivot column of each nonzero row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    rref_with(m, Execution::default())
}

/// [`rref`] with an explicit execution policy. Output is identical for every policy.
///
/// Pivot choice is the first nonzero entry of the current column at or below the
/// current row; columns are scanned left to right.
pub fn rref_with(m: &Matrix, exec: Execution) -> (Matrix, Vec<usize>) {
    let rows = m.rows();
    let cols = m.cols();
    // zero rows never carry a pivot; drop them up front and pad back at the end
    let mut live: Vec<Rational> = Vec::with_capacity(m.as_slice().len());
    let mut n_live = 0;
    for r in 0..rows {
        let row = m.row(r);
        if row.iter().any(|x| !x.is_zero()) {
            live.extend_from_slice(row);
            n_live += 1;
        }
    }

    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == n_live {
            break;
        }
        let Some(found) = (pr..n_live).find(|&r| !live[r * cols + c].is_zero()) else {
            continue;
        };
        if found != pr {
            for k in 0..cols {
                live.swap(found * cols + k, pr * cols + k);
            }
        }
        let inv = live[pr * cols + c].recip();
        for k in c..cols {
            let x = &mut live[pr * cols + k];
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row: Vec<Rational> = live[pr * cols..(pr + 1) * cols].to_vec();
        let support: Vec<usize> = (c..cols).filter(|&k| !pivot_row[k].is_zero()).collect();
        exec.for_each_chunk_mut(&mut live[..n_live * cols], cols, |r, row| {
            if r == pr || row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for &k in &support {
                row[k] -= &f * &pivot_row[k];
            }
        });
        pivots.push(c);
        pr += 1;
    }

    let mut data = live;
    data.truncate(pr * cols);
    data.resize(rows * cols, Rational::zero());
    (Matrix::from_vec(rows, cols, data), pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Kernel `{v : m v = 0}` as a canonical subspace of dimension `cols - rank`.
pub fn nullspace(m: &Matrix) -> Subspace {
    nullspace_with(m, Execution::default())
}

pub fn nullspace_with(m: &Matrix, exec: Execution) -> Subspace {
    let cols = m.cols();
    let (r, pivots) = rref_with(m, exec);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect();
    Subspace::from_rows(cols, vectors)
}

/// A linear subspace of `Q^ambient`, stored as the RREF of a spanning set.
///
/// Two subspaces are equal iff their stored bases are entry-wise equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of `vectors`; every vector must have length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        Ok(Self::from_rows(ambient, vectors.to_vec()))
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = rref(m);
        let k = pivots.len();
        Self {
            ambient: m.cols(),
            basis: r.block(0, 0, k, m.cols()),
            pivots,
        }
    }

    fn from_rows(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        Self::row_space(&Matrix::from_rows(ambient, vectors))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, n: usize) -> Result<(), LinalgError> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }

    /// Residual of `v` after subtracting its projection along the RREF basis.
    fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let coeff = v[p].clone();
            if coeff.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *o -= &coeff * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        self.check(v.len())?;
        Ok(self.residual(v).iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the stored basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other.ambient)?;
        for r in 0..other.dim() {
            if !self.contains(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other.ambient)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other.ambient)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)))
    }

    /// `{w : w . v = 0 for all v in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        nullspace(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other.ambient)?;
        // (A^0 + B^0)^0 = A ∩ B
        let both = self.annihilator().basis.vstack(&other.annihilator().basis);
        Ok(nullspace(&both))
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Sylvester inertia `(n_plus, n_minus, n_zero)` of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Inertia by symmetric Gaussian congruence over the rationals.
///
/// When every remaining diagonal entry is zero but some off-diagonal `b_ij` is not,
/// row/column `j` is added to row/column `i`, which makes the new diagonal entry
/// `2 b_ij` nonzero; the hyperbolic pair then contributes one positive and one
/// negative square.
pub fn inertia(b: &Matrix) -> Result<Inertia, LinalgError> {
    if !b.is_square() {
        return Err(LinalgError::DimensionMismatch {
            expected: b.rows(),
            found: b.cols(),
        });
    }
    if !b.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = b.rows();
    let mut a = b.clone();
    let (mut plus, mut minus) = (0, 0);
    let mut k = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| !a[(i, i)].is_zero()) {
            swap_sym(&mut a, i, k);
        } else if let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[(i, j)].is_zero())
        {
            add_sym(&mut a, i, j);
            swap_sym(&mut a, i, k);
        } else {
            break;
        }
        let p = a[(k, k)].clone();
        match sign(&p) {
            1 => plus += 1,
            _ => minus += 1,
        }
        for j in k + 1..n {
            if a[(j, k)].is_zero() {
                continue;
            }
            let f = &a[(j, k)] / &p;
            // row_j -= f row_k, then col_j -= f col_k
            for c in k..n {
                let t = &f * &a[(k, c)];
                a[(j, c)] -= t;
            }
            for r in k..n {
                let t = &f * &a[(r, k)];
                a[(r, j)] -= t;
            }
        }
        k += 1;
    }
    Ok(Inertia {
        n_plus: plus,
        n_minus: minus,
        n_zero: n - plus - minus,
    })
}

fn swap_sym(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

/// row_i += row_j, col_i += col_j.
fn add_sym(a: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let t = a[(j, c)].clone();
        a[(i, c)] += t;
    }
    for r in 0..n {
        let t = a[(r, j)].clone();
        a[(r, i)] += t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn rref_identity_and_rank_one() {
        let i2 = Matrix::identity(2);
        assert_eq!(rref(&i2), (i2.clone(), vec![0, 1]));
        let m = Matrix::from_i64(2, 2, &[2, 4, 1, 2]);
        assert_eq!(rref(&m), (Matrix::from_i64(2, 2, &[1, 2, 0, 0]), vec![0]));
    }

    #[test]
    fn rref_moves_zero_rows_down() {
        let m = Matrix::from_i64(3, 3, &[0, 0, 0, 0, 2, 2, 1, 0, 1]);
        let (r, p) = rref(&m);
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, Matrix::from_i64(3, 3, &[1, 0, 1, 0, 1, 1, 0, 0, 0]));
    }

    #[test]
    fn nullspace_edge_cases() {
        assert_eq!(nullspace(&Matrix::identity(3)).dim(), 0);
        let z = nullspace(&Matrix::zeros(2, 5));
        assert_eq!(z, Subspace::full(5));
        let k = nullspace(&Matrix::from_i64(1, 3, &[1, 1, 1]));
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert_eq!(v.iter().fold(int(0), |a, x| a + x), int(0));
        }
    }

    #[test]
    fn lattice_basics() {
        let e = |i: usize| {
            let mut v = vec![int(0); 3];
            v[i] = int(1);
            v
        };
        let a = Subspace::span(3, &[e(0)]).unwrap();
        let b = Subspace::span(3, &[e(1)]).unwrap();
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        assert!(!a.contains(&e(1)).unwrap());
        assert!(matches!(
            a.sum(&Subspace::zero(4)),
            Err(LinalgError::DimensionMismatch { .. })
        ));
        assert!(a.contains(&[int(1)]).is_err());
    }

    #[test]
    fn inertia_examples() {
        let id = Matrix::identity(4);
        assert_eq!(
            inertia(&id).unwrap(),
            Inertia {
                n_plus: 4,
                n_minus: 0,
                n_zero: 0
            }
        );
        let h = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(
            inertia(&h).unwrap(),
            Inertia {
                n_plus: 1,
                n_minus: 1,
                n_zero: 0
            }
        );
        let k = Matrix::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]);
        assert_eq!(
            inertia(&k).unwrap(),
            Inertia {
                n_plus: 2,
                n_minus: 1,
                n_zero: 0
            }
        );
        let z = Matrix::zeros(3, 3);
        assert_eq!(
            inertia(&z).unwrap(),
            Inertia {
                n_plus: 0,
                n_minus: 0,
                n_zero: 3
            }
        );
        let deg = Matrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(
            inertia(&deg).unwrap(),
            Inertia {
                n_plus: 1,
                n_minus: 1,
                n_zero: 1
            }
        );
        assert_eq!(
            inertia(&Matrix::from_i64(2, 2, &[0, 1, 0, 0])),
            Err(LinalgError::NotSymmetric)
        );
    }
}
