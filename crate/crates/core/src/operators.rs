//! Linear operator spaces attached to a Lie algebra: derivations,
//! prederivations, centralizers of `ad`, coadjoint cocycles, equivariant maps
//! and first cohomology.
//!
//! Every solver assembles one dense constraint matrix whose columns are the
//! residuals of the unit operators `E_ab`, then takes its nullspace. Operators
//! are flattened row-major; `M[(r, c)]` is the coefficient of `e_r` in `M e_c`.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::lie::LieAlgebra;
use crate::linalg::{nullspace_with, rank, LinalgError, Subspace};
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    #[error("algebra {0:?} is not a cotangent algebra T*g")]
    NotCotangent(String),
    #[error("cohomology decomposition mismatch: dim H1(D,D) = {h1_cotangent}, but {h1_adjoint} + {dim_j} + {h1_coadjoint} + {dim_psi} = {sum}")]
    Discrepancy {
        h1_cotangent: usize,
        h1_adjoint: usize,
        dim_j: usize,
        h1_coadjoint: usize,
        dim_psi: usize,
        sum: usize,
    },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A subspace of `rows x cols` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSpace {
    rows: usize,
    cols: usize,
    space: Subspace,
}

/// Maps `g -> g*` or `g* -> g`, stored like any other operator space.
pub type MixedMapSpace = OperatorSpace;

impl OperatorSpace {
    pub fn new(rows: usize, cols: usize, space: Subspace) -> Self {
        assert_eq!(space.ambient_dim(), rows * cols, "operator space ambient");
        Self { rows, cols, space }
    }

    pub fn span(rows: usize, cols: usize, mats: &[Matrix]) -> Self {
        let vecs: Vec<Vec<Rational>> = mats.iter().map(|m| m.as_slice().to_vec()).collect();
        let space = Subspace::span(rows * cols, &vecs).expect("matrix shapes agree");
        Self::new(rows, cols, space)
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, Subspace::full(rows * cols))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Canonical basis, unflattened.
    pub fn basis(&self) -> Vec<Matrix> {
        self.space
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_vec(self.rows, self.cols, v))
            .collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        (m.rows(), m.cols()) == (self.rows, self.cols)
            && self.space.contains(m.as_slice()).unwrap_or(false)
    }

    pub fn contains_space(&self, other: &OperatorSpace) -> bool {
        self.space.contains_subspace(&other.space).unwrap_or(false)
    }

    pub fn intersect(&self, other: &OperatorSpace) -> OperatorSpace {
        let s = self
            .space
            .intersect(&other.space)
            .expect("operator shapes agree");
        Self::new(self.rows, self.cols, s)
    }

    pub fn sum(&self, other: &OperatorSpace) -> OperatorSpace {
        let s = self.space.sum(&other.space).expect("operator shapes agree");
        Self::new(self.rows, self.cols, s)
    }
}

/// Solves `residual(X) = 0` for `X` in `rows x cols` matrices, `residual` linear.
pub fn solve_linear<F>(rows: usize, cols: usize, exec: Execution, residual: F) -> OperatorSpace
where
    F: Fn(&Matrix) -> Vec<Rational> + Sync + Send,
{
    let unknowns = rows * cols;
    let columns: Vec<Vec<Rational>> = exec.map_range(unknowns, |u| {
        let mut e = Matrix::zeros(rows, cols);
        e.as_mut_slice()[u] = Rational::one();
        residual(&e)
    });
    let height = columns.first().map_or(0, Vec::len);
    let a = Matrix::from_columns(height, &columns);
    OperatorSpace::new(rows, cols, nullspace_with(&a, exec))
}

fn push_all(out: &mut Vec<Rational>, v: Vec<Rational>) {
    out.extend(v);
}

fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `sum_i v_i M_i`.
fn combine(mats: &[Matrix], v: &[Rational], n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for (m, x) in mats.iter().zip(v) {
        if !x.is_zero() {
            out = out.add(&m.scale(x));
        }
    }
    out
}

struct Tables {
    n: usize,
    ad: Vec<Matrix>,
    coad: Vec<Matrix>,
}

impl Tables {
    fn new(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let ad: Vec<Matrix> = (0..n).map(|i| g.ad_basis(i)).collect();
        let coad = ad.iter().map(|m| m.transpose().neg()).collect();
        Tables { n, ad, coad }
    }

    fn ad_of(&self, v: &[Rational]) -> Matrix {
        combine(&self.ad, v, self.n)
    }

    fn coad_of(&self, v: &[Rational]) -> Matrix {
        combine(&self.coad, v, self.n)
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

pub fn derivations(g: &LieAlgebra) -> OperatorSpace {
    derivations_with(g, Execution::default())
}

/// `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` for `i < j`.
pub fn derivations_with(g: &LieAlgebra, exec: Execution) -> OperatorSpace {
    let t = Tables::new(g);
    let n = t.n;
    solve_linear(n, n, exec, |d| {
        let mut out = Vec::new();
        for (i, j) in pairs(n) {
            let lhs = d.mul_vec(g.basis_bracket(i, j));
            // [D e_i, e_j] = -ad_j (D e_i)
            let a = t.ad[j].mul_vec(&d.column(i));
            let b = t.ad[i].mul_vec(&d.column(j));
            push_all(&mut out, vsub(&vadd(&lhs, &a), &b));
        }
        out
    })
}

/// Span of `ad(e_i)`.
pub fn inner_derivations(g: &LieAlgebra) -> OperatorSpace {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad_basis(i)).collect();
    OperatorSpace::span(n, n, &ads)
}

pub fn prederivations(g: &LieAlgebra) -> OperatorSpace {
    prederivations_with(g, Execution::default())
}

/// `p[x,[y,z]] = [px,[y,z]] + [x,[py,z]] + [x,[y,pz]]` over all `i` and `j < k`.
pub fn prederivations_with(g: &LieAlgebra, exec: Execution) -> OperatorSpace {
    let t = Tables::new(g);
    let n = t.n;
    let inner: Vec<(usize, usize, Vec<Rational>, Matrix)> = pairs(n)
        .map(|(j, k)| {
            let w = g.basis_bracket(j, k).to_vec();
            let adw = t.ad_of(&w);
            (j, k, w, adw)
        })
        .collect();
    let adad: Vec<Vec<Matrix>> = (0..n)
        .map(|i| (0..n).map(|k| t.ad[i].mul(&t.ad[k])).collect())
        .collect();
    solve_linear(n, n, exec, |p| {
        let mut out = Vec::new();
        for (i, adad_i) in adad.iter().enumerate() {
            let pei = p.column(i);
            for (j, k, w, adw) in &inner {
                // p[e_i, w] - [p e_i, w] - [e_i, [p e_j, e_k]] - [e_i, [e_j, p e_k]]
                // with -[p e_i, w] = ad_w (p e_i) and -[e_i, [p e_j, e_k]] = ad_i ad_k (p e_j)
                let lhs = p.mul_vec(&t.ad[i].mul_vec(w));
                let a = adw.mul_vec(&pei);
                let b = adad_i[*k].mul_vec(&p.column(*j));
                let c = adad_i[*j].mul_vec(&p.column(*k));
                let r: Vec<Rational> = (0..n).map(|m| &lhs[m] + &a[m] + &b[m] - &c[m]).collect();
                out.extend(r);
            }
        }
        out
    })
}

pub fn adjoint_invariant_j(g: &LieAlgebra) -> OperatorSpace {
    adjoint_invariant_j_with(g, Execution::default())
}

/// Centralizer of `ad g`: `j ad(e_i) = ad(e_i) j`.
pub fn adjoint_invariant_j_with(g: &LieAlgebra, exec: Execution) -> OperatorSpace {
    let t = Tables::new(g);
    solve_linear(t.n, t.n, exec, |j| {
        t.ad.iter()
            .flat_map(|a| j.commutator(a).into_vec())
            .collect()
    })
}

pub fn adjoint_invariant_jprime(g: &LieAlgebra) -> OperatorSpace {
    adjoint_invariant_jprime_with(g, Execution::default())
}

/// Commutant of all `ad(e_i) ad(e_j)`.
pub fn adjoint_invariant_jprime_with(g: &LieAlgebra, exec: Execution) -> OperatorSpace {
    let t = Tables::new(g);
    let prods: Vec<Matrix> =
        t.ad.iter()
            .flat_map(|a| t.ad.iter().map(move |b| a.mul(b)))
            .filter(|m| !m.is_zero())
            .collect();
    solve_linear(t.n, t.n, exec, |j| {
        prods
            .iter()
            .flat_map(|p| j.commutator(p).into_vec())
            .collect()
    })
}

pub fn coadjoint_cocycles(g: &LieAlgebra) -> MixedMapSpace {
    coadjoint_cocycles_with(g, Execution::default())
}

/// `β: g -> g*` with `β[e_i,e_j] = ad*_{e_i} β(e_j) - ad*_{e_j} β(e_i)`.
pub fn coadjoint_cocycles_with(g: &LieAlgebra, exec: Execution) -> MixedMapSpace {
    let t = Tables::new(g);
    let n = t.n;
    solve_linear(n, n, exec, |b| {
        let mut out = Vec::new();
        for (i, j) in pairs(n) {
            let lhs = b.mul_vec(g.basis_bracket(i, j));
            let x = t.coad[i].mul_vec(&b.column(j));
            let y = t.coad[j].mul_vec(&b.column(i));
            push_all(&mut out, vadd(&vsub(&lhs, &x), &y));
        }
        out
    })
}

/// Coboundaries `x -> -ad*_x f` for `f` ranging over `g*`.
pub fn coboundaries(g: &LieAlgebra) -> MixedMapSpace {
    let t = Tables::new(g);
    let n = t.n;
    let gens: Vec<Matrix> = (0..n)
        .map(|j| {
            let cols: Vec<Vec<Rational>> = (0..n)
                .map(|i| t.coad[i].column(j).iter().map(|x| -x).collect())
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect();
    OperatorSpace::span(n, n, &gens)
}

pub fn equivariant_psi(g: &LieAlgebra) -> MixedMapSpace {
    equivariant_psi_with(g, Execution::default())
}

/// `ψ: g* -> g` with `ψ ad*(e_i) = ad(e_i) ψ` and `ad*_{ψ f} h = ad*_{ψ h} f`.
pub fn equivariant_psi_with(g: &LieAlgebra, exec: Execution) -> MixedMapSpace {
    let t = Tables::new(g);
    let n = t.n;
    solve_linear(n, n, exec, |psi| {
        let mut out = Vec::new();
        for i in 0..n {
            out.extend(psi.mul(&t.coad[i]).sub(&t.ad[i].mul(psi)).into_vec());
        }
        let images: Vec<Matrix> = (0..n).map(|j| t.coad_of(&psi.column(j))).collect();
        for (j, k) in pairs(n) {
            // ad*_{ψ e_j*} e_k* - ad*_{ψ e_k*} e_j*
            let r = vsub(&images[j].column(k), &images[k].column(j));
            out.extend(r);
        }
        out
    })
}

/// Independent Leibniz check through the bracket.
pub fn is_derivation(g: &LieAlgebra, d: &Matrix) -> bool {
    let n = g.dim();
    let e = |i| crate::lie::unit(n, i);
    pairs(n).all(|(i, j)| {
        let lhs = d.mul_vec(&g.bracket_unchecked(&e(i), &e(j)));
        let rhs = vadd(
            &g.bracket_unchecked(&d.column(i), &e(j)),
            &g.bracket_unchecked(&e(i), &d.column(j)),
        );
        lhs == rhs
    })
}

/// Independent prederivation check through the bracket.
pub fn is_prederivation(g: &LieAlgebra, p: &Matrix) -> bool {
    let n = g.dim();
    let e = |i| crate::lie::unit(n, i);
    let br = |x: &[Rational], y: &[Rational]| g.bracket_unchecked(x, y);
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let (x, y, z) = (e(i), e(j), e(k));
                let lhs = p.mul_vec(&br(&x, &br(&y, &z)));
                let a = br(&p.mul_vec(&x), &br(&y, &z));
                let b = br(&x, &br(&p.mul_vec(&y), &z));
                let c = br(&x, &br(&y, &p.mul_vec(&z)));
                lhs == vadd(&vadd(&a, &b), &c)
            })
        })
    })
}

/// Dimensions entering the first cohomology of `T*g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Report {
    pub dim_der: usize,
    pub dim_inner: usize,
    pub h1_adjoint: usize,
    pub dim_j: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub h1_coadjoint: usize,
    pub dim_psi: usize,
    pub dim_der_cotangent: usize,
    pub dim_inner_cotangent: usize,
    pub h1_cotangent: usize,
}

impl H1Report {
    /// `h1_adjoint + dim J + h1_coadjoint + dim Ψ`.
    pub fn decomposition_sum(&self) -> usize {
        self.h1_adjoint + self.dim_j + self.h1_coadjoint + self.dim_psi
    }

    pub fn decomposition_holds(&self) -> bool {
        self.decomposition_sum() == self.h1_cotangent
    }
}

pub fn h1_adjoint(g: &LieAlgebra) -> usize {
    derivations(g).dim() - inner_derivations(g).dim()
}

pub fn h1_coadjoint(g: &LieAlgebra) -> usize {
    coadjoint_cocycles(g).dim() - coboundaries(g).dim()
}

pub fn h1_cotangent(g: &LieAlgebra) -> usize {
    h1_adjoint(&g.cotangent())
}

/// Computes both sides of the decomposition without judging them.
pub fn h1_report_with(g: &LieAlgebra, exec: Execution) -> H1Report {
    let d = g.cotangent();
    let dim_der = derivations_with(g, exec).dim();
    let dim_inner = inner_derivations(g).dim();
    let dim_cocycles = coadjoint_cocycles_with(g, exec).dim();
    let dim_coboundaries = coboundaries(g).dim();
    let dim_der_cotangent = derivations_with(&d, exec).dim();
    let dim_inner_cotangent = inner_derivations(&d).dim();
    H1Report {
        dim_der,
        dim_inner,
        h1_adjoint: dim_der - dim_inner,
        dim_j: adjoint_invariant_j_with(g, exec).dim(),
        dim_cocycles,
        dim_coboundaries,
        h1_coadjoint: dim_cocycles - dim_coboundaries,
        dim_psi: equivariant_psi_with(g, exec).dim(),
        dim_der_cotangent,
        dim_inner_cotangent,
        h1_cotangent: dim_der_cotangent - dim_inner_cotangent,
    }
}

/// As [`h1_report_with`], failing with `Discrepancy` if the two sides differ.
pub fn h1(g: &LieAlgebra) -> Result<H1Report, OperatorError> {
    let r = h1_report_with(g, Execution::default());
    if r.decomposition_holds() {
        Ok(r)
    } else {
        Err(OperatorError::Discrepancy {
            h1_cotangent: r.h1_cotangent,
            h1_adjoint: r.h1_adjoint,
            dim_j: r.dim_j,
            h1_coadjoint: r.h1_coadjoint,
            dim_psi: r.dim_psi,
            sum: r.decomposition_sum(),
        })
    }
}

/// Splits a `2n x 2n` operator into `(α, ψ, β, ξ)`: `α: g->g`, `ψ: g*->g`,
/// `β: g->g*`, `ξ: g*->g*`.
pub fn blocks(m: &Matrix) -> (Matrix, Matrix, Matrix, Matrix) {
    let n = m.rows() / 2;
    (
        m.block(0, 0, n, n),
        m.block(0, n, n, n),
        m.block(n, 0, n, n),
        m.block(n, n, n, n),
    )
}

/// `[[α, ψ], [β, ξ]]`.
pub fn from_blocks(alpha: &Matrix, psi: &Matrix, beta: &Matrix, xi: &Matrix) -> Matrix {
    let n = alpha.rows();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    m.set_block(0, 0, alpha);
    m.set_block(0, n, psi);
    m.set_block(n, 0, beta);
    m.set_block(n, n, xi);
    m
}

/// Operators supported on the blocks selected by `keep(row_half, col_half)`,
/// where half `0` is `g` and `1` is `g*`.
fn block_space(n: usize, keep: impl Fn(usize, usize) -> bool) -> OperatorSpace {
    let size = 2 * n;
    let units: Vec<Vec<Rational>> = (0..size * size)
        .filter(|u| keep(usize::from(u / size >= n), usize::from(u % size >= n)))
        .map(|u| {
            let mut v = vec![Rational::zero(); size * size];
            v[u] = Rational::one();
            v
        })
        .collect();
    OperatorSpace::new(
        size,
        size,
        Subspace::span(size * size, &units).expect("unit vectors"),
    )
}

/// Graded pieces of `der(T*g)` and the bracket closure checks.
#[derive(Debug, Clone)]
pub struct GradedSplit {
    pub der: OperatorSpace,
    pub g0: OperatorSpace,
    pub g1: OperatorSpace,
    /// `der ∩ {[[0,0],[β,0]]}`.
    pub q: OperatorSpace,
    /// `der ∩ {[[0,ψ],[0,0]]}`.
    pub psi: OperatorSpace,
    pub checks: GradedChecks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedChecks {
    pub dims_add_up: bool,
    pub g1_is_q_plus_psi: bool,
    pub g0_g0_in_g0: bool,
    pub g0_g1_in_g1: bool,
    pub g1_g1_in_g0: bool,
    pub q_q_zero: bool,
    pub psi_psi_zero: bool,
}

impl GradedChecks {
    pub fn all(&self) -> bool {
        self.dims_add_up
            && self.g1_is_q_plus_psi
            && self.g0_g0_in_g0
            && self.g0_g1_in_g1
            && self.g1_g1_in_g0
            && self.q_q_zero
            && self.psi_psi_zero
    }
}

fn brackets_within(a: &OperatorSpace, b: &OperatorSpace, target: &OperatorSpace) -> bool {
    let (ab, bb) = (a.basis(), b.basis());
    ab.iter()
        .all(|x| bb.iter().all(|y| target.contains(&x.commutator(y))))
}

fn brackets_vanish(a: &OperatorSpace) -> bool {
    let ab = a.basis();
    ab.iter()
        .all(|x| ab.iter().all(|y| x.commutator(y).is_zero()))
}

pub fn graded_split(d: &LieAlgebra) -> Result<GradedSplit, OperatorError> {
    graded_split_with(d, Execution::default())
}

/// `G0 = der ∩ block-diagonal`, `G1 = der ∩ block-antidiagonal` for `d = T*g`.
pub fn graded_split_with(d: &LieAlgebra, exec: Execution) -> Result<GradedSplit, OperatorError> {
    if !d.is_cotangent() {
        return Err(OperatorError::NotCotangent(d.name().to_string()));
    }
    let n = d.dim() / 2;
    let der = derivations_with(d, exec);
    let diag = block_space(n, |r, c| r == c);
    let anti = block_space(n, |r, c| r != c);
    let lower = block_space(n, |r, c| r == 1 && c == 0);
    let upper = block_space(n, |r, c| r == 0 && c == 1);
    let g0 = der.intersect(&diag);
    let g1 = der.intersect(&anti);
    let q = der.intersect(&lower);
    let psi = der.intersect(&upper);
    let checks = GradedChecks {
        dims_add_up: g0.dim() + g1.dim() == der.dim(),
        g1_is_q_plus_psi: q.sum(&psi) == g1,
        g0_g0_in_g0: brackets_within(&g0, &g0, &g0),
        g0_g1_in_g1: brackets_within(&g0, &g1, &g1),
        g1_g1_in_g0: brackets_within(&g1, &g1, &g0),
        q_q_zero: brackets_vanish(&q),
        psi_psi_zero: brackets_vanish(&psi),
    };
    Ok(GradedSplit {
        der,
        g0,
        g1,
        q,
        psi,
        checks,
    })
}

/// For each derivation `[[α, ψ], [β, ξ]]` of `T*g`, checks
/// `[ξ, ad*(e_i)] = ad*(α e_i)` and `ξ^T + α ∈ J(g)`.
pub fn xi_decomposition_check(d: &LieAlgebra) -> Result<bool, OperatorError> {
    let base = d
        .cotangent_base()
        .ok_or_else(|| OperatorError::NotCotangent(d.name().to_string()))?;
    let t = Tables::new(&base);
    let j = adjoint_invariant_j(&base);
    let ok = derivations(d).basis().iter().all(|m| {
        let (alpha, _, _, xi) = blocks(m);
        let intertwines =
            (0..t.n).all(|i| xi.commutator(&t.coad[i]) == t.coad_of(&alpha.column(i)));
        intertwines && j.contains(&xi.transpose().add(&alpha))
    });
    Ok(ok)
}

/// Rank of a family of operators, as a sanity helper for reports.
pub fn operator_rank(mats: &[Matrix]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let cols = mats[0].as_slice().len();
    rank(&Matrix::from_rows(
        cols,
        mats.iter().map(|m| m.as_slice().to_vec()).collect(),
    ))
}
