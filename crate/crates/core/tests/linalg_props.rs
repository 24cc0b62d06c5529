use liecot_core::linalg::{inertia, nullspace, rank, rref, Subspace};
use liecot_core::rational::int;
use liecot_core::{Execution, Matrix, Rational};
use num_traits::Zero;
use proptest::prelude::*;

/// Fraction-free (Bareiss) rank over i128.
fn bareiss_rank(rows: usize, cols: usize, data: &[i64]) -> usize {
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|r| {
            data[r * cols..(r + 1) * cols]
                .iter()
                .map(|&x| x as i128)
                .collect()
        })
        .collect();
    let mut prev = 1i128;
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn int_matrix(max_dim: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-4i64..=4, r * c)))
}

/// Low-rank integer matrices: a product of random `r x k` and `k x c` factors.
fn low_rank(max_dim: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max_dim, 1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c, k)| {
        (
            prop::collection::vec(-3i64..=3, r * k),
            prop::collection::vec(-3i64..=3, k * c),
        )
            .prop_map(move |(a, b)| {
                let mut m = vec![0i64; r * c];
                for i in 0..r {
                    for j in 0..c {
                        m[i * c + j] = (0..k).map(|t| a[i * k + t] * b[t * c + j]).sum();
                    }
                }
                (r, c, m)
            })
    })
}

fn symmetric(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            let m = Matrix::from_i64(n, n, &v);
            m.add(&m.transpose())
        })
    })
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::from_i64(n, n, &v))
        .prop_filter("invertible", move |m| rank(m) == n)
}

fn vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(int), n), 0..=k)
}

proptest! {
    #[test]
    fn rank_matches_bareiss((r, c, v) in int_matrix(6)) {
        prop_assert_eq!(rank(&Matrix::from_i64(r, c, &v)), bareiss_rank(r, c, &v));
    }

    #[test]
    fn low_rank_matches_bareiss((r, c, v) in low_rank(6)) {
        prop_assert_eq!(rank(&Matrix::from_i64(r, c, &v)), bareiss_rank(r, c, &v));
    }

    #[test]
    fn rref_idempotent((r, c, v) in int_matrix(6)) {
        let (once, p1) = rref(&Matrix::from_i64(r, c, &v));
        let (twice, p2) = rref(&once);
        prop_assert_eq!(once, twice);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rref_policies_agree((r, c, v) in int_matrix(6)) {
        let m = Matrix::from_i64(r, c, &v);
        prop_assert_eq!(
            liecot_core::linalg::rref_with(&m, Execution::Parallel),
            liecot_core::linalg::rref_with(&m, Execution::Sequential)
        );
    }

    #[test]
    fn nullspace_is_kernel((r, c, v) in low_rank(6)) {
        let m = Matrix::from_i64(r, c, &v);
        let k = nullspace(&m);
        prop_assert_eq!(k.dim() + rank(&m), c);
        for x in k.basis_vectors() {
            prop_assert!(m.mul_vec(&x).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inertia_counts_add_up(b in symmetric(6)) {
        let i = inertia(&b).unwrap();
        prop_assert_eq!(i.n_plus + i.n_minus + i.n_zero, b.rows());
        prop_assert_eq!(i.n_zero, b.rows() - rank(&b));
    }

    #[test]
    fn inertia_of_negation_swaps(b in symmetric(6)) {
        let i = inertia(&b).unwrap();
        let j = inertia(&b.neg()).unwrap();
        prop_assert_eq!((i.n_plus, i.n_minus, i.n_zero), (j.n_minus, j.n_plus, j.n_zero));
    }

    #[test]
    fn inertia_congruence_invariant((b, p) in (1usize..=5).prop_flat_map(|n| {
        (prop::collection::vec(-3i64..=3, n * n), invertible(n)).prop_map(move |(v, p)| {
            let m = Matrix::from_i64(n, n, &v);
            (m.add(&m.transpose()), p)
        })
    })) {
        let c = p.transpose().mul(&b).mul(&p);
        prop_assert_eq!(inertia(&b).unwrap(), inertia(&c).unwrap());
    }

    #[test]
    fn grassmann_identity(u in vectors(5, 4), w in vectors(5, 4)) {
        let u = Subspace::span(5, &u).unwrap();
        let w = Subspace::span(5, &w).unwrap();
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_subspace(&u).unwrap() && s.contains_subspace(&w).unwrap());
        prop_assert!(u.contains_subspace(&i).unwrap() && w.contains_subspace(&i).unwrap());
    }

    #[test]
    fn subspace_equality_is_basis_independent(u in vectors(4, 4), seed in prop::collection::vec(-2i64..=2, 16)) {
        let a = Subspace::span(4, &u).unwrap();
        let mixed: Vec<Vec<Rational>> = (0..4)
            .map(|r| {
                let mut v = vec![int(0); 4];
                for (k, b) in a.basis_vectors().iter().enumerate() {
                    for c in 0..4 {
                        v[c] += int(seed[r * 4 + k]) * &b[c];
                    }
                }
                v
            })
            .chain(a.basis_vectors())
            .collect();
        prop_assert_eq!(Subspace::span(4, &mixed).unwrap(), a);
    }
}

#[test]
fn diagonal_inertia() {
    let d = Matrix::from_i64(4, 4, &[2, 0, 0, 0, 0, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5]);
    let i = inertia(&d).unwrap();
    assert_eq!((i.n_plus, i.n_minus, i.n_zero), (2, 1, 1));
}

#[test]
fn hyperbolic_plane_inertia() {
    let h = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
    let i = inertia(&h).unwrap();
    assert_eq!((i.n_plus, i.n_minus, i.n_zero), (1, 1, 0));
}

#[test]
fn inertia_rejects_asymmetric() {
    assert!(inertia(&Matrix::from_i64(2, 2, &[0, 1, 0, 0])).is_err());
}
