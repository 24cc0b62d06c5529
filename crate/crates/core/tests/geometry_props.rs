use approx::assert_abs_diff_eq;
use liecot_core::catalog;
use liecot_core::geom::{aff, double, exp_neg_quad, exprel, exprel_neg, sweep};
use liecot_core::rational::to_f64;
use liecot_core::Execution;
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -2.0f64..2.0
}

fn aff_tangent() -> impl Strategy<Value = aff::AffTangent> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| aff::AffTangent::new(a, b))
}

fn aff_point() -> impl Strategy<Value = aff::AffElement> {
    (-3.0f64..3.0, -5.0f64..5.0).prop_map(|(l, b)| aff::AffElement::new(l.exp(), b).unwrap())
}

fn dbl_tangent() -> impl Strategy<Value = double::DoubleTangent> {
    [coord(), coord(), coord(), coord()].prop_map(double::DoubleTangent::new)
}

fn dbl_point() -> impl Strategy<Value = double::DoubleElement> {
    [coord(), coord(), coord(), coord()].prop_map(double::DoubleElement::new)
}

/// Dyadic values `k / 64`, on which the Heisenberg maps are exact in f64.
fn dyadic() -> impl Strategy<Value = f64> {
    (-512i32..=512).prop_map(|k| f64::from(k) / 64.0)
}

proptest! {
    #[test]
    fn aff_round_trips(xi in aff_tangent(), p in aff_point()) {
        prop_assert!(aff::log(&aff::exp(&xi)).max_diff(&xi) < 1e-10);
        prop_assert!(aff::exp(&aff::log(&p)).max_diff(&p) < 1e-10);
    }

    #[test]
    fn aff_subgroup(xi in aff_tangent(), s in -1.0f64..1.0, t in -1.0f64..1.0) {
        prop_assert!(sweep::aff_subgroup_error(&[(xi, s, t)], Execution::Sequential) < 1e-9);
    }

    #[test]
    fn aff_group_axioms(p in aff_point(), q in aff_point(), r in aff_point()) {
        let lhs = aff::mul(&aff::mul(&p, &q), &r);
        let rhs = aff::mul(&p, &aff::mul(&q, &r));
        prop_assert!(lhs.max_diff(&rhs) < 1e-9 * (1.0 + lhs.a.abs() + lhs.b.abs()));
        prop_assert!(aff::mul(&p, &aff::inv(&p)).max_diff(&aff::IDENTITY) < 1e-12);
    }

    #[test]
    fn double_round_trips(xi in dbl_tangent(), p in dbl_point()) {
        prop_assert!(double::log(&double::exp(&xi)).max_diff(&xi) < 1e-10);
        prop_assert!(double::exp(&double::log(&p)).max_diff(&p) < 1e-10);
    }

    #[test]
    fn double_subgroup(xi in dbl_tangent(), s in -1.0f64..1.0, t in -1.0f64..1.0) {
        prop_assert!(sweep::double_subgroup_error(&[(xi, s, t)], Execution::Sequential) < 1e-9);
    }

    #[test]
    fn double_associativity(x in dbl_point(), y in dbl_point(), z in dbl_point()) {
        prop_assert!(sweep::double_associativity_error(&[(x, y, z)], Execution::Sequential) < 1e-10);
        prop_assert!(double::mul(&x, &double::inv(&x)).max_diff(&double::IDENTITY) < 1e-10);
    }

    #[test]
    fn heisenberg_maps_are_exact_inverses(a in dyadic(), b in dyadic(), c in dyadic()) {
        prop_assert_eq!(double::heis_log(double::heis_exp([a, b, c])), [a, b, c]);
        prop_assert_eq!(double::heis_exp(double::heis_log([a, b, c])), [a, b, c]);
    }

    #[test]
    fn cartesian_line(m in 0.2f64..2.0, neg in any::<bool>(), eta in prop_oneof![-2.0f64..-0.1, 0.1f64..2.0]) {
        let xi = aff::AffTangent::new(if neg { -m } else { m }, eta);
        prop_assert!(sweep::cartesian_line_error(&[xi], 50, Execution::Sequential) < 1e-9);
    }

    #[test]
    fn geodesic_starts_with_velocity(x in -2.0f64..2.0, eta in -2.0f64..2.0) {
        let xi = aff::AffTangent::new(x, eta);
        let h = 1e-6;
        let p = aff::geodesic(&xi, h).unwrap();
        let q = aff::geodesic(&xi, -h).unwrap();
        prop_assert!(((p.a - q.a) / (2.0 * h) - x).abs() < 1e-6);
        prop_assert!(((p.b - q.b) / (2.0 * h) - eta).abs() < 1e-6);
    }

    #[test]
    fn removable_singularities_are_continuous(x in -1e-5f64..1e-5) {
        let near = |f: fn(f64) -> f64, exact: f64| (f(x) - exact).abs() < 1e-5;
        prop_assert!(near(exprel, 1.0) && near(exprel_neg, 1.0) && near(exp_neg_quad, 0.5));
    }
}

#[test]
fn removable_singularity_branches_agree() {
    for x in [1e-13, 5e-7, 2e-6, -3e-7, -2e-6, 0.3] {
        assert_abs_diff_eq!(exprel(x), x.exp_m1() / x, epsilon = 1e-12);
        assert_abs_diff_eq!(exprel_neg(x), -(-x).exp_m1() / x, epsilon = 1e-12);
    }
    assert_abs_diff_eq!(
        exp_neg_quad(0.5),
        ((-0.5f64).exp() - 1.0 + 0.5) / 0.25,
        epsilon = 1e-14
    );
    assert_eq!(exprel(0.0), 1.0);
    assert_eq!(exp_neg_quad(0.0), 0.5);
}

#[test]
fn aff_connection_from_symplectic_form() {
    // ω0(Γ(ei, ej), ek) = -ω0(ej, [ei, ek])
    let g = catalog::aff_r();
    let w = aff::symplectic_form();
    let conn = aff::connection();
    let omega = |u: &[f64], v: &[f64]| {
        (0..2)
            .map(|a| (0..2).map(|b| u[a] * w[a][b] * v[b]).sum::<f64>())
            .sum::<f64>()
    };
    let unit = |i: usize| {
        let mut v = [0.0; 2];
        v[i] = 1.0;
        v
    };
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let gamma: Vec<f64> = (0..2).map(|m| conn.symbol(i + 1, j + 1, m + 1)).collect();
                let br: Vec<f64> = (0..2)
                    .map(|m| to_f64(g.structure_constant(i, k, m)))
                    .collect();
                assert_eq!(
                    omega(&gamma, &unit(k)),
                    -omega(&unit(j), &br),
                    "i={i} j={j} k={k}"
                );
            }
        }
    }
}

#[test]
fn geodesic_matches_rk4_for_zero_first_component() {
    let xi = aff::AffTangent::new(0.0, 1.5);
    let times: Vec<f64> = (0..=10).map(|i| f64::from(i) * 0.2).collect();
    let numeric = aff::geodesic_rk4(&xi, &times, 50);
    for (t, p) in times.iter().zip(numeric) {
        assert!(aff::geodesic(&xi, *t).unwrap().max_diff(&p) < 1e-12);
    }
}

#[test]
fn double_geodesic_converges_at_fourth_order() {
    let xi = double::DoubleTangent::new([0.3, 0.1, 0.0, 0.2]);
    let r = sweep::double_richardson_ratio(&xi, 1.0, 32);
    assert!((12.0..=20.0).contains(&r), "{r}");
    let a = double::geodesic_integrate(&xi, 1.0, 500).last().unwrap().1;
    let b = double::geodesic_integrate(&xi, 1.0, 1000).last().unwrap().1;
    assert!(a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-10));
}

#[test]
fn sweep_policies_agree() {
    let xis: Vec<aff::AffTangent> = (1..=8)
        .map(|k| aff::AffTangent::new(0.25 * f64::from(k) - 1.1, 0.7))
        .collect();
    let par = sweep::aff_geodesic_rk4_error(&xis, 40, 100, Execution::Parallel);
    let seq = sweep::aff_geodesic_rk4_error(&xis, 40, 100, Execution::Sequential);
    assert_eq!(par, seq);
    assert!(par < 1e-8);
}
