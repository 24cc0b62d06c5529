//! The worked-example suite: sixteen numbered checks over the catalog, each
//! reporting pass/fail with a short detail string.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog;
use crate::exec::Execution;
use crate::geom::{aff, double, sweep};
use crate::lie::LieAlgebra;
use crate::linalg::{inertia, Inertia};
use crate::matrix::Matrix;
use crate::metrics::{self, BilinearForm};
use crate::operators::{
    derivations_with, graded_split_with, h1_report_with, inner_derivations, prederivations_with,
    xi_decomposition_check, OperatorSpace,
};
use crate::rational::int;
use crate::reference;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

pub const COUNT: u8 = 16;

pub const SEED: u64 = 0x5eed;

const TITLES: [&str; COUNT as usize] = [
    "der(T*aff) has dim 5 and contains phi1..phi5",
    "der(T*so3), der(T*sl2) have dim 7 and contain the reference bases",
    "Pder = der on T*sl2 and T*so3",
    "Pder(T*G_1) has dim 13 and contains phi1..phi13",
    "H1 of cotangents: sl2 1, so3 1, sl2+so3 2, so3+R 5",
    "H1 decomposition identity on every catalog algebra",
    "Killing form of sl2 is [[8,0,0],[0,0,4],[0,4,0]]",
    "invariant form dims: T*aff 2, T*sl2 2, T*G_1 5, G_1 2",
    "inertia of duality and mu_{a,b} samples",
    "skew prederivations: T*sl2 dim 6 = inner, T*aff dim 3 = span(phi1, phi2, phi4)",
    "graded split closure on catalog cotangents",
    "xi decomposition check on catalog cotangents",
    "aff geodesic closed form vs RK4 below 1e-8",
    "exp/log round trips below 1e-10, double subgroup law below 1e-9",
    "j^2 = -Id and j[e1,e2] = -e3 differs from [e1, j e2] = 0",
    "double Christoffel table and RK4 Richardson ratio in [12, 20]",
];

pub fn title(id: u8) -> Option<&'static str> {
    TITLES.get(usize::from(id).checked_sub(1)?).copied()
}

/// Catalog algebras at default parameters.
pub fn catalog_algebras() -> Vec<LieAlgebra> {
    catalog::NAMES
        .iter()
        .map(|n| {
            catalog::by_name(n, &catalog::Params::default()).expect("catalog defaults are valid")
        })
        .collect()
}

fn sum_algebras() -> Vec<LieAlgebra> {
    vec![
        LieAlgebra::direct_sum(&catalog::sl2(), &catalog::so3()),
        LieAlgebra::direct_sum(&catalog::so3(), &LieAlgebra::abelian(1)),
    ]
}

fn contains_all(space: &OperatorSpace, mats: &[Matrix]) -> bool {
    mats.iter().all(|m| space.contains(m))
}

fn dims(pairs: &[(&str, usize)]) -> String {
    pairs
        .iter()
        .map(|(n, d)| format!("{n}={d}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn tri(n: usize) -> Inertia {
    Inertia {
        n_plus: n,
        n_minus: n,
        n_zero: 0,
    }
}

fn c1(exec: Execution) -> (bool, String) {
    let der = derivations_with(&catalog::aff_r().cotangent(), exec);
    let ok = contains_all(&der, &reference::aff_derivations());
    (
        der.dim() == 5 && ok,
        format!("dim={} contains_phi={ok}", der.dim()),
    )
}

fn c2(exec: Execution) -> (bool, String) {
    let so = derivations_with(&catalog::so3().cotangent(), exec);
    let sl = derivations_with(&catalog::sl2().cotangent(), exec);
    let (a, b) = (
        contains_all(&so, &reference::so3_derivations()),
        contains_all(&sl, &reference::sl2_derivations()),
    );
    (
        so.dim() == 7 && sl.dim() == 7 && a && b,
        format!(
            "so3: dim={} contains={a}; sl2: dim={} contains={b}",
            so.dim(),
            sl.dim()
        ),
    )
}

fn c3(exec: Execution) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for g in [catalog::sl2(), catalog::so3()] {
        let d = g.cotangent();
        let eq = prederivations_with(&d, exec) == derivations_with(&d, exec);
        pass &= eq;
        parts.push(format!("{}: {eq}", g.name()));
    }
    (pass, parts.join(", "))
}

fn c4(exec: Execution) -> (bool, String) {
    let lambda = int(1);
    let d = catalog::oscillator(lambda.clone())
        .expect("lambda > 0")
        .cotangent();
    let p = prederivations_with(&d, exec);
    let ok = contains_all(&p, &reference::oscillator_prederivations(&lambda));
    (
        p.dim() == 13 && ok,
        format!("dim={} contains_phi={ok}", p.dim()),
    )
}

fn c5(exec: Execution) -> (bool, String) {
    let mut cases = vec![(catalog::sl2(), 1), (catalog::so3(), 1)];
    cases.extend(sum_algebras().into_iter().zip([2, 5]));
    let got: Vec<(String, usize, usize)> = cases
        .iter()
        .map(|(g, want)| {
            (
                g.name().to_string(),
                h1_report_with(g, exec).h1_cotangent,
                *want,
            )
        })
        .collect();
    let pass = got.iter().all(|(_, h, w)| h == w);
    let detail = got
        .iter()
        .map(|(n, h, _)| format!("{n}={h}"))
        .collect::<Vec<_>>()
        .join(" ");
    (pass, detail)
}

fn c6(exec: Execution) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for g in catalog_algebras().into_iter().chain(sum_algebras()) {
        let r = h1_report_with(&g, exec);
        pass &= r.decomposition_holds();
        parts.push(format!(
            "{}: {}={}",
            g.name(),
            r.h1_cotangent,
            r.decomposition_sum()
        ));
    }
    (pass, parts.join(", "))
}

fn c7(_: Execution) -> (bool, String) {
    let k = catalog::sl2().killing_matrix();
    let ok = k == Matrix::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]);
    (ok, format!("{:?}", k.to_strings()))
}

fn c8(exec: Execution) -> (bool, String) {
    let osc = catalog::oscillator(int(1)).expect("lambda > 0");
    let got = [
        (
            "T*aff",
            metrics::invariant_forms_with(&catalog::aff_r().cotangent(), exec).dim(),
            2,
        ),
        (
            "T*sl2",
            metrics::invariant_forms_with(&catalog::sl2().cotangent(), exec).dim(),
            2,
        ),
        (
            "T*G_1",
            metrics::invariant_forms_with(&osc.cotangent(), exec).dim(),
            5,
        ),
        ("G_1", metrics::invariant_forms_with(&osc, exec).dim(), 2),
    ];
    let pass = got.iter().all(|(_, d, w)| d == w);
    let pairs: Vec<(&str, usize)> = got.iter().map(|(n, d, _)| (*n, *d)).collect();
    (pass, dims(&pairs))
}

fn c9(_: Execution) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for g in catalog_algebras() {
        let d = g.cotangent();
        let i = metrics::form_inertia(&metrics::duality_pairing(&d).expect("cotangent"));
        pass &= i == tri(g.dim());
        parts.push(format!("T*{} {i}", g.name()));
    }
    let samples = reference::mu_samples();
    let aff_ok = samples
        .iter()
        .all(|(a, b)| inertia(&reference::aff_mu(a, b)).ok() == Some(tri(2)));
    let sl2_ok = samples
        .iter()
        .all(|(a, b)| inertia(&reference::sl2_mu(a, b)).ok() == Some(tri(3)));
    pass &= aff_ok && sl2_ok;
    parts.push(format!(
        "mu on T*aff (2,2,0): {aff_ok}, mu on T*sl2 (3,3,0): {sl2_ok}"
    ));
    (pass, parts.join(", "))
}

fn c10(exec: Execution) -> (bool, String) {
    let sl = catalog::sl2().cotangent();
    let inner = inner_derivations(&sl);
    let mut sl_dims = Vec::new();
    let mut pass = true;
    for (a, b) in reference::mu_samples() {
        let form = BilinearForm::new(reference::sl2_mu(&a, &b)).expect("symmetric");
        match metrics::skew_prederivations_with(&sl, &form, exec) {
            Ok(s) => {
                pass &= s.dim() == 6 && s == inner;
                sl_dims.push(s.dim());
            }
            Err(_) => pass = false,
        }
    }
    let af = catalog::aff_r().cotangent();
    let phis = reference::aff_derivations();
    let want = OperatorSpace::span(4, 4, &reference::AFF_SKEW.map(|i| phis[i].clone()));
    let mut aff_dims = Vec::new();
    for (a, b) in reference::mu_samples() {
        let form = BilinearForm::new(reference::aff_mu(&a, &b)).expect("symmetric");
        match metrics::skew_prederivations_with(&af, &form, exec) {
            Ok(s) => {
                pass &= s.dim() == 3 && s == want;
                aff_dims.push(s.dim());
            }
            Err(_) => pass = false,
        }
    }
    (
        pass,
        format!("T*sl2 dims {sl_dims:?}, T*aff dims {aff_dims:?}"),
    )
}

fn c11(exec: Execution) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for g in catalog_algebras() {
        let s = graded_split_with(&g.cotangent(), exec).expect("cotangent");
        let ok = s.checks.dims_add_up
            && s.checks.g0_g0_in_g0
            && s.checks.g0_g1_in_g1
            && s.checks.g1_g1_in_g0;
        pass &= ok;
        parts.push(format!(
            "T*{} {}+{}={}",
            g.name(),
            s.g0.dim(),
            s.g1.dim(),
            s.der.dim()
        ));
    }
    (pass, parts.join(", "))
}

fn c12(_: Execution) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for g in catalog_algebras() {
        let ok = xi_decomposition_check(&g.cotangent()).unwrap_or(false);
        pass &= ok;
        parts.push(format!("T*{} {ok}", g.name()));
    }
    (pass, parts.join(", "))
}

/// Twenty velocities with `|ξ1| ∈ [0.2, 2]` of either sign and `ξ2 ∈ [-2, 2]`.
pub fn geodesic_samples(rng: &mut impl Rng) -> Vec<aff::AffTangent> {
    (0..20)
        .map(|_| {
            let m: f64 = rng.gen_range(0.2..2.0);
            let s = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            aff::AffTangent::new(s * m, rng.gen_range(-2.0..2.0))
        })
        .collect()
}

fn c13(exec: Execution) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let xis = geodesic_samples(&mut rng);
    let err = sweep::aff_geodesic_rk4_error(&xis, 100, 200, exec);
    (err < 1e-8, format!("max error {err:.3e}"))
}

fn c14(exec: Execution) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let n = 1000;
    let mut u = |lo: f64, hi: f64| rng.gen_range(lo..hi);
    let aff_xi: Vec<_> = (0..n)
        .map(|_| aff::AffTangent::new(u(-3.0, 3.0), u(-3.0, 3.0)))
        .collect();
    let aff_pts: Vec<_> = (0..n)
        .map(|_| aff::AffElement::new(u(-3.0, 3.0).exp(), u(-5.0, 5.0)).expect("a > 0"))
        .collect();
    let dbl_xi: Vec<_> = (0..n)
        .map(|_| {
            double::DoubleTangent::new([u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0)])
        })
        .collect();
    let dbl_pts: Vec<_> = (0..n)
        .map(|_| {
            double::DoubleElement::new([u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0)])
        })
        .collect();
    let sub: Vec<_> = dbl_xi
        .iter()
        .map(|x| (*x, u(-1.0, 1.0), u(-1.0, 1.0)))
        .collect();
    let a = sweep::aff_round_trip_error(&aff_xi, &aff_pts, exec);
    let d = sweep::double_round_trip_error(&dbl_xi, &dbl_pts, exec);
    let s = sweep::double_subgroup_error(&sub, exec);
    (
        a < 1e-10 && d < 1e-10 && s < 1e-9,
        format!("aff {a:.3e}, double {d:.3e}, subgroup {s:.3e}"),
    )
}

fn c15(_: Execution) -> (bool, String) {
    let c = double::complex_structure_checks();
    let e3 = ["0", "0", "-1", "0"];
    let pass = c.squares_to_minus_identity
        && c.j_of_bracket == e3
        && c.bracket_with_j.iter().all(|s| s == "0")
        && !c.bi_invariant_on_e1_e2;
    (
        pass,
        format!(
            "j^2=-Id: {}, j[e1,e2]={:?}, [e1,je2]={:?}",
            c.squares_to_minus_identity, c.j_of_bracket, c.bracket_with_j
        ),
    )
}

fn c16(_: Execution) -> (bool, String) {
    let c = double::connection();
    let table_ok = c.nonzero().len() == 12
        && reference::DOUBLE_SYMBOLS
            .iter()
            .all(|&(i, j, k, v)| c.symbol(i, j, k) == v);
    let xi = double::DoubleTangent::new([0.3, 0.1, 0.0, 0.2]);
    let ratio = sweep::double_richardson_ratio(&xi, 1.0, RICHARDSON_STEPS);
    (
        table_ok && (12.0..=20.0).contains(&ratio),
        format!("table {table_ok}, Richardson ratio {ratio:.3}"),
    )
}

/// Base step count for the Richardson test (`N`, `2N`, `4N`).
pub const RICHARDSON_STEPS: usize = 32;

type Check = fn(Execution) -> (bool, String);

const CHECKS: [Check; COUNT as usize] = [
    c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15, c16,
];

/// Runs check `id` (1-based).
pub fn run(id: u8, exec: Execution) -> Option<CheckResult> {
    let f = CHECKS.get(usize::from(id).checked_sub(1)?)?;
    let (pass, detail) = f(exec);
    Some(CheckResult {
        id,
        title: TITLES[usize::from(id) - 1],
        pass,
        detail,
    })
}

pub fn run_all(exec: Execution) -> Vec<CheckResult> {
    (1..=COUNT).filter_map(|id| run(id, exec)).collect()
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {:>2}. {} ({})",
            self.id, self.title, self.detail
        )
    }
}
