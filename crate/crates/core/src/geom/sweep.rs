//! Maximum-error sweeps over sample sets, run under an [`Execution`] policy.

use super::{aff, double};
use crate::exec::Execution;

fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Max of `|log(exp ξ) - ξ|` over tangents and `|exp(log p) - p|` over points.
pub fn aff_round_trip_error(
    xis: &[aff::AffTangent],
    points: &[aff::AffElement],
    exec: Execution,
) -> f64 {
    let a = exec.max_f64(xis, |xi| aff::log(&aff::exp(xi)).max_diff(xi));
    let b = exec.max_f64(points, |p| aff::exp(&aff::log(p)).max_diff(p));
    nan_max(a, b)
}

pub fn double_round_trip_error(
    xis: &[double::DoubleTangent],
    points: &[double::DoubleElement],
    exec: Execution,
) -> f64 {
    let a = exec.max_f64(xis, |xi| double::log(&double::exp(xi)).max_diff(xi));
    let b = exec.max_f64(points, |p| double::exp(&double::log(p)).max_diff(p));
    nan_max(a, b)
}

/// Max of `|exp((s+t)ξ) - exp(sξ) exp(tξ)|`.
pub fn aff_subgroup_error(samples: &[(aff::AffTangent, f64, f64)], exec: Execution) -> f64 {
    exec.max_f64(samples, |(xi, s, t)| {
        let lhs = aff::exp(&xi.scale(s + t));
        let rhs = aff::mul(&aff::exp(&xi.scale(*s)), &aff::exp(&xi.scale(*t)));
        lhs.max_diff(&rhs)
    })
}

pub fn double_subgroup_error(
    samples: &[(double::DoubleTangent, f64, f64)],
    exec: Execution,
) -> f64 {
    exec.max_f64(samples, |(xi, s, t)| {
        let lhs = double::exp(&xi.scale(s + t));
        let rhs = double::mul(&double::exp(&xi.scale(*s)), &double::exp(&xi.scale(*t)));
        lhs.max_diff(&rhs)
    })
}

/// Max of `|(xy)z - x(yz)|`.
pub fn double_associativity_error(
    triples: &[(
        double::DoubleElement,
        double::DoubleElement,
        double::DoubleElement,
    )],
    exec: Execution,
) -> f64 {
    exec.max_f64(triples, |(x, y, z)| {
        double::mul(&double::mul(x, y), z).max_diff(&double::mul(x, &double::mul(y, z)))
    })
}

/// `points` times inside the branch of the geodesic domain containing 0,
/// kept a margin away from the blow-up at `ξ1 t = 1` and the edge `ξ1 t = 1 - e`.
pub fn geodesic_grid(xi: &aff::AffTangent, points: usize) -> Vec<f64> {
    let (lo, hi) = if xi.xi1 == 0.0 {
        (-2.0, 2.0)
    } else {
        let s_lo = 0.9 * (1.0 - std::f64::consts::E);
        let s_hi = 0.9;
        let (a, b) = (s_lo / xi.xi1, s_hi / xi.xi1);
        (a.min(b), a.max(b))
    };
    if points == 1 {
        return vec![0.0];
    }
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

/// Closed-form geodesic against RK4 on [`geodesic_grid`], max coordinate error.
pub fn aff_geodesic_rk4_error(
    xis: &[aff::AffTangent],
    points: usize,
    substeps: usize,
    exec: Execution,
) -> f64 {
    exec.max_f64(xis, |xi| {
        let grid = geodesic_grid(xi, points);
        let mut fwd: Vec<f64> = grid.iter().copied().filter(|t| *t >= 0.0).collect();
        let mut bwd: Vec<f64> = grid.iter().copied().filter(|t| *t < 0.0).collect();
        fwd.sort_by(f64::total_cmp);
        bwd.sort_by(|a, b| b.total_cmp(a));
        let mut err: f64 = 0.0;
        for times in [fwd, bwd] {
            let numeric = aff::geodesic_rk4(xi, &times, substeps);
            for (t, p) in times.iter().zip(&numeric) {
                let e = match aff::geodesic(xi, *t) {
                    Ok(q) => q.max_diff(p),
                    Err(_) => f64::NAN,
                };
                err = nan_max(err, e);
            }
        }
        err
    })
}

/// Max distance of geodesic and integral-curve points from the line
/// `y = (ξ1/ξ2) x + 1` in the `(b, a)` plane.
pub fn cartesian_line_error(xis: &[aff::AffTangent], points: usize, exec: Execution) -> f64 {
    exec.max_f64(xis, |xi| {
        let slope = xi.xi1 / xi.xi2;
        let off = |p: &aff::AffElement| (p.a - (slope * p.b + 1.0)).abs();
        geodesic_grid(xi, points)
            .iter()
            .map(|&t| {
                let g = aff::geodesic(xi, t).map(|p| off(&p)).unwrap_or(f64::NAN);
                nan_max(g, off(&aff::integral_curve(xi, t)))
            })
            .fold(0.0, nan_max)
    })
}

/// Endpoint Richardson ratio `|y_N - y_2N| / |y_2N - y_4N|` for the double's
/// geodesic; about 16 for a fourth-order method.
pub fn double_richardson_ratio(xi: &double::DoubleTangent, t_end: f64, steps: usize) -> f64 {
    let end = |n| {
        double::geodesic_integrate(xi, t_end, n)
            .last()
            .expect("nonempty")
            .1
    };
    let (a, b, c) = (end(steps), end(2 * steps), end(4 * steps));
    let d = |p: &[f64; 4], q: &[f64; 4]| {
        p.iter()
            .zip(q)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    };
    d(&a, &b) / d(&b, &c)
}
