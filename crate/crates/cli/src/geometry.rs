use anyhow::{bail, Context, Result};
use clap::Subcommand;
use serde_json::json;

use liecot_core::geom::{aff, double};

use crate::report::{self, Report};
use crate::Output;

#[derive(Subcommand)]
pub enum AffCommand {
    /// Group exponential of `--xi xi1,xi2`.
    Exp {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Group logarithm of `--point a,b` (a > 0).
    Log {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Product `p q`.
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Geodesic through the identity: the point at `--t`, or a CSV trajectory
    /// with `--t-end` and `--steps`.
    Geodesic {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "t_end")]
        t: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        t_end: Option<f64>,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Integrate the geodesic equations with RK4 instead of the closed form.
        #[arg(long)]
        rk4: bool,
    },
    /// CSV trajectory of the integral curve `t -> exp(t xi)`.
    Integral {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, allow_hyphen_values = true)]
        t_end: f64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
    },
}

#[derive(Subcommand)]
pub enum DoubleCommand {
    /// Group exponential of `--xi x1,x2,x3,x4`.
    Exp {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Group logarithm of `--point x1,x2,x3,x4`.
    Log {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Product `x y`.
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// RK4 geodesic from the identity as CSV.
    Geodesic {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        t_end: f64,
        #[arg(long, default_value_t = double::DEFAULT_STEPS)]
        steps: usize,
    },
    /// Nonzero Christoffel symbols.
    Christoffel,
    /// Checks on the complex structure at the identity.
    Jcheck,
}

fn floats<const N: usize>(s: &str) -> Result<[f64; N]> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("bad number {t:?}"))
        })
        .collect::<Result<_>>()?;
    match <[f64; N]>::try_from(v) {
        Ok(a) if a.iter().all(|x| x.is_finite()) => Ok(a),
        Ok(_) => bail!("non-finite value in {s:?}"),
        Err(v) => bail!("expected {N} comma-separated numbers, got {}", v.len()),
    }
}

fn times(t_end: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 {
        bail!("--steps must be positive");
    }
    Ok((0..=steps)
        .map(|i| t_end * i as f64 / steps as f64)
        .collect())
}

fn aff_point(p: &aff::AffElement) -> serde_json::Value {
    json!({ "a": report::num(p.a), "b": report::num(p.b) })
}

pub fn aff(cmd: &AffCommand) -> Result<Output> {
    let r = match cmd {
        AffCommand::Exp { xi } => {
            let [a, b] = floats(xi)?;
            Report::new("aff exp")
                .input("xi", report::nums(&[a, b]))
                .result("point", aff_point(&aff::exp(&aff::AffTangent::new(a, b))))
        }
        AffCommand::Log { point } => {
            let [a, b] = floats(point)?;
            let xi = aff::log(&aff::AffElement::new(a, b)?);
            Report::new("aff log")
                .input("point", report::nums(&[a, b]))
                .result("xi", report::nums(&[xi.xi1, xi.xi2]))
        }
        AffCommand::Mul { p, q } => {
            let [a1, b1] = floats(p)?;
            let [a2, b2] = floats(q)?;
            let prod = aff::mul(
                &aff::AffElement::new(a1, b1)?,
                &aff::AffElement::new(a2, b2)?,
            );
            Report::new("aff mul")
                .input("p", report::nums(&[a1, b1]))
                .input("q", report::nums(&[a2, b2]))
                .result("product", aff_point(&prod))
        }
        AffCommand::Geodesic {
            xi,
            t,
            t_end,
            steps,
            rk4,
        } => {
            let [x, eta] = floats(xi)?;
            let v = aff::AffTangent::new(x, eta);
            if let Some(t) = t {
                let p = if *rk4 {
                    aff::geodesic_rk4(&v, &[*t], *steps).remove(0)
                } else {
                    aff::geodesic(&v, *t)?
                };
                Report::new("aff geodesic")
                    .input("xi", report::nums(&[x, eta]))
                    .input("t", report::num(*t))
                    .input("method", if *rk4 { "rk4" } else { "closed_form" })
                    .result("point", aff_point(&p))
            } else {
                let ts = times(t_end.unwrap_or(1.0), *steps)?;
                let points = if *rk4 {
                    let mut p = vec![aff::IDENTITY];
                    p.extend(aff::geodesic_rk4(&v, &ts[1..], 10));
                    p
                } else {
                    ts.iter()
                        .map(|&t| aff::geodesic(&v, t))
                        .collect::<Result<_, _>>()?
                };
                let rows: Vec<(f64, Vec<f64>)> = ts
                    .iter()
                    .zip(points)
                    .map(|(&t, p)| (t, vec![p.a, p.b]))
                    .collect();
                return Ok(Output::Text(report::csv(&rows)));
            }
        }
        AffCommand::Integral { xi, t_end, steps } => {
            let [x, eta] = floats(xi)?;
            let v = aff::AffTangent::new(x, eta);
            let rows: Vec<(f64, Vec<f64>)> = times(*t_end, *steps)?
                .into_iter()
                .map(|t| {
                    let p = aff::integral_curve(&v, t);
                    (t, vec![p.a, p.b])
                })
                .collect();
            return Ok(Output::Text(report::csv(&rows)));
        }
    };
    Ok(Output::Report(r))
}

pub fn double(cmd: &DoubleCommand) -> Result<Output> {
    let r = match cmd {
        DoubleCommand::Exp { xi } => {
            let v: [f64; 4] = floats(xi)?;
            Report::new("double exp")
                .input("xi", report::nums(&v))
                .result(
                    "point",
                    report::nums(&double::exp(&double::DoubleTangent::new(v)).x),
                )
        }
        DoubleCommand::Log { point } => {
            let p: [f64; 4] = floats(point)?;
            Report::new("double log")
                .input("point", report::nums(&p))
                .result(
                    "xi",
                    report::nums(&double::log(&double::DoubleElement::new(p)).xi),
                )
        }
        DoubleCommand::Mul { x, y } => {
            let (a, b): ([f64; 4], [f64; 4]) = (floats(x)?, floats(y)?);
            let prod = double::mul(
                &double::DoubleElement::new(a),
                &double::DoubleElement::new(b),
            );
            Report::new("double mul")
                .input("x", report::nums(&a))
                .input("y", report::nums(&b))
                .result("product", report::nums(&prod.x))
        }
        DoubleCommand::Geodesic { xi, t_end, steps } => {
            let v: [f64; 4] = floats(xi)?;
            if *steps == 0 {
                bail!("--steps must be positive");
            }
            let rows: Vec<(f64, Vec<f64>)> =
                double::geodesic_integrate(&double::DoubleTangent::new(v), *t_end, *steps)
                    .into_iter()
                    .map(|(t, p)| (t, p.to_vec()))
                    .collect();
            return Ok(Output::Text(report::csv(&rows)));
        }
        DoubleCommand::Christoffel => {
            let symbols: Vec<serde_json::Value> = double::connection()
                .nonzero()
                .into_iter()
                .map(|(i, j, k, v)| json!({ "i": i, "j": j, "k": k, "value": report::num(v) }))
                .collect();
            Report::new("double christoffel")
                .result("count", symbols.len())
                .result("symbols", symbols)
        }
        DoubleCommand::Jcheck => Report::new("double jcheck")
            .result("j", report::matrix(&double::complex_structure()))
            .result(
                "checks",
                serde_json::to_value(double::complex_structure_checks())?,
            ),
    };
    Ok(Output::Report(r))
}
