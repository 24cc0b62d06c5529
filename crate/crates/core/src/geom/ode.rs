//! Christoffel tables and fixed-step RK4 for geodesic equations.

use serde::Serialize;

/// `∇_{e_i} e_j = Γ_ij^k e_k`, stored densely as `gamma[(i*n + j)*n + k]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Connection {
    dim: usize,
    gamma: Vec<f64>,
}

impl Connection {
    /// From 1-based `(i, j, k, Γ_ij^k)` entries.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, f64)]) -> Self {
        let mut gamma = vec![0.0; dim * dim * dim];
        for &(i, j, k, v) in entries {
            gamma[((i - 1) * dim + (j - 1)) * dim + (k - 1)] = v;
        }
        Self { dim, gamma }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Γ_ij^k`, 1-based.
    pub fn symbol(&self, i: usize, j: usize, k: usize) -> f64 {
        let n = self.dim;
        self.gamma[((i - 1) * n + (j - 1)) * n + (k - 1)]
    }

    /// Nonzero symbols as 1-based `(i, j, k, value)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, f64)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.gamma[(i * n + j) * n + k];
                    if v != 0.0 {
                        out.push((i + 1, j + 1, k + 1, v));
                    }
                }
            }
        }
        out
    }

    /// Acceleration `-Γ_ij^k v^i v^j`.
    pub fn acceleration(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut a = vec![0.0; n];
        for i in 0..n {
            for j in 0..n {
                let w = v[i] * v[j];
                if w == 0.0 {
                    continue;
                }
                for (k, ak) in a.iter_mut().enumerate() {
                    *ak -= self.gamma[(i * n + j) * n + k] * w;
                }
            }
        }
        a
    }

    /// First-order system on `(position, velocity)`.
    pub fn geodesic_field(&self, state: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut d = state[n..].to_vec();
        d.extend(self.acceleration(&state[n..]));
        d
    }
}

/// One classical RK4 step.
pub fn rk4_step(f: &impl Fn(&[f64]) -> Vec<f64>, y: &[f64], h: f64) -> Vec<f64> {
    let axpy = |a: &[f64], s: f64, b: &[f64]| -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + s * y).collect()
    };
    let k1 = f(y);
    let k2 = f(&axpy(y, h / 2.0, &k1));
    let k3 = f(&axpy(y, h / 2.0, &k2));
    let k4 = f(&axpy(y, h, &k3));
    y.iter()
        .enumerate()
        .map(|(i, yi)| yi + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

/// Integrates from `t0` to `t1` in `steps` equal steps; returns every state
/// including the initial one.
pub fn rk4(
    f: impl Fn(&[f64]) -> Vec<f64>,
    y0: &[f64],
    t0: f64,
    t1: f64,
    steps: usize,
) -> Vec<(f64, Vec<f64>)> {
    assert!(steps >= 1, "rk4 needs at least one step");
    let h = (t1 - t0) / steps as f64;
    let mut out = Vec::with_capacity(steps + 1);
    let mut y = y0.to_vec();
    out.push((t0, y.clone()));
    for s in 1..=steps {
        y = rk4_step(&f, &y, h);
        out.push((t0 + h * s as f64, y.clone()));
    }
    out
}

/// States at each of `times` (monotone, starting from `t0`), taking
/// `substeps` RK4 steps between consecutive samples.
pub fn rk4_at(
    f: impl Fn(&[f64]) -> Vec<f64>,
    y0: &[f64],
    t0: f64,
    times: &[f64],
    substeps: usize,
) -> Vec<Vec<f64>> {
    let mut y = y0.to_vec();
    let mut t = t0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        let h = (target - t) / substeps as f64;
        for _ in 0..substeps {
            y = rk4_step(&f, &y, h);
        }
        t = target;
        out.push(y.clone());
    }
    out
}
