//! FFT-diagonalized constant-coefficient solves and preconditioned CG.
//!
//! All operators act on the cell-centered 5-point stencil, and the FFT
//! solves use the *discrete* symbol of that stencil, so a spectral solve
//! inverts the stencil operator to rounding accuracy rather than to
//! discretization accuracy.
//!
//! The homogeneous-Dirichlet problem (ghost value = minus the first
//! interior value, i.e. the field vanishes on the wall half a cell outside
//! the last node) is solved by odd extension to a torus of doubled period:
//! restricted to odd fields, the periodic stencil on the doubled grid is
//! exactly the cell-centered Dirichlet stencil.

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// A 2D periodic Poisson/Helmholtz solver: `(Δ_h - κ) x = b`.
pub struct PeriodicPoisson {
    n1: usize,
    n2: usize,
    fwd_x: Arc<dyn Fft<f64>>,
    inv_x: Arc<dyn Fft<f64>>,
    fwd_y: Arc<dyn Fft<f64>>,
    inv_y: Arc<dyn Fft<f64>>,
    /// Stencil eigenvalues, layout `k2 * n1 + k1`; all `<= 0`.
    symbol: Vec<f64>,
}

impl PeriodicPoisson {
    pub fn new(n1: usize, n2: usize, h1: f64, h2: f64) -> Self {
        let mut planner = FftPlanner::new();
        let fwd_x = planner.plan_fft_forward(n1);
        let inv_x = planner.plan_fft_inverse(n1);
        let fwd_y = planner.plan_fft_forward(n2);
        let inv_y = planner.plan_fft_inverse(n2);

        let mut symbol = vec![0.0; n1 * n2];
        for k2 in 0..n2 {
            let s2 = (2.0 - 2.0 * (2.0 * std::f64::consts::PI * k2 as f64 / n2 as f64).cos())
                / (h2 * h2);
            for k1 in 0..n1 {
                let s1 = (2.0 - 2.0 * (2.0 * std::f64::consts::PI * k1 as f64 / n1 as f64).cos())
                    / (h1 * h1);
                symbol[k2 * n1 + k1] = -(s1 + s2);
            }
        }
        Self {
            n1,
            n2,
            fwd_x,
            inv_x,
            fwd_y,
            inv_y,
            symbol,
        }
    }

    /// Solves `(Δ_h - κ) x = b` with periodic boundaries.
    ///
    /// For `κ = 0` the mean of `b` is dropped and the solution has zero
    /// mean (the stencil is singular on constants).
    pub fn solve_shifted(&self, b: &[f64], kappa: f64, x: &mut [f64]) {
        let (n1, n2) = (self.n1, self.n2);
        assert_eq!(b.len(), n1 * n2);
        assert_eq!(x.len(), n1 * n2);

        let mut buf: Vec<Complex<f64>> = b.iter().map(|&v| Complex::new(v, 0.0)).collect();
        let mut tr: Vec<Complex<f64>> = vec![Complex::new(0.0, 0.0); n1 * n2];

        self.fwd_x.process(&mut buf);
        transpose(&buf, &mut tr, n1, n2);
        self.fwd_y.process(&mut tr);

        // tr layout after transpose: [k1 * n2 + k2]
        for k1 in 0..n1 {
            for k2 in 0..n2 {
                let denom = self.symbol[k2 * n1 + k1] - kappa;
                let c = &mut tr[k1 * n2 + k2];
                if denom.abs() < 1e-300 {
                    *c = Complex::new(0.0, 0.0);
                } else {
                    *c /= denom;
                }
            }
        }

        self.inv_y.process(&mut tr);
        transpose(&tr, &mut buf, n2, n1);
        self.inv_x.process(&mut buf);

        let scale = 1.0 / (n1 * n2) as f64;
        for (xi, c) in x.iter_mut().zip(&buf) {
            *xi = c.re * scale;
        }
    }
}

/// Dirichlet counterpart of [`PeriodicPoisson`] by odd extension.
pub struct DirichletPoisson {
    n1: usize,
    n2: usize,
    inner: PeriodicPoisson,
}

impl DirichletPoisson {
    pub fn new(n1: usize, n2: usize, h1: f64, h2: f64) -> Self {
        Self {
            n1,
            n2,
            inner: PeriodicPoisson::new(2 * n1, 2 * n2, h1, h2),
        }
    }

    /// Solves `(Δ_h - κ) x = b` with the homogeneous cell-centered
    /// Dirichlet stencil (odd ghosts at all four walls).
    pub fn solve_shifted(&self, b: &[f64], kappa: f64, x: &mut [f64]) {
        let (n1, n2) = (self.n1, self.n2);
        assert_eq!(b.len(), n1 * n2);
        let (e1, e2) = (2 * n1, 2 * n2);
        let mut ext = vec![0.0; e1 * e2];
        for iy in 0..n2 {
            for ix in 0..n1 {
                let v = b[iy * n1 + ix];
                ext[iy * e1 + ix] = v;
                ext[iy * e1 + (e1 - 1 - ix)] = -v;
                ext[(e2 - 1 - iy) * e1 + ix] = -v;
                ext[(e2 - 1 - iy) * e1 + (e1 - 1 - ix)] = v;
            }
        }
        let mut sol = vec![0.0; e1 * e2];
        self.inner.solve_shifted(&ext, kappa, &mut sol);
        for iy in 0..n2 {
            x[iy * n1..iy * n1 + n1].copy_from_slice(&sol[iy * e1..iy * e1 + n1]);
        }
    }
}

fn transpose(src: &[Complex<f64>], dst: &mut [Complex<f64>], rows_len: usize, n_rows: usize) {
    // src: n_rows rows of length rows_len; dst: rows_len rows of length n_rows
    for r in 0..n_rows {
        for c in 0..rows_len {
            dst[c * n_rows + r] = src[r * rows_len + c];
        }
    }
}

/// 5-point stencil Laplacian with periodic wrap.
pub fn apply_laplacian_periodic(
    n1: usize,
    n2: usize,
    h1: f64,
    h2: f64,
    x: &[f64],
    out: &mut [f64],
) {
    let (c1, c2) = (1.0 / (h1 * h1), 1.0 / (h2 * h2));
    for iy in 0..n2 {
        let up = if iy + 1 == n2 { 0 } else { iy + 1 };
        let dn = if iy == 0 { n2 - 1 } else { iy - 1 };
        for ix in 0..n1 {
            let rt = if ix + 1 == n1 { 0 } else { ix + 1 };
            let lf = if ix == 0 { n1 - 1 } else { ix - 1 };
            let c = x[iy * n1 + ix];
            out[iy * n1 + ix] = c1 * (x[iy * n1 + rt] + x[iy * n1 + lf] - 2.0 * c)
                + c2 * (x[up * n1 + ix] + x[dn * n1 + ix] - 2.0 * c);
        }
    }
}

/// 5-point stencil Laplacian with homogeneous cell-centered Dirichlet walls
/// (ghost value = minus the adjacent interior value).
pub fn apply_laplacian_dirichlet0(
    n1: usize,
    n2: usize,
    h1: f64,
    h2: f64,
    x: &[f64],
    out: &mut [f64],
) {
    let (c1, c2) = (1.0 / (h1 * h1), 1.0 / (h2 * h2));
    for iy in 0..n2 {
        for ix in 0..n1 {
            let c = x[iy * n1 + ix];
            let rt = if ix + 1 == n1 { -c } else { x[iy * n1 + ix + 1] };
            let lf = if ix == 0 { -c } else { x[iy * n1 + ix - 1] };
            let up = if iy + 1 == n2 { -c } else { x[(iy + 1) * n1 + ix] };
            let dn = if iy == 0 { -c } else { x[(iy - 1) * n1 + ix] };
            out[iy * n1 + ix] = c1 * (rt + lf - 2.0 * c) + c2 * (up + dn - 2.0 * c);
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CgResult {
    pub iterations: usize,
    pub relative_residual: f64,
    pub converged: bool,
}

/// Preconditioned conjugate gradients for an SPD operator.
///
/// `x` holds the initial guess on entry and the solution on exit. Stops
/// when `||b - A x||_2 <= rel_tol * ||b||_2`.
pub fn pcg(
    apply_a: impl Fn(&[f64], &mut [f64]),
    apply_m_inv: impl Fn(&[f64], &mut [f64]),
    b: &[f64],
    x: &mut [f64],
    rel_tol: f64,
    max_iters: usize,
) -> CgResult {
    let n = b.len();
    let b_norm = norm2(b);
    if b_norm == 0.0 {
        x.fill(0.0);
        return CgResult {
            iterations: 0,
            relative_residual: 0.0,
            converged: true,
        };
    }

    let mut r = vec![0.0; n];
    let mut z = vec![0.0; n];
    let mut ap = vec![0.0; n];

    apply_a(x, &mut ap);
    for i in 0..n {
        r[i] = b[i] - ap[i];
    }
    apply_m_inv(&r, &mut z);
    let mut p = z.clone();
    let mut rz = dot(&r, &z);

    for iter in 0..max_iters {
        let res = norm2(&r) / b_norm;
        if res <= rel_tol {
            return CgResult {
                iterations: iter,
                relative_residual: res,
                converged: true,
            };
        }
        apply_a(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap <= 0.0 || !pap.is_finite() {
            // loss of positive definiteness; report failure
            return CgResult {
                iterations: iter,
                relative_residual: res,
                converged: false,
            };
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        apply_m_inv(&r, &mut z);
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }

    CgResult {
        iterations: max_iters,
        relative_residual: norm2(&r) / b_norm,
        converged: norm2(&r) / b_norm <= rel_tol,
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn norm_inf(a: &[f64]) -> f64 {
    a.iter().fold(0.0f64, |m, &v| m.max(v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn smooth_field(n1: usize, n2: usize, zero_mean: bool) -> Vec<f64> {
        let mut x = vec![0.0; n1 * n2];
        for iy in 0..n2 {
            for ix in 0..n1 {
                let a = 2.0 * std::f64::consts::PI * ix as f64 / n1 as f64;
                let b = 2.0 * std::f64::consts::PI * iy as f64 / n2 as f64;
                x[iy * n1 + ix] = (a.sin() * (2.0 * b).cos()) + 0.3 * (3.0 * a).cos();
            }
        }
        if zero_mean {
            let mean = x.iter().sum::<f64>() / x.len() as f64;
            for v in &mut x {
                *v -= mean;
            }
        }
        x
    }

    #[test]
    fn periodic_solve_inverts_the_stencil() {
        let (n1, n2, h1, h2) = (32, 48, 0.1, 0.07);
        let solver = PeriodicPoisson::new(n1, n2, h1, h2);
        let x0 = smooth_field(n1, n2, true);
        let mut b = vec![0.0; n1 * n2];
        apply_laplacian_periodic(n1, n2, h1, h2, &x0, &mut b);
        let mut x = vec![0.0; n1 * n2];
        solver.solve_shifted(&b, 0.0, &mut x);
        for (a, b) in x.iter().zip(&x0) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn periodic_shifted_solve() {
        let (n1, n2, h1, h2) = (32, 32, 0.05, 0.05);
        let kappa = 2.7;
        let solver = PeriodicPoisson::new(n1, n2, h1, h2);
        let x0 = smooth_field(n1, n2, false);
        let mut b = vec![0.0; n1 * n2];
        apply_laplacian_periodic(n1, n2, h1, h2, &x0, &mut b);
        for i in 0..b.len() {
            b[i] -= kappa * x0[i];
        }
        let mut x = vec![0.0; n1 * n2];
        solver.solve_shifted(&b, kappa, &mut x);
        for (a, b) in x.iter().zip(&x0) {
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn dirichlet_solve_inverts_the_stencil() {
        let (n1, n2, h1, h2) = (24, 40, 0.11, 0.09);
        let solver = DirichletPoisson::new(n1, n2, h1, h2);
        // any interior field; no boundary compatibility needed
        let mut x0 = smooth_field(n1, n2, false);
        x0[0] += 0.37; // break symmetry
        let mut b = vec![0.0; n1 * n2];
        apply_laplacian_dirichlet0(n1, n2, h1, h2, &x0, &mut b);
        let mut x = vec![0.0; n1 * n2];
        solver.solve_shifted(&b, 0.0, &mut x);
        for (a, b) in x.iter().zip(&x0) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn dirichlet_shifted_solve() {
        let (n1, n2, h1, h2) = (16, 16, 0.2, 0.2);
        let kappa = 1.3;
        let solver = DirichletPoisson::new(n1, n2, h1, h2);
        let x0 = smooth_field(n1, n2, false);
        let mut b = vec![0.0; n1 * n2];
        apply_laplacian_dirichlet0(n1, n2, h1, h2, &x0, &mut b);
        for i in 0..b.len() {
            b[i] -= kappa * x0[i];
        }
        let mut x = vec![0.0; n1 * n2];
        solver.solve_shifted(&b, kappa, &mut x);
        for (a, b) in x.iter().zip(&x0) {
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn pcg_matches_spectral_on_constant_coefficients() {
        // A = -Δ + q with constant q: PCG with the exact spectral
        // preconditioner must converge in a couple of iterations.
        let (n1, n2, h1, h2) = (32, 32, 0.1, 0.1);
        let q = 0.8;
        let solver = DirichletPoisson::new(n1, n2, h1, h2);
        let x0 = smooth_field(n1, n2, false);
        let mut b = vec![0.0; n1 * n2];
        apply_laplacian_dirichlet0(n1, n2, h1, h2, &x0, &mut b);
        for i in 0..b.len() {
            b[i] = -b[i] + q * x0[i];
        }
        let mut x = vec![0.0; n1 * n2];
        let result = pcg(
            |v, out| {
                apply_laplacian_dirichlet0(n1, n2, h1, h2, v, out);
                for i in 0..out.len() {
                    out[i] = -out[i] + q * v[i];
                }
            },
            |v, out| {
                solver.solve_shifted(v, q, out);
                for o in out.iter_mut() {
                    *o = -*o;
                }
            },
            &b,
            &mut x,
            1e-12,
            50,
        );
        assert!(result.converged);
        assert!(result.iterations <= 3, "iters {}", result.iterations);
        for (a, b) in x.iter().zip(&x0) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn pcg_variable_coefficients() {
        let (n1, n2, h1, h2) = (32, 32, 0.1, 0.1);
        let n = n1 * n2;
        // q varies over the grid, stays within [0.2, 1.8]
        let q: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.8 * ((i % 17) as f64 / 8.0 - 1.0))
            .collect();
        let qbar = q.iter().sum::<f64>() / n as f64;
        let solver = DirichletPoisson::new(n1, n2, h1, h2);
        let x0 = smooth_field(n1, n2, false);
        let mut b = vec![0.0; n];
        apply_laplacian_dirichlet0(n1, n2, h1, h2, &x0, &mut b);
        for i in 0..n {
            b[i] = -b[i] + q[i] * x0[i];
        }
        let mut x = vec![0.0; n];
        let result = pcg(
            |v, out| {
                apply_laplacian_dirichlet0(n1, n2, h1, h2, v, out);
                for i in 0..out.len() {
                    out[i] = -out[i] + q[i] * v[i];
                }
            },
            |v, out| {
                solver.solve_shifted(v, qbar, out);
                for o in out.iter_mut() {
                    *o = -*o;
                }
            },
            &b,
            &mut x,
            1e-11,
            200,
        );
        assert!(result.converged, "res {}", result.relative_residual);
        for (a, b) in x.iter().zip(&x0) {
            assert!((a - b).abs() < 1e-8);
        }
    }
}
