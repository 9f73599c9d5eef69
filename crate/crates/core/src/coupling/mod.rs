//! Coupling-function families `(f, w, F)` and their admissibility checks.
//!
//! A coupling triple is constrained by `w(s) = 1 - 2 s f(s)`, `F = -2 w'`,
//! `w(1) = 0`, `(s f(s))' >= 0`, and `s f(s) -> 0, 1` as `s -> 0, ∞`. The
//! solver only ever needs the combinations `s f(s)` and `s F(s)`, and the
//! PDE unknown is `v = ln|u|^2`, so every model is expressed in the log
//! variable `t = ln s`: near vortex cores `t -> -∞` and near antivortex
//! cores `t -> +∞`, while `s = e^t` itself would overflow long before.
//!
//! `s F(s)` at `s = e^t` equals `d/dt [4 e^t f(e^t)]`, which is the Newton
//! Jacobian weight of the governing equation and the kinetic-term
//! coefficient of the energy density.

mod custom;
mod expr;
mod registry;
mod validate;

pub use custom::load_custom_model;
pub use expr::{sigmoid, Expr, ExprError};
pub use registry::{resolve_model, ModelRegistry};
pub use validate::{
    check_lambda_condition, check_plane_conditions, validate_coupling, CouplingValidationReport,
    Violation,
};

use std::sync::Arc;

/// Step used when synthesizing `s F(s)` from `s f(s)` by central differences.
pub const SBF_SYNTHESIS_STEP: f64 = 1e-6;

/// A coupling model, immutable and shareable between solver workers.
///
/// All methods take the log argument `t = ln s`.
pub trait Coupling: Send + Sync {
    fn name(&self) -> &str;

    /// `s f(s)` at `s = e^t`. Nondecreasing, in `[0, 1]`, with value `1/2`
    /// at `t = 0` and limits `0, 1` at `t -> ∓∞`.
    fn sf_log(&self, t: f64) -> f64;

    /// `s F(s)` at `s = e^t` ("s big-F"); equals `4 (d/dt) sf_log(t)`.
    /// Nonnegative, vanishing as `t -> ±∞`.
    fn sbf_log(&self, t: f64) -> f64;

    /// `w(s)` at `s = e^t`; fixed by the identity `w = 1 - 2 s f(s)`.
    fn w_log(&self, t: f64) -> f64 {
        1.0 - 2.0 * self.sf_log(t)
    }

    /// `F(1)`, the squared far-field decay rate of Theorem-2-type solutions.
    fn big_f_one(&self) -> f64;
}

/// Shared handle to a coupling model.
pub type Model = Arc<dyn Coupling>;

/// The classical model `f = 1/(1+s)`, `w = (1-s)/(1+s)`, `F = 4/(1+s)^2`.
///
/// In the log variable `s f(s)` is the logistic function, so evaluation is
/// overflow-free for any `|t|`.
#[derive(Debug, Clone, Copy)]
pub struct Classical;

impl Coupling for Classical {
    fn name(&self) -> &str {
        "classical"
    }

    fn sf_log(&self, t: f64) -> f64 {
        sigmoid(t)
    }

    fn sbf_log(&self, t: f64) -> f64 {
        // s F(s) = 4 s/(1+s)^2 = 4 σ(t) σ(-t)
        4.0 * sigmoid(t) * sigmoid(-t)
    }

    fn big_f_one(&self) -> f64 {
        1.0
    }
}

/// The integer family `w = (1-s^m)/(1+s^m)`, `F = 4m s^(m-1)/(1+s^m)^2`,
/// `s f(s) = s^m/(1+s^m)`; reduces to [`Classical`] at `m = 1` and has
/// `F(1) = m`.
#[derive(Debug, Clone, Copy)]
pub struct MFamily {
    m: u32,
    name: &'static str,
}

impl MFamily {
    pub fn new(m: u32) -> Result<Self, CouplingError> {
        if m == 0 {
            return Err(CouplingError::InvalidParameter(
                "m-family exponent must be a positive integer".into(),
            ));
        }
        // Leak the tiny name string; models live for the whole run.
        let name: &'static str = Box::leak(format!("m:{m}").into_boxed_str());
        Ok(Self { m, name })
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

impl Coupling for MFamily {
    fn name(&self) -> &str {
        self.name
    }

    fn sf_log(&self, t: f64) -> f64 {
        sigmoid(self.m as f64 * t)
    }

    fn sbf_log(&self, t: f64) -> f64 {
        let mt = self.m as f64 * t;
        4.0 * self.m as f64 * sigmoid(mt) * sigmoid(-mt)
    }

    fn big_f_one(&self) -> f64 {
        self.m as f64
    }
}

type ScalarFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// A coupling defined by arbitrary closures, used for user-supplied models.
///
/// Only `s f(s)` is mandatory; `s F(s)` is synthesized by central
/// differences (step [`SBF_SYNTHESIS_STEP`]) when absent, which is accurate
/// enough for Newton's method. `w` is always derived from the identity.
pub struct FnCoupling {
    name: String,
    sf: ScalarFn,
    sbf: Option<ScalarFn>,
    big_f_one: f64,
}

impl FnCoupling {
    pub fn new(
        name: impl Into<String>,
        sf: impl Fn(f64) -> f64 + Send + Sync + 'static,
        sbf: Option<ScalarFn>,
        big_f_one: Option<f64>,
    ) -> Self {
        let sf: ScalarFn = Box::new(sf);
        let big_f_one = big_f_one.unwrap_or_else(|| match &sbf {
            Some(g) => g(0.0),
            None => synthesize_sbf(&sf, 0.0),
        });
        Self {
            name: name.into(),
            sf,
            sbf,
            big_f_one,
        }
    }
}

fn synthesize_sbf(sf: &ScalarFn, t: f64) -> f64 {
    let h = SBF_SYNTHESIS_STEP;
    4.0 * (sf(t + h) - sf(t - h)) / (2.0 * h)
}

impl Coupling for FnCoupling {
    fn name(&self) -> &str {
        &self.name
    }

    fn sf_log(&self, t: f64) -> f64 {
        (self.sf)(t)
    }

    fn sbf_log(&self, t: f64) -> f64 {
        match &self.sbf {
            Some(g) => g(t),
            None => synthesize_sbf(&self.sf, t),
        }
    }

    fn big_f_one(&self) -> f64 {
        self.big_f_one
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CouplingError {
    #[error("invalid coupling parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown model '{spec}'; known schemes: {known}")]
    UnknownModel { spec: String, known: String },
    #[error("failed to read model definition {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("bad model definition {path}: {message}")]
    Definition { path: String, message: String },
    #[error("bad expression for {field}: {source}")]
    Expression {
        field: &'static str,
        #[source]
        source: ExprError,
    },
}

/// Convenience constructor for the classical model.
pub fn builtin_classical() -> Model {
    Arc::new(Classical)
}

/// Convenience constructor for the m-family; rejects `m = 0`.
pub fn builtin_m_family(m: u32) -> Result<Model, CouplingError> {
    Ok(Arc::new(MFamily::new(m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn classical_anchor_values() {
        let c = Classical;
        assert_eq!(c.sf_log(0.0), 0.5); // f(1) = 1/2
        assert_eq!(c.w_log(0.0), 0.0); // w(1) = 0
        assert_eq!(c.big_f_one(), 1.0); // F(1) = 4/(1+1)^2
        assert_eq!(c.sbf_log(0.0), 1.0);
    }

    #[test]
    fn classical_large_argument_is_exact_and_finite() {
        let c = Classical;
        assert_eq!(c.sf_log(700.0), 1.0); // saturates exactly, no overflow
        assert_eq!(c.sf_log(-700.0), 0.0);
        for &t in &[1e4, -1e4, 1e6, -1e6] {
            assert!(c.sf_log(t).is_finite());
            assert!(c.sbf_log(t).is_finite());
            assert!(c.sbf_log(t) >= 0.0);
        }
        assert!(c.sbf_log(1e4) <= 1e-100);
    }

    #[test]
    fn m_family_matches_closed_forms() {
        let m4 = MFamily::new(4).unwrap();
        assert_eq!(m4.big_f_one(), 4.0);
        let m2 = MFamily::new(2).unwrap();
        assert_eq!(m2.sf_log(0.0), 0.5);
        // w at s = 3: (1 - 9)/(1 + 9) = -0.8
        assert!((m2.w_log(3f64.ln()) + 0.8).abs() < 1e-14);
        assert!(MFamily::new(0).is_err());
    }

    #[test]
    fn m_one_coincides_with_classical() {
        let m1 = MFamily::new(1).unwrap();
        let c = Classical;
        for i in 0..2000 {
            let t = -40.0 + i as f64 * 0.04;
            assert_eq!(m1.sf_log(t), c.sf_log(t));
            assert_eq!(m1.sbf_log(t), c.sbf_log(t));
        }
    }

    #[test]
    fn sbf_matches_derivative_of_4sf() {
        // d/dt [4 e^v f(e^v)] = e^v F(e^v), checked by central differences.
        let models: Vec<Model> = vec![
            Arc::new(Classical),
            Arc::new(MFamily::new(2).unwrap()),
            Arc::new(MFamily::new(4).unwrap()),
        ];
        let h = 1e-5;
        for m in &models {
            for i in 0..800 {
                let t = -20.0 + i as f64 * 0.05;
                let diff = (4.0 * m.sf_log(t + h) - 4.0 * m.sf_log(t - h)) / (2.0 * h);
                let sbf = m.sbf_log(t);
                assert!(
                    (diff - sbf).abs() <= 1e-6 * sbf.abs().max(1.0),
                    "{} at t={t}: diff {diff} vs sbf {sbf}",
                    m.name()
                );
            }
        }
    }

    #[test]
    fn fn_coupling_synthesizes_sbf_and_f_one() {
        let m = FnCoupling::new("logistic", sigmoid, None, None);
        assert!((m.big_f_one() - 1.0).abs() < 1e-9);
        assert!((m.sbf_log(1.3) - Classical.sbf_log(1.3)).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn builtin_invariants(t1 in -1e4..1e4f64, t2 in -1e4..1e4f64, m in 1u32..6) {
            let model = MFamily::new(m).unwrap();
            let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
            // monotone
            prop_assert!(model.sf_log(lo) <= model.sf_log(hi) + 1e-14);
            // bounds and identity
            for &t in &[t1, t2] {
                let sf = model.sf_log(t);
                prop_assert!((0.0..=1.0).contains(&sf));
                prop_assert!((model.w_log(t) - (1.0 - 2.0 * sf)).abs() <= 1e-12);
                prop_assert!(model.sbf_log(t) >= 0.0);
                prop_assert!(model.sf_log(t).is_finite() && model.sbf_log(t).is_finite());
            }
        }
    }
}
