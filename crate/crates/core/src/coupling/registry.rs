//! Name-based registry of coupling-model families.
//!
//! A model is selected at runtime by a spec string: the part before the
//! first `:` names the family, the rest is passed to its factory. The
//! built-in schemes are `classical`, `m:<integer>`, and `custom:<path>`;
//! callers may register additional families.

use std::path::Path;

use super::{builtin_classical, builtin_m_family, load_custom_model, CouplingError, Model};

type Factory = Box<dyn Fn(Option<&str>) -> Result<Model, CouplingError> + Send + Sync>;

pub struct ModelRegistry {
    entries: Vec<(String, Factory)>,
}

impl ModelRegistry {
    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    /// Registry with the built-in families.
    pub fn with_builtins() -> Self {
        let mut reg = Self::empty();
        reg.register("classical", |arg| {
            if arg.is_some() {
                return Err(CouplingError::InvalidParameter(
                    "'classical' takes no parameter".into(),
                ));
            }
            Ok(builtin_classical())
        });
        reg.register("m", |arg| {
            let arg = arg.ok_or_else(|| {
                CouplingError::InvalidParameter("'m' needs an integer, e.g. m:4".into())
            })?;
            let m: u32 = arg.parse().map_err(|_| {
                CouplingError::InvalidParameter(format!("bad m-family exponent '{arg}'"))
            })?;
            builtin_m_family(m)
        });
        reg.register("custom", |arg| {
            let arg = arg.ok_or_else(|| {
                CouplingError::InvalidParameter("'custom' needs a path, e.g. custom:model.toml".into())
            })?;
            load_custom_model(Path::new(arg))
        });
        reg
    }

    pub fn register(
        &mut self,
        scheme: &str,
        factory: impl Fn(Option<&str>) -> Result<Model, CouplingError> + Send + Sync + 'static,
    ) {
        self.entries.push((scheme.to_string(), Box::new(factory)));
    }

    pub fn schemes(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(s, _)| s.as_str())
    }

    /// Resolves a spec string like `"classical"`, `"m:4"` or
    /// `"custom:path/to/def.toml"`.
    pub fn resolve(&self, spec: &str) -> Result<Model, CouplingError> {
        let (scheme, arg) = match spec.split_once(':') {
            Some((s, a)) => (s, Some(a)),
            None => (spec, None),
        };
        for (name, factory) in &self.entries {
            if name == scheme {
                return factory(arg);
            }
        }
        Err(CouplingError::UnknownModel {
            spec: spec.to_string(),
            known: self
                .schemes()
                .collect::<Vec<_>>()
                .join(", "),
        })
    }
}

impl Default for ModelRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

/// Resolves a model spec against the built-in registry.
pub fn resolve_model(spec: &str) -> Result<Model, CouplingError> {
    ModelRegistry::with_builtins().resolve(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn resolves_builtin_schemes() {
        assert_eq!(resolve_model("classical").unwrap().name(), "classical");
        let m = resolve_model("m:4").unwrap();
        assert_eq!(m.name(), "m:4");
        assert_eq!(m.big_f_one(), 4.0);
    }

    #[test]
    fn rejects_unknown_and_malformed_specs() {
        assert!(resolve_model("frobnicate").is_err());
        assert!(resolve_model("m").is_err());
        assert!(resolve_model("m:zero").is_err());
        assert!(resolve_model("m:0").is_err());
        assert!(resolve_model("custom").is_err());
        assert!(resolve_model("classical:extra").is_err());
        let err = resolve_model("nope").err().unwrap().to_string();
        assert!(err.contains("classical"), "{err}");
    }

    #[test]
    fn user_schemes_can_be_registered() {
        let mut reg = ModelRegistry::with_builtins();
        reg.register("logistic", |_| Ok(Arc::new(crate::coupling::Classical)));
        assert_eq!(reg.resolve("logistic").unwrap().name(), "classical");
    }
}
