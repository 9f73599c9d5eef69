//! User-defined coupling models loaded from a structured-text definition.
//!
//! The file is flat TOML. `sf_log` gives `s f(s)` at `s = e^t` either as an
//! expression in `t` or as a piecewise-linear table (constant beyond the
//! ends); `sbf_log` optionally gives `s F(s)`, otherwise it is synthesized
//! by central differences. `f_one` optionally pins `F(1)`.
//!
//! ```toml
//! name = "steep-logistic"
//! sf_log = "sigmoid(3*t)"
//! # sbf_log = "12*sigmoid(3*t)*sigmoid(-3*t)"
//! # f_one = 3.0
//! # sf_log_table = [[-40.0, 0.0], [0.0, 0.5], [40.0, 1.0]]
//! ```

use std::path::Path;
use std::sync::Arc;

use super::{CouplingError, Expr, FnCoupling, Model};

pub fn load_custom_model(path: &Path) -> Result<Model, CouplingError> {
    let text = std::fs::read_to_string(path).map_err(|source| CouplingError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let def: toml::Value = text.parse().map_err(|e| CouplingError::Definition {
        path: path.display().to_string(),
        message: format!("{e}"),
    })?;
    let bad = |message: String| CouplingError::Definition {
        path: path.display().to_string(),
        message,
    };

    let name = match def.get("name") {
        Some(v) => v
            .as_str()
            .ok_or_else(|| bad("'name' must be a string".into()))?
            .to_string(),
        None => path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".into()),
    };

    let sf: Box<dyn Fn(f64) -> f64 + Send + Sync> =
        match (def.get("sf_log"), def.get("sf_log_table")) {
            (Some(v), None) => {
                let src = v
                    .as_str()
                    .ok_or_else(|| bad("'sf_log' must be an expression string".into()))?;
                let expr = Expr::parse(src).map_err(|source| CouplingError::Expression {
                    field: "sf_log",
                    source,
                })?;
                Box::new(move |t| expr.eval(t))
            }
            (None, Some(v)) => {
                let table = parse_table(v).map_err(bad)?;
                Box::new(move |t| eval_table(&table, t))
            }
            (Some(_), Some(_)) => {
                return Err(bad("give either 'sf_log' or 'sf_log_table', not both".into()))
            }
            (None, None) => return Err(bad("missing 'sf_log' (or 'sf_log_table')".into())),
        };

    let sbf: Option<Box<dyn Fn(f64) -> f64 + Send + Sync>> = match def.get("sbf_log") {
        Some(v) => {
            let src = v
                .as_str()
                .ok_or_else(|| bad("'sbf_log' must be an expression string".into()))?;
            let expr = Expr::parse(src).map_err(|source| CouplingError::Expression {
                field: "sbf_log",
                source,
            })?;
            Some(Box::new(move |t| expr.eval(t)))
        }
        None => None,
    };

    let f_one = match def.get("f_one") {
        Some(v) => Some(
            v.as_float()
                .or_else(|| v.as_integer().map(|i| i as f64))
                .ok_or_else(|| bad("'f_one' must be a number".into()))?,
        ),
        None => None,
    };

    Ok(Arc::new(FnCoupling::new(name, sf, sbf, f_one)))
}

fn parse_table(v: &toml::Value) -> Result<Vec<(f64, f64)>, String> {
    let rows = v
        .as_array()
        .ok_or("'sf_log_table' must be an array of [t, value] pairs")?;
    let mut table = Vec::with_capacity(rows.len());
    for row in rows {
        let pair = row
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or("each table row must be a [t, value] pair")?;
        let num = |x: &toml::Value| {
            x.as_float()
                .or_else(|| x.as_integer().map(|i| i as f64))
                .ok_or("table entries must be numbers")
        };
        table.push((num(&pair[0])?, num(&pair[1])?));
    }
    if table.len() < 2 {
        return Err("table needs at least two rows".into());
    }
    if table.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err("table t-values must be strictly increasing".into());
    }
    Ok(table)
}

/// Piecewise-linear interpolation, constant beyond the table ends.
fn eval_table(table: &[(f64, f64)], t: f64) -> f64 {
    if t <= table[0].0 {
        return table[0].1;
    }
    if t >= table[table.len() - 1].0 {
        return table[table.len() - 1].1;
    }
    let k = table.partition_point(|&(x, _)| x <= t) - 1;
    let (t0, v0) = table[k];
    let (t1, v1) = table[k + 1];
    v0 + (v1 - v0) * (t - t0) / (t1 - t0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(contents: &str) -> std::path::PathBuf {
        let mut path = std::env::temp_dir();
        path.push(format!(
            "coupling-def-{}-{}.toml",
            std::process::id(),
            contents.len()
        ));
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        path
    }

    #[test]
    fn expression_model_round_trips() {
        let path = write_temp(
            r#"
name = "steep"
sf_log = "sigmoid(3*t)"
"#,
        );
        let m = load_custom_model(&path).unwrap();
        assert_eq!(m.name(), "steep");
        assert_eq!(m.sf_log(0.0), 0.5);
        assert!((m.big_f_one() - 3.0).abs() < 1e-6); // synthesized from sf
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn table_model_interpolates() {
        let path = write_temp("sf_log_table = [[-10.0, 0.0], [0.0, 0.5], [10.0, 1.0]]\n");
        let m = load_custom_model(&path).unwrap();
        assert_eq!(m.sf_log(0.0), 0.5);
        assert_eq!(m.sf_log(5.0), 0.75);
        assert_eq!(m.sf_log(-100.0), 0.0); // constant extension
        assert_eq!(m.sf_log(100.0), 1.0);
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn rejects_bad_definitions() {
        for text in [
            "name = \"x\"\n",                               // no sf_log
            "sf_log = \"nope(t)\"\n",                       // unknown function
            "sf_log = \"t\"\nsf_log_table = [[0.0, 0.5]]\n", // both forms
            "sf_log_table = [[0.0, 0.5]]\n",                // too short
            "sf_log_table = [[1.0, 0.5], [0.0, 0.6]]\n",    // not increasing
        ] {
            let path = write_temp(text);
            assert!(load_custom_model(&path).is_err(), "accepted: {text}");
            std::fs::remove_file(path).ok();
        }
        assert!(load_custom_model(Path::new("/nonexistent/model.toml")).is_err());
    }
}
