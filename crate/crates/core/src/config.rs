//! Algebra configuration files: flat `key=value` lines.
//!
//! ```text
//! # classical differential operators over Q[y]
//! field=Q
//! sigma_y=y
//! delta_y=1
//! ```
//!
//! `field` is optional (rationals are the only supported field);
//! `sigma_y` and `delta_y` are required and parsed as polynomials in y.

use std::path::Path;

use crate::algebra::{shared, Algebra, OreAlgebraSpec};
use crate::base::BasePoly;
use crate::error::{Error, Result};
use crate::parse::parse_base;

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraConfig {
    pub sigma_y: BasePoly,
    pub delta_y: BasePoly,
}

fn config_error(message: impl Into<String>) -> Error {
    Error::Config { message: message.into() }
}

impl AlgebraConfig {
    /// Parses config text. Unknown keys, duplicates, and missing
    /// `sigma_y`/`delta_y` are all rejected so a typo cannot silently
    /// yield the wrong algebra.
    pub fn parse(text: &str) -> Result<AlgebraConfig> {
        let mut sigma_y: Option<BasePoly> = None;
        let mut delta_y: Option<BasePoly> = None;
        let mut field_seen = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let Some((key, value)) = line.split_once('=') else {
                return Err(config_error(format!(
                    "line {lineno}: expected key=value, got {line:?}"
                )));
            };
            let key = key.trim();
            let value = value.trim();
            let parse_value = |what: &str| {
                parse_base(value).map_err(|e| {
                    config_error(format!("line {lineno}: {what}: {e}"))
                })
            };
            match key {
                "field" => {
                    if field_seen {
                        return Err(config_error(format!("line {lineno}: duplicate key field")));
                    }
                    field_seen = true;
                    if value != "Q" {
                        return Err(config_error(format!(
                            "line {lineno}: unsupported field {value:?} (only Q)"
                        )));
                    }
                }
                "sigma_y" => {
                    if sigma_y.is_some() {
                        return Err(config_error(format!("line {lineno}: duplicate key sigma_y")));
                    }
                    sigma_y = Some(parse_value("sigma_y")?);
                }
                "delta_y" => {
                    if delta_y.is_some() {
                        return Err(config_error(format!("line {lineno}: duplicate key delta_y")));
                    }
                    delta_y = Some(parse_value("delta_y")?);
                }
                _ => {
                    return Err(config_error(format!("line {lineno}: unknown key {key:?}")));
                }
            }
        }
        let sigma_y = sigma_y.ok_or_else(|| config_error("missing key sigma_y"))?;
        let delta_y = delta_y.ok_or_else(|| config_error("missing key delta_y"))?;
        Ok(AlgebraConfig { sigma_y, delta_y })
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        Ok(shared(OreAlgebraSpec::new(self.sigma_y.clone(), self.delta_y.clone())?))
    }
}

/// Reads and parses an algebra config file.
pub fn load_algebra(path: &Path) -> Result<Algebra> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        config_error(format!("cannot read {}: {e}", path.display()))
    })?;
    AlgebraConfig::parse(&text)?.to_algebra()
}
