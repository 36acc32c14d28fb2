//! Algebra configuration: presets, `key = value` config files and the
//! flag-level settings they produce.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ore::{CoeffRing, OreAlgebra};
use crate::parse::{eval_poly, parse_expr};
use crate::scalar::{FieldSpec, Scalar};

/// Settings assembled from defaults, a config file and command-line
/// flags, in that order. Presets override sigma/delta.
#[derive(Debug, Clone)]
pub struct AlgebraSettings {
    pub field: FieldSpec,
    pub coeff_ring: CoeffRing,
    pub sigma_src: String,
    pub delta_src: String,
}

impl Default for AlgebraSettings {
    fn default() -> Self {
        // the Weyl algebra over Q
        AlgebraSettings {
            field: FieldSpec::Rationals,
            coeff_ring: CoeffRing::PolyRing,
            sigma_src: "y".into(),
            delta_src: "1".into(),
        }
    }
}

/// `Q` or `F<p>` with a prime p.
pub fn parse_field(src: &str) -> Result<FieldSpec> {
    let s = src.trim();
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("invalid field `{}`", src)))?;
        return FieldSpec::prime_field(p);
    }
    Err(Error::InvalidConfig(format!(
        "invalid field `{}` (expected Q or F<p>)",
        src
    )))
}

pub fn parse_coeff_ring(src: &str) -> Result<CoeffRing> {
    match src.trim() {
        "poly" => Ok(CoeffRing::PolyRing),
        "ratfunc" => Ok(CoeffRing::RationalFunctions),
        other => Err(Error::InvalidConfig(format!(
            "invalid coeff_ring `{}` (expected poly or ratfunc)",
            other
        ))),
    }
}

impl AlgebraSettings {
    /// Applies a line-oriented `key = value` config file.
    pub fn apply_config_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::InvalidConfig(format!("cannot read {}: {}", path.display(), e)))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::InvalidConfig(format!(
                    "line {}: expected `key = value`",
                    lineno + 1
                )));
            };
            let value = value.trim();
            match key.trim() {
                "field" => self.field = parse_field(value)?,
                "coeff_ring" => self.coeff_ring = parse_coeff_ring(value)?,
                "sigma" => self.sigma_src = value.to_string(),
                "delta" => self.delta_src = value.to_string(),
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "line {}: unknown key `{}`",
                        lineno + 1,
                        other
                    )))
                }
            }
        }
        Ok(())
    }

    /// Replaces sigma/delta with a named preset.
    pub fn apply_preset(&mut self, name: &str, q: Option<&str>) -> Result<()> {
        match name {
            "weyl" => {
                self.sigma_src = "y".into();
                self.delta_src = "1".into();
            }
            "qweyl" => {
                let q_src = q.ok_or_else(|| {
                    Error::InvalidConfig("preset qweyl requires --q".into())
                })?;
                let q_val = Scalar::parse(self.field, q_src)?;
                if q_val.is_zero() {
                    return Err(Error::InvalidAlgebra("q must be nonzero".into()));
                }
                self.sigma_src = format!("({})*y", q_src.trim());
                self.delta_src = "1".into();
            }
            "power" => {
                // sigma/delta come from --sigma/--delta
            }
            other => {
                return Err(Error::InvalidConfig(format!(
                    "unknown preset `{}` (expected weyl, qweyl or power)",
                    other
                )))
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<OreAlgebra> {
        let sigma = eval_poly(&parse_expr(&self.sigma_src)?, self.field)?;
        let delta = eval_poly(&parse_expr(&self.delta_src)?, self.field)?;
        OreAlgebra::new(self.field, self.coeff_ring, sigma, delta)
    }
}
