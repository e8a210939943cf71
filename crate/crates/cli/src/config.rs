//! Run configuration, read from a TOML file.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;
use thiserror::Error;

use qqsa::cartan::{CartanDatum, ParamMatrix};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error(transparent)]
    Library(#[from] qqsa::Error),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub cartan: CartanSpec,
    #[serde(default)]
    pub parameters: ParamSpec,
    #[serde(default)]
    pub bounds: Bounds,
    #[serde(default)]
    pub module: ModuleSpec,
    #[serde(default)]
    pub twist: TwistSpec,
    #[serde(default)]
    pub smallqg: SmallSpec,
}

/// Either a named type or an explicit matrix with symmetrizer.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanSpec {
    pub name: Option<String>,
    pub matrix: Option<Vec<Vec<i64>>>,
    pub symmetrizer: Option<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Symbolic,
    OneParameter,
    Tied,
    Numeric,
    RootOfUnity,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericValue {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    #[serde(default)]
    pub mode: Mode,
    /// 1-based `(i, j)` with `i ≤ j`; omitted means generic primes.
    #[serde(default)]
    pub values: Vec<NumericValue>,
    pub ell: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    #[serde(default = "default_reduction")]
    pub reduction: usize,
    #[serde(default = "default_height")]
    pub max_height: u32,
    #[serde(default = "default_word_length")]
    pub max_word_length: usize,
    #[serde(default = "default_depth")]
    pub max_depth: usize,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

fn default_reduction() -> usize {
    4
}
fn default_height() -> u32 {
    3
}
fn default_word_length() -> usize {
    3
}
fn default_depth() -> usize {
    16
}
fn default_samples() -> usize {
    16
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            reduction: default_reduction(),
            max_height: default_height(),
            max_word_length: default_word_length(),
            max_depth: default_depth(),
            samples: default_samples(),
        }
    }
}

/// Highest weights as label vectors `⟨λ, α_i^∨⟩`.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    #[serde(default)]
    pub lambdas: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistSpec {
    /// Parameter mode of `q̂`; only `one-parameter` and `tied` make sense.
    pub qhat: Option<Mode>,
    /// Parameter mode of `q`; defaults to `tied`.
    pub source: Option<Mode>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmallSpec {
    pub ell: Option<u32>,
    #[serde(default)]
    pub lambdas: Vec<Vec<i64>>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let cfg: RunConfig = toml::from_str(&text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let b = &self.bounds;
        if b.reduction == 0 || b.max_height == 0 || b.max_word_length == 0 || b.max_depth == 0 {
            return Err(ConfigError::Invalid("bounds must be positive".into()));
        }
        let d = self.datum()?;
        let p = &self.parameters;
        match p.mode {
            Mode::RootOfUnity if p.ell.is_none() => {
                return Err(ConfigError::Invalid("root-of-unity mode needs `ell`".into()))
            }
            Mode::RootOfUnity | Mode::Numeric => {}
            _ if p.ell.is_some() || !p.values.is_empty() => {
                return Err(ConfigError::Invalid(
                    "`ell` and `values` belong to the root-of-unity and numeric modes only".into(),
                ))
            }
            _ => {}
        }
        for l in self.module.lambdas.iter().chain(&self.smallqg.lambdas) {
            if l.len() != d.rank() {
                return Err(ConfigError::Invalid(format!("weight {l:?} has the wrong length")));
            }
        }
        Ok(())
    }

    pub fn datum(&self) -> Result<CartanDatum, ConfigError> {
        let c = &self.cartan;
        match (&c.name, &c.matrix, &c.symmetrizer) {
            (Some(n), None, None) => Ok(CartanDatum::named(n)?),
            (None, Some(a), Some(d)) => Ok(CartanDatum::new(a.clone(), d.clone())?),
            _ => Err(ConfigError::Invalid(
                "cartan needs either `name` or both `matrix` and `symmetrizer`".into(),
            )),
        }
    }

    /// The parameter matrix of a mode; numeric mode without explicit values
    /// uses generic primes sized for weights with the given denominator.
    pub fn params_for(&self, mode: Mode, denominator: i64) -> Result<ParamMatrix, ConfigError> {
        let d = self.datum()?;
        Ok(match mode {
            Mode::Symbolic => ParamMatrix::symbolic(&d),
            Mode::OneParameter => ParamMatrix::one_parameter(&d),
            Mode::Tied => ParamMatrix::tied(&d),
            Mode::RootOfUnity => {
                let ell = self
                    .parameters
                    .ell
                    .or(self.smallqg.ell)
                    .ok_or_else(|| ConfigError::Invalid("missing `ell`".into()))?;
                ParamMatrix::root_of_unity(&d, ell)?
            }
            Mode::Numeric if self.parameters.values.is_empty() => ParamMatrix::numeric_generic(&d, denominator)?,
            Mode::Numeric => {
                let mut vals = Vec::new();
                for v in &self.parameters.values {
                    if v.i == 0 || v.j == 0 {
                        return Err(ConfigError::Invalid("parameter indices are 1-based".into()));
                    }
                    vals.push(((v.i - 1, v.j - 1), parse_rational(&v.value)?));
                }
                ParamMatrix::numeric(&d, &vals)?
            }
        })
    }

    pub fn params(&self, denominator: i64) -> Result<ParamMatrix, ConfigError> {
        self.params_for(self.parameters.mode, denominator)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ConfigError> {
    let bad = || ConfigError::Invalid(format!("`{s}` is not a rational number"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_parses() {
        let c: RunConfig = toml::from_str("[cartan]\nname = \"A2\"\n").unwrap();
        c.validate().unwrap();
        assert_eq!(c.parameters.mode, Mode::Symbolic);
        assert_eq!(c.bounds.reduction, 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(toml::from_str::<RunConfig>("").is_err());
        let c: RunConfig = toml::from_str("[cartan]\nname = \"A2\"\n[bounds]\nreduction = 0\n").unwrap();
        assert!(c.validate().is_err());
        let c: RunConfig = toml::from_str("[cartan]\nname = \"A2\"\n[parameters]\nmode = \"root-of-unity\"\n").unwrap();
        assert!(c.validate().is_err());
        assert!(parse_rational("3/0").is_err());
        assert_eq!(parse_rational("-4/6").unwrap(), BigRational::new((-2).into(), 3.into()));
    }
}
