//! Suite configuration: a single declarative TOML file plus command-line
//! overrides. Constraint violations are rejected before any computation,
//! naming the violated constraint.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use ywkit::rmatrix::{ThetaClass, ThetaVector};
use ywkit::scalar::Scalar;
use ywkit::signature::Signature;

/// Errors from configuration parsing or validation (exit code 2).
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "configuration error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(default)]
    pub algebra: AlgebraSection,
    #[serde(default)]
    pub reps: RepsSection,
    #[serde(default)]
    pub nls: NlsSection,
    #[serde(default)]
    pub run: RunSection,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    /// signature as "N" or "M|N"
    pub sig: Option<String>,
    pub p: Option<u32>,
    /// twist class: "plus" | "minus"
    pub theta: Option<String>,
    /// folding sign: "+" | "-"
    pub sign: Option<String>,
    /// twist mode-sign convention: "generating-function" | "shifted"
    pub tau_convention: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepsSection {
    /// evaluation parameters, rationals as "p/q" strings
    pub parameters: Option<Vec<String>>,
    /// second parameters of the irreducibility sweep (first is 0)
    pub sweep: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NlsSection {
    pub momenta: Option<Vec<String>>,
    pub m_max: Option<u32>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub jobs: Option<usize>,
    pub out: Option<String>,
    /// "json" | "text"
    pub format: Option<String>,
}

/// Fully resolved configuration, serialized canonically for hashing and
/// echoed into the report body.
#[derive(Clone, Debug, Serialize)]
pub struct Resolved {
    pub suite: String,
    pub sig: Option<String>,
    pub p: Option<u32>,
    pub theta: Option<String>,
    pub sign: Option<String>,
    pub tau_convention: String,
    pub parameters: Option<Vec<String>>,
    pub sweep: Option<Vec<String>>,
    pub momenta: Option<Vec<String>>,
    pub m_max: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TauConvention {
    GeneratingFunction,
    Shifted,
}

impl Resolved {
    pub fn signature(&self) -> Result<Option<Signature>, ConfigError> {
        match &self.sig {
            None => Ok(None),
            Some(s) => Signature::from_str(s)
                .map(Some)
                .map_err(|e| ConfigError(e.to_string())),
        }
    }

    pub fn theta_class(&self) -> Result<Option<ThetaClass>, ConfigError> {
        match self.theta.as_deref() {
            None => Ok(None),
            Some("plus") => Ok(Some(ThetaClass::Plus)),
            Some("minus") => Ok(Some(ThetaClass::Minus)),
            Some(other) => Err(ConfigError(format!(
                "theta class must be `plus` or `minus`, got `{other}`"
            ))),
        }
    }

    pub fn tau_convention(&self) -> Result<TauConvention, ConfigError> {
        match self.tau_convention.as_str() {
            "generating-function" => Ok(TauConvention::GeneratingFunction),
            "shifted" => Ok(TauConvention::Shifted),
            other => Err(ConfigError(format!(
                "tau convention must be `generating-function` or `shifted`, got `{other}`"
            ))),
        }
    }

    pub fn scalars(list: &[String]) -> Result<Vec<Scalar>, ConfigError> {
        list.iter()
            .map(|s| Scalar::from_str(s).map_err(|e| ConfigError(e.to_string())))
            .collect()
    }

    /// Validate cross-field constraints that have a named mathematical
    /// origin, before any computation runs.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let sig = self.signature()?;
        let class = self.theta_class()?;
        self.tau_convention()?;
        if let Some(sig) = sig {
            let needs_plain = matches!(self.suite.as_str(), "center" | "fold" | "nls");
            if needs_plain && !sig.is_plain() {
                return Err(ConfigError(format!(
                    "suite `{}` is defined for plain signatures (the determinant center \
                     and folding are stated in the even case); got {sig}",
                    self.suite
                )));
            }
        }
        if let (Some(sig), Some(class)) = (sig, class) {
            // constraint names follow the construction that imposes them
            ThetaVector::for_class(sig, class)
                .map_err(|e| ConfigError(format!("invalid twist for signature {sig}: {e}")))?;
        }
        if let Some(p) = self.p {
            if p == 0 {
                return Err(ConfigError("truncation level p must be >= 1".into()));
            }
        }
        if let Some(momenta) = &self.momenta {
            let vals = Self::scalars(momenta)?;
            let mut sorted = vals.clone();
            sorted.sort();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(ConfigError(format!(
                        "momenta must be pairwise distinct (exchange matrix pole): {}",
                        w[0]
                    )));
                }
            }
        }
        if let Some(params) = &self.parameters {
            Self::scalars(params)?;
        }
        if let Some(sweep) = &self.sweep {
            Self::scalars(sweep)?;
        }
        Ok(())
    }
}

/// Command-line overrides applied on top of the file configuration.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub sig: Option<String>,
    pub p: Option<u32>,
    pub theta: Option<String>,
}

pub fn resolve(suite: &str, file: &FileConfig, over: &Overrides) -> Result<Resolved, ConfigError> {
    let resolved = Resolved {
        suite: suite.to_string(),
        sig: over.sig.clone().or_else(|| file.algebra.sig.clone()),
        p: over.p.or(file.algebra.p),
        theta: over.theta.clone().or_else(|| file.algebra.theta.clone()),
        sign: file.algebra.sign.clone(),
        tau_convention: file
            .algebra
            .tau_convention
            .clone()
            .unwrap_or_else(|| "generating-function".into()),
        parameters: file.reps.parameters.clone(),
        sweep: file.reps.sweep.clone(),
        momenta: file.nls.momenta.clone(),
        m_max: file.nls.m_max.unwrap_or(3),
    };
    resolved.validate()?;
    Ok(resolved)
}

pub fn load_file(path: &str) -> Result<FileConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read `{path}`: {e}")))?;
    toml::from_str(&text).map_err(|e| ConfigError(format!("cannot parse `{path}`: {e}")))
}
