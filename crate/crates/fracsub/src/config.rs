//! TOML run configuration.
//!
//! ```toml
//! scheme = "fbdf22"
//! alpha = 0.5
//! T = 1.0
//! N = [40, 80, 160]
//!
//! [mesh]
//! dim = 1
//! M = 128
//! mass = "lumped"
//!
//! [[source.term]]
//! c = 1.0
//! mu = -0.5
//! profile = "pow:-0.25"
//!
//! [initial]
//! profile = "indicator:0.25,0.75"
//! ```
//!
//! Every key is optional; command-line flags take precedence.

use std::path::Path;

use fracsub_core::source::SourceTerm;
use fracsub_core::{InitialData, MassTreatment, Profile, SourceSpec, TimePower};
use serde::Deserialize;

use crate::error::{HarnessError, Result};

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub scheme: Option<String>,
    pub alpha: Option<f64>,
    pub nu: Option<f64>,
    pub lambda: Option<f64>,
    pub mu: Option<f64>,
    #[serde(rename = "T")]
    pub t: Option<f64>,
    #[serde(rename = "N")]
    pub n: Option<StepList>,
    pub case: Option<String>,
    pub out: Option<String>,
    pub mesh: Option<MeshConfig>,
    pub source: Option<SourceConfig>,
    pub initial: Option<InitialConfig>,
}

/// `N = 320` or `N = [20, 40, 80]`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum StepList {
    One(usize),
    Many(Vec<usize>),
}

impl StepList {
    pub fn to_vec(&self) -> Vec<usize> {
        match self {
            StepList::One(n) => vec![*n],
            StepList::Many(v) => v.clone(),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshConfig {
    pub dim: Option<usize>,
    #[serde(rename = "M")]
    pub m: Option<usize>,
    pub mass: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceConfig {
    #[serde(default)]
    pub term: Vec<TermConfig>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermConfig {
    #[serde(default = "one")]
    pub c: f64,
    pub mu: f64,
    pub profile: String,
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialConfig {
    pub profile: String,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The configured source terms, or `None` when no `[[source.term]]` is given.
    pub fn source_spec(&self) -> Result<Option<SourceSpec>> {
        let Some(src) = &self.source else { return Ok(None) };
        let terms = src
            .term
            .iter()
            .map(|t| {
                Ok(SourceTerm { time: TimePower::from_power(t.c, t.mu)?, profile: Profile::parse(&t.profile)? })
            })
            .collect::<std::result::Result<Vec<_>, fracsub_core::Error>>()?;
        Ok(Some(SourceSpec::new(terms)))
    }

    pub fn initial_data(&self) -> Result<Option<InitialData>> {
        match &self.initial {
            None => Ok(None),
            Some(i) => Ok(Some(InitialData::new(Profile::parse(&i.profile)?))),
        }
    }

    pub fn mass(&self) -> Result<Option<MassTreatment>> {
        match self.mesh.as_ref().and_then(|m| m.mass.as_deref()) {
            None => Ok(None),
            Some(s) => parse_mass(s).map(Some),
        }
    }
}

pub fn parse_mass(s: &str) -> Result<MassTreatment> {
    match s {
        "lumped" => Ok(MassTreatment::Lumped),
        "galerkin" => Ok(MassTreatment::Galerkin),
        _ => Err(HarnessError::Config(format!("unknown mass treatment `{s}` (lumped|galerkin)"))),
    }
}
