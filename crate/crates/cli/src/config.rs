//! Job configuration: a JSON document with exact rationals as strings.

use serde::{Deserialize, Serialize};
use sodlab_core::kernel::{parse_rational, TwistData};
use sodlab_core::partition::{Mode, ShiftProfile};
use sodlab_core::rep::RepSpec;
use sodlab_core::roots::{GroupTag, RootDatum};
use sodlab_core::sod::{default_epsilon, parse_preset, preset, Family};
use sodlab_core::{Rational, RationalVector, SodError};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    /// Preset family such as `pfaffian:n=1,h=3`; supplies group,
    /// representation, `ε` and genericity unless given explicitly.
    #[serde(default)]
    pub preset: Option<String>,
    /// Group tag such as `Sp(4)`, `GL(2)`, `Torus(1)` or `Product(SL(2),Torus(1))`.
    #[serde(default)]
    pub group: Option<String>,
    #[serde(default)]
    pub representation: Option<Construction>,
    /// Weyl-invariant shift `ν`; zero when absent.
    #[serde(default)]
    pub shift: Option<Vec<String>>,
    /// `ε` for the `λ = 0` certificate; a default is chosen when absent.
    #[serde(default)]
    pub epsilon: Option<Vec<String>>,
    #[serde(default)]
    pub twist: Option<TwistConfig>,
    #[serde(default = "default_r_max")]
    pub r_max: String,
    #[serde(default = "default_box", rename = "box")]
    pub box_radius: i64,
    #[serde(default)]
    pub mode: ModeConfig,
    /// Genericity of the coinvariant representation when the Levi has roots.
    #[serde(default)]
    pub genericity_assertion: Option<bool>,
    #[serde(default = "default_degree")]
    pub degree_bound: usize,
    /// Components whose Hom blocks are tabulated; the last component when
    /// absent.
    #[serde(default)]
    pub hilbert_components: Option<Vec<usize>>,
}

fn default_r_max() -> String {
    "2".into()
}

fn default_box() -> i64 {
    4
}

fn default_degree() -> usize {
    6
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeConfig {
    #[default]
    Standard,
    QuasiSymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistConfig {
    /// Columns spanning a full-rank sublattice of ℤⁿ.
    pub columns: Vec<Vec<i64>>,
    #[serde(default)]
    pub offset: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightEntry {
    pub weight: Vec<String>,
    #[serde(default = "one")]
    pub mult: usize,
}

fn one() -> usize {
    1
}

/// A representation, either listed or built from the standard one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    Weights(Vec<WeightEntry>),
    /// The defining representation of the (first) simple factor.
    Standard,
    Trivial,
    Dual(Box<Construction>),
    Power { of: Box<Construction>, h: usize },
    SymPower { of: Box<Construction>, d: usize },
    Sum(Vec<Construction>),
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed configuration: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] SodError),
}

/// Everything the pipeline needs, with exact data.
#[derive(Clone, Debug)]
pub struct ResolvedJob {
    pub config: JobConfig,
    pub tag: GroupTag,
    pub datum: RootDatum,
    pub rep: RepSpec,
    pub profile: ShiftProfile,
    pub epsilon: RationalVector,
    pub epsilon_given: bool,
    pub twist: Option<TwistData>,
    pub r_max: Rational,
    pub family: Option<Family>,
}

pub fn parse_vector(entries: &[String], rank: usize) -> Result<RationalVector, SodError> {
    if entries.len() != rank {
        return Err(SodError::DimensionMismatch { expected: rank, found: entries.len() });
    }
    entries.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>().map(RationalVector)
}

fn build(c: &Construction, tag: &GroupTag) -> Result<RepSpec, SodError> {
    let rank = tag.rank();
    Ok(match c {
        Construction::Weights(ws) => {
            let mut list = Vec::with_capacity(ws.len());
            for w in ws {
                list.push((parse_vector(&w.weight, rank)?, w.mult));
            }
            RepSpec::new(rank, list)?
        }
        Construction::Standard => RepSpec::standard(tag, 0, rank)?,
        Construction::Trivial => RepSpec::trivial(rank),
        Construction::Dual(x) => build(x, tag)?.dual(),
        Construction::Power { of, h } => build(of, tag)?.power(*h),
        Construction::SymPower { of, d } => build(of, tag)?.sym_power(*d),
        Construction::Sum(xs) => {
            let mut acc = RepSpec::zero(rank);
            for x in xs {
                acc = acc.direct_sum(&build(x, tag)?)?;
            }
            acc
        }
    })
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<JobConfig, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<JobConfig, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        JobConfig::from_json(&text)
    }

    /// Validates and builds the exact job data.
    pub fn resolve(&self) -> Result<ResolvedJob, SodError> {
        let family = self.preset.as_deref().map(parse_preset).transpose()?;
        let built = family.as_ref().map(preset).transpose()?;
        let tag = match (&self.group, &built) {
            (Some(g), _) => GroupTag::parse(g)?,
            (None, Some(p)) => p.tag.clone(),
            (None, None) => return Err(SodError::InvalidParameters("a group or a preset is required".into())),
        };
        let datum = RootDatum::build(&tag)?;
        let rank = datum.rank();
        let rep = match (&self.representation, &built) {
            (Some(c), _) => build(c, &tag)?,
            (None, Some(p)) if p.tag == tag => p.rep.clone(),
            (None, Some(_)) => {
                return Err(SodError::InvalidParameters(
                    "an explicit group needs an explicit representation when it differs from the preset group".into(),
                ))
            }
            (None, None) => return Err(SodError::InvalidParameters("a representation or a preset is required".into())),
        };
        let nu = match &self.shift {
            Some(s) => parse_vector(s, rank)?,
            None => RationalVector::zeros(rank),
        };
        let mode = match self.mode {
            ModeConfig::Standard => Mode::Standard,
            ModeConfig::QuasiSymmetric => Mode::QuasiSymmetric,
        };
        let profile = ShiftProfile { nu_global: nu, mode };
        profile.validate(&datum, &rep)?;
        let (epsilon, epsilon_given) = match (&self.epsilon, &built) {
            (Some(e), _) => (parse_vector(e, rank)?, true),
            (None, Some(p)) if p.tag == tag && p.rep == rep => (p.epsilon.clone(), false),
            _ => (default_epsilon(&datum, rep.weights()), false),
        };
        let twist = match &self.twist {
            Some(t) => {
                let offset = t.offset.clone().unwrap_or_else(|| vec![0; rank]);
                let data = TwistData::new(t.columns.clone(), offset)?;
                if data.dim() != rank {
                    return Err(SodError::DimensionMismatch { expected: rank, found: data.dim() });
                }
                Some(data)
            }
            None => None,
        };
        let r_max = parse_rational(&self.r_max)?;
        if self.box_radius < 0 {
            return Err(SodError::InvalidParameters(format!("box radius must be nonnegative, got {}", self.box_radius)));
        }
        let mut config = self.clone();
        if config.genericity_assertion.is_none() {
            config.genericity_assertion = built.as_ref().and_then(|p| p.genericity);
        }
        Ok(ResolvedJob { config, tag, datum, rep, profile, epsilon, epsilon_given, twist, r_max, family })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_only() {
        let c = JobConfig { preset: Some("pfaffian:n=1,h=3".into()), ..JobConfig::from_json("{}").unwrap() };
        let j = c.resolve().unwrap();
        assert_eq!(j.rep.dim(), 6);
        assert_eq!(j.config.genericity_assertion, Some(true));
        assert_eq!(j.config.box_radius, 4);
    }

    #[test]
    fn constructions() {
        let text = r#"{
            "group": "SL(2)",
            "representation": {"sum": [{"sym_power": {"of": "standard", "d": 3}}, "trivial"]},
            "r_max": "3/2"
        }"#;
        let j = JobConfig::from_json(text).unwrap().resolve().unwrap();
        assert_eq!(j.rep.dim(), 5);
        assert_eq!(j.r_max, Rational::new(3.into(), 2.into()));
        let text = r#"{"group": "Torus(1)", "representation": {"weights": [{"weight": ["1"], "mult": 2}, {"weight": ["-1"], "mult": 2}]}}"#;
        assert_eq!(JobConfig::from_json(text).unwrap().resolve().unwrap().rep.dim(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(JobConfig::from_json(r#"{"group": "Sp(2)", "colour": 1}"#).is_err());
        let c = JobConfig::from_json(r#"{"group": "Sp(2)", "representation": "standard", "shift": ["1/0"]}"#).unwrap();
        assert!(c.resolve().is_err());
        let c = JobConfig::from_json(r#"{"group": "SL(2)", "representation": "standard", "shift": ["1"]}"#).unwrap();
        assert!(matches!(c.resolve(), Err(SodError::NotInvariant(_))));
    }
}
