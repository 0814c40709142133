use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{EnumMode, FamilyError, FamilySpec, ParamEnumeration, Region};
use crate::carrier::{GroundSet, Predicate, Window};

/// `{"builtin": "<name>", "args": {...}}` or `{"pair": {...}}`, with an
/// optional `"enum": {"mode": ..., "bound": ...}` override.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub args: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairSpec>,
    #[serde(default, rename = "enum", skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub n: usize,
    pub k: usize,
    pub term: String,
    #[serde(default, rename = "R", skip_serializing_if = "Option::is_none")]
    pub region: Option<RegionSpec>,
    #[serde(default, rename = "enum", skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RegionSpec {
    All(String),
    PerParam(Vec<String>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerationSpec {
    pub mode: EnumMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
}

impl From<EnumerationSpec> for ParamEnumeration {
    fn from(e: EnumerationSpec) -> Self {
        ParamEnumeration {
            mode: e.mode,
            bound: e.bound,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AffineArgs {
    #[serde(default)]
    min_slope: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialArgs {
    #[serde(rename = "D")]
    degrees: Vec<u32>,
    #[serde(default)]
    d: Option<u32>,
    #[serde(default)]
    coeffs: Option<CoeffSpec>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffSpec {
    Predicate(String),
    Explicit(Vec<u64>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WordSuffixArgs {
    letter: String,
}

fn args<T: for<'de> Deserialize<'de>>(v: &Option<Value>, builtin: &str) -> Result<T, FamilyError> {
    let v = v.clone().unwrap_or(Value::Object(Default::default()));
    serde_path_to_error::deserialize(v)
        .map_err(|e| FamilyError::BadArgs(format!("{builtin}: args.{}: {}", e.path(), e.inner())))
}

impl FamilyJson {
    pub fn builtin(name: &str) -> Self {
        FamilyJson {
            builtin: Some(name.to_string()),
            args: None,
            pair: None,
            enumeration: None,
        }
    }

    /// Builds the family over `window`.
    pub fn build(&self, window: Arc<Window>) -> Result<FamilySpec, FamilyError> {
        let family = match (&self.builtin, &self.pair) {
            (Some(name), None) => self.build_builtin(name, window)?,
            (None, Some(pair)) => {
                let region = match &pair.region {
                    None => Region::all(),
                    Some(RegionSpec::All(p)) => Region(vec![p.parse::<Predicate>()?]),
                    Some(RegionSpec::PerParam(ps)) => Region(
                        ps.iter()
                            .map(|p| p.parse::<Predicate>())
                            .collect::<Result<_, _>>()?,
                    ),
                };
                let enumeration = pair.enumeration.map(Into::into).unwrap_or(ParamEnumeration {
                    mode: EnumMode::BoundedScan,
                    bound: None,
                });
                FamilySpec::from_pair(window, pair.n, pair.k, &pair.term, region, enumeration)?
            }
            _ => {
                return Err(FamilyError::BadArgs(
                    "exactly one of `builtin` and `pair` must be given".into(),
                ))
            }
        };
        Ok(match self.enumeration {
            Some(e) => family.with_enumeration(e.into()),
            None => family,
        })
    }

    fn build_builtin(&self, name: &str, window: Arc<Window>) -> Result<FamilySpec, FamilyError> {
        match name {
            "translations-right" => Ok(FamilySpec::right_translations(window)),
            "translations-left" => Ok(FamilySpec::left_translations(window)),
            "affine" => {
                let a: AffineArgs = args(&self.args, name)?;
                FamilySpec::affine_with_min_slope(window, a.min_slope.unwrap_or(1))
            }
            "geoarithmetic" => FamilySpec::geoarithmetic(window),
            "polynomial" => {
                let a: PolynomialArgs = args(&self.args, name)?;
                let degree = a
                    .d
                    .or_else(|| a.degrees.iter().copied().max())
                    .ok_or(FamilyError::EmptyDegrees)?;
                let coeff_window = Arc::new(Window::additive(window.bound())?);
                let coeffs = match a.coeffs {
                    None => GroundSet::full(coeff_window),
                    Some(CoeffSpec::Predicate(p)) => GroundSet::predicate(coeff_window, p.parse()?)?,
                    Some(CoeffSpec::Explicit(vals)) => {
                        let top = vals.iter().copied().max().unwrap_or(0).max(window.bound());
                        GroundSet::from_values(Arc::new(Window::additive(top)?), vals)?
                    }
                };
                FamilySpec::polynomial(window, coeffs, &a.degrees, degree)
            }
            "word-suffix" => {
                let a: WordSuffixArgs = args(&self.args, name)?;
                let mut chars = a.letter.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => FamilySpec::word_suffix(window, c),
                    _ => Err(FamilyError::BadArgs(format!(
                        "word-suffix: args.letter {:?} is not a single letter",
                        a.letter
                    ))),
                }
            }
            other => Err(FamilyError::UnknownBuiltin(other.to_string())),
        }
    }
}
