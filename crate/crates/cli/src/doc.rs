//! JSON document formats and their conversion to core types.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use eulerob_core::behrend::ConeComponent;
use eulerob_core::constructible::{EuEntry, EuMatrix, Provenance, StratifiedSpace, StratumSpec};

use crate::error::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumDoc {
    pub name: String,
    pub dim: u32,
    pub chi: i64,
    #[serde(default)]
    pub fixed: bool,
    /// Strata immediately below this one in the closure order.
    #[serde(default)]
    pub covers: Vec<String>,
}

/// Declared Euler obstruction of the closure of `of` along `on`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EuDoc {
    pub on: String,
    pub of: String,
    pub value: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub strata: Vec<StratumDoc>,
    #[serde(default)]
    pub eu: Vec<EuDoc>,
    /// Optional constructible function, by stratum name.
    #[serde(default)]
    pub function: Option<BTreeMap<String, i64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub support: String,
    pub dim: u32,
    pub mult: u64,
}

/// Either a bare list of components or `{"components": [...]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ConeDoc {
    List(Vec<ComponentDoc>),
    Object {
        components: Vec<ComponentDoc>,
    },
}

impl ConeDoc {
    pub fn components(&self) -> Vec<ConeComponent> {
        let list = match self {
            ConeDoc::List(l) => l,
            ConeDoc::Object { components } => components,
        };
        list.iter().map(|c| ConeComponent::new(&c.support, c.dim, c.mult)).collect()
    }
}

/// A point coordinate: an integer or a rational written as text.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    pub fn as_text(&self) -> String {
        match self {
            Coord::Int(i) => i.to_string(),
            Coord::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyPayload {
    pub poly: String,
    pub point: Vec<Coord>,
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    #[serde(default)]
    pub factors: Option<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratChiPayload {
    pub space: SpaceDoc,
    #[serde(default)]
    pub function: Option<BTreeMap<String, i64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformPayload {
    pub space: SpaceDoc,
    #[serde(default)]
    pub cycle: Option<BTreeMap<String, i64>>,
    #[serde(default)]
    pub function: Option<BTreeMap<String, i64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConePayload {
    pub space: SpaceDoc,
    pub cone: ConeDoc,
    #[serde(default)]
    pub fixed: Option<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmptyPayload {}

/// Top-level job: `kind` selects the payload schema.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDocument {
    pub kind: String,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub budget: Option<u64>,
    #[serde(default)]
    pub payload: serde_json::Value,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))
}

pub fn from_value<T: for<'de> Deserialize<'de>>(v: serde_json::Value, what: &str) -> Result<T, CliError> {
    let v = if v.is_null() { serde_json::Value::Object(Default::default()) } else { v };
    serde_json::from_value(v).map_err(|e| CliError::Schema(format!("{what}: {e}")))
}

impl SpaceDoc {
    pub fn build(&self) -> Result<(StratifiedSpace, EuMatrix), CliError> {
        let specs = self
            .strata
            .iter()
            .map(|s| {
                let covers: Vec<&str> = s.covers.iter().map(String::as_str).collect();
                StratumSpec::new(&s.name, s.dim, s.chi, s.fixed, &covers)
            })
            .collect();
        let space = StratifiedSpace::new(specs)?;
        let mut entries = Vec::with_capacity(self.eu.len());
        for e in &self.eu {
            entries.push(EuEntry {
                on: space.index_of(&e.on)?,
                of: space.index_of(&e.of)?,
                value: e.value,
                provenance: Provenance::Declared,
            });
        }
        let eu = EuMatrix::new(&space, &entries)?;
        Ok((space, eu))
    }
}

/// Values by stratum name; unnamed strata are 0.
pub fn by_name(space: &StratifiedSpace, map: &BTreeMap<String, i64>) -> Result<Vec<i64>, CliError> {
    let mut v = vec![0; space.len()];
    for (name, value) in map {
        v[space.index_of(name)?] = *value;
    }
    Ok(v)
}

/// `a=1,b=-2` as a name map.
pub fn parse_assignments(text: &str) -> Result<BTreeMap<String, i64>, CliError> {
    let mut out = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Schema(format!("expected name=value, got `{part}`")))?;
        let v: i64 = v.trim().parse().map_err(|_| CliError::Schema(format!("`{v}` is not an integer")))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            return Err(CliError::Schema(format!("`{}` assigned twice", k.trim())));
        }
    }
    Ok(out)
}

/// Comma-separated list, blanks dropped.
pub fn parse_list(text: &str) -> Vec<String> {
    text.split(',').map(str::trim).filter(|p| !p.is_empty()).map(String::from).collect()
}
