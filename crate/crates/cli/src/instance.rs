//! JSON instance files: a semigroup, an optional congruence and any number of
//! named cubic fuzzy sets.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use rough_cpfs::algebra::{AlgebraError, CongruencePartition, Element, FiniteSemigroup};
use rough_cpfs::cpfs::{CpfsError, CubicFuzzySet, RawGrade};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupSection {
    pub order: usize,
    pub table: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CongruenceSection {
    pub classes: Vec<Vec<i64>>,
}

/// The file as written, before validation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub semigroup: SemigroupSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub congruence: Option<CongruenceSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cpfs: BTreeMap<String, Vec<RawGrade>>,
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format_version {0} (this tool reads version {FORMAT_VERSION})")]
    Version(u32),
    #[error("names: {0}")]
    Names(String),
    #[error("semigroup: {0}")]
    Semigroup(AlgebraError),
    #[error("congruence: {0}")]
    Congruence(AlgebraError),
    #[error("cpfs.{name}: {error}")]
    Cpfs { name: String, error: CpfsError },
    #[error("the instance has no congruence section")]
    NoCongruence,
    #[error("no cpfs named `{0}`")]
    UnknownSet(String),
}

/// Element aliases, for output only.
#[derive(Debug, Clone, Default)]
pub struct Names(Option<Vec<String>>);

impl Names {
    pub fn label(&self, e: Element) -> ElementLabel<'_> {
        ElementLabel {
            element: e,
            alias: self.0.as_ref().map(|n| n[e].as_str()),
        }
    }

    pub fn to_option(&self) -> Option<Vec<String>> {
        self.0.clone()
    }
}

pub struct ElementLabel<'a> {
    element: Element,
    alias: Option<&'a str>,
}

impl fmt::Display for ElementLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alias {
            Some(a) => write!(f, "{} ({a})", self.element),
            None => write!(f, "{}", self.element),
        }
    }
}

/// A validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub names: Names,
    pub semigroup: FiniteSemigroup,
    pub congruence: Option<CongruencePartition>,
    pub sets: BTreeMap<String, CubicFuzzySet>,
}

impl Instance {
    pub fn congruence(&self) -> Result<&CongruencePartition, InstanceError> {
        self.congruence.as_ref().ok_or(InstanceError::NoCongruence)
    }

    pub fn set(&self, name: &str) -> Result<&CubicFuzzySet, InstanceError> {
        self.sets
            .get(name)
            .ok_or_else(|| InstanceError::UnknownSet(name.to_string()))
    }
}

pub fn parse(text: &str) -> Result<InstanceFile, InstanceError> {
    serde_json::from_str(text).map_err(|e| InstanceError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn load(path: &Path) -> Result<Instance, InstanceError> {
    let text = std::fs::read_to_string(path).map_err(|source| InstanceError::Io {
        path: path.display().to_string(),
        source,
    })?;
    validate(parse(&text)?)
}

pub fn validate(file: InstanceFile) -> Result<Instance, InstanceError> {
    if file.format_version != FORMAT_VERSION {
        return Err(InstanceError::Version(file.format_version));
    }
    let n = file.semigroup.order;
    let semigroup =
        FiniteSemigroup::validate(n, &file.semigroup.table).map_err(InstanceError::Semigroup)?;
    if let Some(names) = &file.names {
        if names.len() != n {
            return Err(InstanceError::Names(format!(
                "expected {n} names, found {}",
                names.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(InstanceError::Names(format!("`{a}` is used twice")));
            }
        }
    }
    let congruence = file
        .congruence
        .as_ref()
        .map(|c| CongruencePartition::validate(&semigroup, &c.classes))
        .transpose()
        .map_err(InstanceError::Congruence)?;
    let sets = file
        .cpfs
        .iter()
        .map(|(name, grades)| {
            CubicFuzzySet::validate(n, grades)
                .map(|p| (name.clone(), p))
                .map_err(|error| InstanceError::Cpfs {
                    name: name.clone(),
                    error,
                })
        })
        .collect::<Result<_, _>>()?;
    Ok(Instance {
        names: Names(file.names),
        semigroup,
        congruence,
        sets,
    })
}

/// Rounds to the nine decimals used in all printed output.
pub fn round9(v: f64) -> f64 {
    (v * 1e9).round() / 1e9
}

pub fn rounded(g: &RawGrade) -> RawGrade {
    RawGrade {
        im: g.im.map(round9),
        inm: g.inm.map(round9),
        m: round9(g.m),
        nm: round9(g.nm),
    }
}

/// An instance file carrying `sets` (rounded to nine decimals) on the same
/// semigroup and congruence as `instance`.
pub fn to_file(instance: &Instance, sets: &[(String, &CubicFuzzySet)]) -> InstanceFile {
    let s = &instance.semigroup;
    InstanceFile {
        format_version: FORMAT_VERSION,
        names: instance.names.to_option(),
        semigroup: SemigroupSection {
            order: s.order(),
            table: s
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|e| e as i64).collect())
                .collect(),
        },
        congruence: instance.congruence.as_ref().map(|w| CongruenceSection {
            classes: w
                .classes()
                .iter()
                .map(|c| c.iter().map(|&e| e as i64).collect())
                .collect(),
        }),
        cpfs: sets
            .iter()
            .map(|(name, p)| (name.clone(), p.to_raw().iter().map(rounded).collect()))
            .collect(),
    }
}
