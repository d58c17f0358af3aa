//! Imported literature values.
//!
//! The catalogue is a JSON array of records
//! `{family, params, polarization, value | bounds, citation}`. Two families
//! are understood: `veronese` (the split model `(P^n, O(pd))`, params `n`)
//! and `brauer_severi` (a twisted form, params `dim` and `period`).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Environment variable consulted when no `--catalog` path is given.
pub const CATALOG_ENV: &str = "ULRICH_CATALOG";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Polarization {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equals: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiple_of: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub not_multiple_of: Vec<u64>,
}

impl Polarization {
    pub fn matches(&self, pd: u64) -> bool {
        self.equals.is_none_or(|e| e == pd)
            && self.multiple_of.is_none_or(|m| pd.is_multiple_of(m))
            && self.not_multiple_of.iter().all(|&m| !pd.is_multiple_of(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordBounds {
    pub lower: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    #[serde(default)]
    pub polarization: Polarization,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<RecordBounds>,
    pub citation: String,
}

impl Record {
    fn check(&self, i: usize) -> Result<(), Error> {
        let fail = |msg: String| Err(Error::Validation(format!("catalogue record {i}: {msg}")));
        let required: &[&str] = match self.family.as_str() {
            "veronese" => &["n"],
            "brauer_severi" => &["dim", "period"],
            other => return fail(format!("unknown family {other:?}")),
        };
        for key in required {
            if !self.params.contains_key(*key) {
                return fail(format!("missing parameter {key:?}"));
            }
        }
        if let Some(extra) = self.params.keys().find(|k| !required.contains(&k.as_str())) {
            return fail(format!("unexpected parameter {extra:?}"));
        }
        match (&self.value, &self.bounds) {
            (Some(0), _) => return fail(String::from("value must be positive")),
            (Some(_), None) => {}
            (None, Some(b)) => {
                if b.lower == 0 || b.upper.is_some_and(|u| u < b.lower) {
                    return fail(String::from("bounds must satisfy 1 <= lower <= upper"));
                }
            }
            _ => return fail(String::from("exactly one of value and bounds is required")),
        }
        let p = &self.polarization;
        if p.multiple_of == Some(0) || p.equals == Some(0) || p.not_multiple_of.contains(&0) {
            return fail(String::from("polarization constraints must be positive"));
        }
        if self.citation.trim().is_empty() {
            return fail(String::from("citation is empty"));
        }
        Ok(())
    }

    fn bounds_pair(&self) -> (u64, Option<u64>) {
        match (&self.value, &self.bounds) {
            (Some(v), _) => (*v, Some(*v)),
            (None, Some(b)) => (b.lower, b.upper),
            (None, None) => (1, None),
        }
    }
}

/// A loaded and validated catalogue.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalogue {
    pub source: Option<PathBuf>,
    pub records: Vec<Record>,
}

/// A catalogue hit: `(lower, upper)` and the citation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hit {
    pub lower: u64,
    pub upper: Option<u64>,
    pub citation: String,
}

impl Catalogue {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut de = serde_json::Deserializer::from_str(text);
        let records: Vec<Record> = serde_path_to_error::deserialize(&mut de).map_err(|e| Error::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
        for (i, r) in records.iter().enumerate() {
            r.check(i)?;
        }
        Ok(Catalogue {
            source: None,
            records,
        })
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            if e.kind() == std::io::ErrorKind::NotFound {
                Error::MissingCatalogue(format!("{} does not exist", path.display()))
            } else {
                Error::Io {
                    path: path.to_path_buf(),
                    source: e,
                }
            }
        })?;
        let mut c = Self::parse(&text)?;
        c.source = Some(path.to_path_buf());
        Ok(c)
    }

    /// Resolve the catalogue from an explicit path, else `ULRICH_CATALOG`.
    ///
    /// `Ok(None)` when neither is set; a path that is set but missing is an
    /// error.
    pub fn resolve(explicit: Option<&Path>) -> Result<Option<Self>, Error> {
        let path = match explicit {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os(CATALOG_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from),
        };
        path.map(|p| Self::load(&p)).transpose()
    }

    fn find(&self, family: &str, params: &[(&str, u64)], pd: u64) -> Option<Hit> {
        self.records
            .iter()
            .find(|r| {
                r.family == family
                    && params.iter().all(|(k, v)| r.params.get(*k) == Some(v))
                    && r.polarization.matches(pd)
            })
            .map(|r| {
                let (lower, upper) = r.bounds_pair();
                Hit {
                    lower,
                    upper,
                    citation: r.citation.clone(),
                }
            })
    }

    /// Exact `uc(P^n, O(pd))` when catalogued.
    pub fn veronese_value(&self, n: u64, pd: u64) -> Option<Hit> {
        self.find("veronese", &[("n", n)], pd).filter(|h| h.upper == Some(h.lower))
    }

    /// Imported bounds for a twisted Brauer–Severi variety.
    pub fn brauer_severi_bounds(&self, dim: u64, period: u64, pd: u64) -> Option<Hit> {
        self.find("brauer_severi", &[("dim", dim), ("period", period)], pd)
    }
}
