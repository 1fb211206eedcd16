//! The ring file format.
//!
//! A ring file is one compact JSON object followed by a newline, with the keys
//! in the order `name, size, add, mul, zero, one, star, labels`. Saving a loaded
//! file reproduces it byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use ringinv_core::{FiniteRing, RingError, RingTables, DEFAULT_SIZE_CAP};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Overrides [`DEFAULT_SIZE_CAP`] for constructors and the loader.
pub const SIZE_CAP_ENV: &str = "RINGINV_SIZE_CAP";

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path} is not a ring file")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path} is not a valid ring")]
    Ring { path: PathBuf, source: RingError },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    name: String,
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: Option<usize>,
    star: Option<Vec<usize>>,
    labels: Vec<String>,
}

/// The size cap from the environment, or the default.
pub fn size_cap() -> usize {
    std::env::var(SIZE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_CAP)
}

pub fn to_json(ring: &FiniteRing) -> String {
    let t = ring.to_tables();
    let file = RingFile {
        name: t.name,
        size: t.size,
        add: t.add,
        mul: t.mul,
        zero: t.zero,
        one: t.one,
        star: t.star,
        labels: t.labels,
    };
    let mut out = serde_json::to_string(&file).expect("ring tables serialize");
    out.push('\n');
    out
}

/// Parses and fully re-validates a ring file.
pub fn from_json(text: &str, cap: usize) -> Result<FiniteRing, ParseError> {
    let f: RingFile = serde_json::from_str(text).map_err(ParseError::Json)?;
    if f.size > cap {
        return Err(ParseError::Ring(RingError::SizeCap { size: f.size, cap }));
    }
    let tables = RingTables {
        name: f.name,
        size: f.size,
        add: f.add,
        mul: f.mul,
        zero: f.zero,
        one: f.one,
        star: f.star,
        labels: f.labels,
    };
    FiniteRing::from_tables(&tables).map_err(ParseError::Ring)
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error(transparent)]
    Json(serde_json::Error),
    #[error(transparent)]
    Ring(RingError),
}

pub fn load(path: &Path) -> Result<FiniteRing, LoadError> {
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.into(), source })?;
    from_json(&text, size_cap()).map_err(|e| match e {
        ParseError::Json(source) => LoadError::Json { path: path.into(), source },
        ParseError::Ring(source) => LoadError::Ring { path: path.into(), source },
    })
}

pub fn save(ring: &FiniteRing, path: &Path) -> std::io::Result<()> {
    fs::write(path, to_json(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringinv_core::make_zmod;

    #[test]
    fn key_order_and_trailing_newline() {
        let text = to_json(&make_zmod(2).unwrap());
        assert_eq!(
            text,
            "{\"name\":\"Z2\",\"size\":2,\"add\":[[0,1],[1,0]],\"mul\":[[0,0],[0,1]],\
             \"zero\":0,\"one\":1,\"star\":null,\"labels\":[\"0\",\"1\"]}\n"
        );
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = to_json(&make_zmod(2).unwrap()).replace("\"zero\"", "\"extra\":1,\"zero\"");
        assert!(matches!(from_json(&text, 16), Err(ParseError::Json(_))));
    }

    #[test]
    fn cap_applies_before_validation() {
        let text = to_json(&make_zmod(5).unwrap());
        assert!(matches!(from_json(&text, 4), Err(ParseError::Ring(RingError::SizeCap { size: 5, cap: 4 }))));
    }
}
