//! Locating and loading structure-constant files.

use std::path::Path;

use braidkit::format::AlgebraFile;
use braidkit::hopf::{Algebra, Bialgebra};
use braidkit::{Error, Field, Result};

const BUNDLED: [(&str, &str); 4] = [
    ("kz2", include_str!("../../core/fixtures/kz2.json")),
    ("kz4", include_str!("../../core/fixtures/kz4.json")),
    ("sweedler4", include_str!("../../core/fixtures/sweedler4.json")),
    ("monoid2", include_str!("../../core/fixtures/monoid2.json")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

/// Reads `path`; a missing path named like a bundled fixture (`kz2`,
/// `kz2.json`) falls back to the bundled copy.
pub fn read_source(path: &str) -> Result<(String, String)> {
    let p = Path::new(path);
    if p.exists() {
        let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        return Ok((path.to_string(), text));
    }
    let stem = p.file_name().and_then(|s| s.to_str()).map(|s| s.trim_end_matches(".json")).unwrap_or(path);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(n, t)| (format!("bundled:{n}"), t.to_string()))
        .ok_or_else(|| Error::Parse(format!("{path}: no such file; bundled: {}", bundled_names().join(", "))))
}

/// Field precedence: command-line flag, then `BRAIDKIT_FIELD`, then the file.
pub fn target_field(flag: Option<&str>, file: Field) -> Result<Field> {
    match flag.map(str::to_string).or_else(|| std::env::var("BRAIDKIT_FIELD").ok().filter(|s| !s.trim().is_empty())) {
        Some(s) => s.parse(),
        None => Ok(file),
    }
}

pub struct Loaded {
    pub origin: String,
    pub file: AlgebraFile,
}

impl Loaded {
    pub fn field(&self) -> Field {
        self.file.field
    }

    pub fn bialgebra(&self, checked: bool) -> Result<Bialgebra> {
        self.file.bialgebra(checked).map_err(|e| located(&self.origin, e))
    }

    pub fn algebra(&self, checked: bool) -> Result<Algebra> {
        self.file.algebra(checked).map_err(|e| located(&self.origin, e))
    }
}

fn located(origin: &str, e: Error) -> Error {
    match e {
        Error::Axiom(s) => Error::Axiom(format!("{origin}: {s}")),
        Error::Parse(s) => Error::Parse(format!("{origin}: {s}")),
        other => other,
    }
}

pub fn load(path: &str, field: Option<&str>) -> Result<Loaded> {
    let (origin, text) = read_source(path)?;
    let file = AlgebraFile::parse(&text).map_err(|e| located(&origin, e))?;
    let target = target_field(field, file.field)?;
    let file = file.in_field(target).map_err(|e| located(&origin, e))?;
    Ok(Loaded { origin, file })
}
