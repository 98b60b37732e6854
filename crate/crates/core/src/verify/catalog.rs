//! JSON-lines group catalogs.
//!
//! Each line is an object with `name` and either `degree` plus `generators`
//! (0-based image arrays) or `builtin` (a family expression such as
//! `Wreath(Cyclic(2),Sym(3))`). Optional fields: `order` (checked on build)
//! and `tags`. Blank lines and lines starting with `#` are skipped.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::builtin::builtin_with;
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

/// The catalog shipped with the crate.
pub const DESK_CATALOG: &str = include_str!("../../catalog/desk.jsonl");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub tags: BTreeSet<String>,
}

impl CatalogEntry {
    pub fn from_builtin(expr: &str) -> Self {
        CatalogEntry {
            name: expr.to_string(),
            degree: None,
            generators: Vec::new(),
            builtin: Some(expr.to_string()),
            order: None,
            tags: BTreeSet::new(),
        }
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.name.trim().is_empty() {
            return Err("empty name".into());
        }
        match (&self.builtin, self.degree) {
            (Some(_), None) if self.generators.is_empty() => Ok(()),
            (Some(_), _) => Err("builtin entries take no degree or generators".into()),
            (None, None) => Err("missing degree".into()),
            (None, Some(0)) => Err("degree must be positive".into()),
            (None, Some(d)) => {
                for (i, g) in self.generators.iter().enumerate() {
                    if g.len() != d {
                        return Err(format!("generator {i} has length {}, expected {d}", g.len()));
                    }
                    Permutation::from_images(g.clone()).map_err(|e| format!("generator {i}: {e}"))?;
                }
                Ok(())
            }
        }
    }

    /// Builds the group; bare builtin names resolve against `others`.
    pub fn build_in(&self, others: &[CatalogEntry]) -> Result<PermGroup> {
        self.build_depth(others, 0)
    }

    pub fn build(&self) -> Result<PermGroup> {
        self.build_in(&[])
    }

    fn build_depth(&self, others: &[CatalogEntry], depth: usize) -> Result<PermGroup> {
        let group = match &self.builtin {
            Some(expr) => {
                let lookup = |name: &str| {
                    if depth > 8 {
                        return None;
                    }
                    others.iter().find(|e| e.name == name && e.name != self.name)?.build_depth(others, depth + 1).ok()
                };
                builtin_with(expr, &lookup)?.renamed(self.name.clone())
            }
            None => {
                let gens = self.generators.iter().map(|g| Permutation::from_images(g.clone())).collect::<Result<Vec<_>>>()?;
                PermGroup::new(self.name.clone(), self.degree.unwrap_or(1), gens)?
            }
        };
        if let Some(o) = self.order {
            if o != group.order() {
                return Err(Error::Precondition(format!("{}: stated order {o}, generated order {}", self.name, group.order())));
            }
        }
        Ok(group)
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::Catalog { line: i + 1, reason };
        let e: CatalogEntry = serde_json::from_str(t).map_err(|e| err(e.to_string()))?;
        e.validate().map_err(err)?;
        if out.iter().any(|o| o.name == e.name) {
            return Err(err(format!("duplicate name {}", e.name)));
        }
        out.push(e);
    }
    Ok(out)
}

/// Reads a catalog file. A path that does not exist but parses as a builtin
/// expression yields a one-entry catalog; `desk` names the shipped catalog.
pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>> {
    let path = path.as_ref();
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        return parse_catalog(&text);
    }
    let s = path.to_string_lossy();
    if s == "desk" {
        return desk_catalog();
    }
    match super::builtin::builtin(&s) {
        Ok(_) => Ok(vec![CatalogEntry::from_builtin(&s)]),
        Err(Error::UnknownGroup(_)) => Err(Error::Io(format!("{s}: no such file or builtin group"))),
        Err(e) => Err(e),
    }
}

pub fn desk_catalog() -> Result<Vec<CatalogEntry>> {
    parse_catalog(DESK_CATALOG)
}

/// Resolves a group argument: a builtin expression, a name in the desk
/// catalog, or a catalog file (its first entry).
pub fn resolve_group(arg: &str) -> Result<PermGroup> {
    let desk = desk_catalog()?;
    if let Some(e) = desk.iter().find(|e| e.name == arg) {
        return e.build_in(&desk);
    }
    let path = Path::new(arg);
    if path.exists() {
        let entries = load_catalog(path)?;
        let first = entries.first().ok_or_else(|| Error::Catalog { line: 0, reason: "empty catalog".into() })?;
        return first.build_in(&entries);
    }
    let lookup = |name: &str| desk.iter().find(|e| e.name == name)?.build_in(&desk).ok();
    builtin_with(arg, &lookup)
}
