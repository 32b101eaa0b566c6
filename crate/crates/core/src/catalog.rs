//! Named t-vectors shipped with the crate, plus loading of user catalogs in
//! the same JSON format.

use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tvector::{RealizabilityClass, TVector};

pub const CATALOG_VERSION: u32 = 1;

const BUILTIN_JSON: &str = include_str!("../data/catalog.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    /// A known arrangement in its class.
    Genuine,
    /// Combinatorics only; ruled out by some inequality.
    Eliminated,
    /// A fixed-`d` member of a near-pencil family.
    NearPencil,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryKind::Genuine => "genuine",
            EntryKind::Eliminated => "combinatorics only, eliminated",
            EntryKind::NearPencil => "near-pencil",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub class: RealizabilityClass,
    pub tv: TVector,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Parses and validates: known version, unique names, and the
    /// combinatorial identity for every genuine arrangement.
    pub fn from_json(text: &str) -> Result<Self> {
        let cat: Catalog = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        if cat.version != CATALOG_VERSION {
            return Err(Error::Catalog(format!(
                "unsupported version {} (expected {CATALOG_VERSION})",
                cat.version
            )));
        }
        for (i, e) in cat.entries.iter().enumerate() {
            if cat.entries[..i].iter().any(|o| o.name == e.name) {
                return Err(Error::Catalog(format!("duplicate entry {:?}", e.name)));
            }
            if e.kind == EntryKind::Genuine && !e.tv.check_identity() {
                return Err(Error::Catalog(format!(
                    "{:?} is marked genuine but {} fails the identity",
                    e.name, e.tv
                )));
            }
        }
        Ok(cat)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn builtin() -> &'static Catalog {
        static BUILTIN: OnceLock<Catalog> = OnceLock::new();
        BUILTIN.get_or_init(|| Catalog::from_json(BUILTIN_JSON).expect("built-in catalog is valid"))
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownEntry {
                name: name.to_owned(),
                available: self.names(),
            })
    }

    pub fn list(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Entry from the built-in catalog.
pub fn get(name: &str) -> Result<&'static CatalogEntry> {
    Catalog::builtin().get(name)
}

/// All built-in entries in file order.
pub fn list() -> &'static [CatalogEntry] {
    Catalog::builtin().list()
}
