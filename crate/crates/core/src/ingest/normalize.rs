//! Entity canonicalization tables.
//!
//! Lookup keys are case-folded and whitespace-collapsed; canonical values are
//! stored in cleaned form so that normalizing a canonical string returns it
//! unchanged.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Country,
    Institution,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Country => "country",
            Level::Institution => "institution",
        })
    }
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "country" => Ok(Level::Country),
            "institution" => Ok(Level::Institution),
            other => Err(format!("unknown level `{other}`")),
        }
    }
}

const DEFAULT_COUNTRIES: &[(&str, &str)] = &[
    ("england", "UK"),
    ("scotland", "UK"),
    ("wales", "UK"),
    ("north ireland", "UK"),
    ("northern ireland", "UK"),
    ("uk", "UK"),
    ("usa", "USA"),
    ("south korea", "South Korea"),
    ("korea", "South Korea"),
    ("republic of korea", "South Korea"),
    ("peoples r china", "Peoples R China"),
    ("taiwan", "Taiwan"),
    ("japan", "Japan"),
    ("u arab emirates", "U Arab Emirates"),
];

/// Strips trailing punctuation and collapses internal whitespace.
pub fn clean(raw: &str) -> String {
    let collapsed = raw.split_whitespace().collect::<Vec<_>>().join(" ");
    collapsed
        .trim_end_matches(|c: char| matches!(c, '.' | ',' | ';' | ':') || c.is_whitespace())
        .to_string()
}

fn key(raw: &str) -> String {
    clean(raw).to_lowercase()
}

/// Raw-to-canonical mapping for one entity level.
#[derive(Debug, Clone)]
pub struct NormalizationTable {
    scope: Level,
    map: HashMap<String, String>,
}

impl NormalizationTable {
    pub fn empty(scope: Level) -> Self {
        Self {
            scope,
            map: HashMap::new(),
        }
    }

    /// Built-in table: countries fold England/Scotland/Wales/North Ireland into
    /// "UK"; institutions start empty.
    pub fn default_for(scope: Level) -> Self {
        let mut table = Self::empty(scope);
        if scope == Level::Country {
            for (raw, canonical) in DEFAULT_COUNTRIES {
                table.insert(raw, canonical);
            }
        }
        table
    }

    pub fn scope(&self) -> Level {
        self.scope
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Adds `raw -> canonical`. The canonical form also maps to itself, and
    /// earlier entries pointing at `raw` are redirected, so lookups never chain.
    /// An entry that reverses an existing mapping replaces it.
    pub fn insert(&mut self, raw: &str, canonical: &str) {
        let mut target = self.normalize(canonical);
        let raw_key = key(raw);
        if key(&target) == raw_key {
            // the canonical currently resolves back to `raw`: it becomes the fixpoint
            target = clean(canonical);
        }
        if raw_key.is_empty() || target.is_empty() {
            return;
        }
        let old = self.map.get(&raw_key).cloned();
        self.map.insert(raw_key, target.clone());
        self.map.insert(key(&target), target.clone());
        if let Some(old) = old.filter(|o| *o != target) {
            // `old` was a fixpoint under this key; everything aimed at it moves
            if key(&old) == key(raw) {
                for value in self.map.values_mut() {
                    if *value == old {
                        *value = target.clone();
                    }
                }
            }
        }
    }

    /// Parses a `raw<TAB>canonical` table; blank lines and `#` comments are skipped.
    pub fn parse_tsv(scope: Level, text: &str) -> Result<Self, ParseError> {
        let mut table = Self::empty(scope);
        table.merge_tsv(text)?;
        Ok(table)
    }

    pub fn merge_tsv(&mut self, text: &str) -> Result<(), ParseError> {
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim_start_matches('\u{feff}');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            let raw = cols.next().unwrap_or_default();
            let canonical = cols.next().ok_or_else(|| ParseError::Table {
                line: idx + 1,
                message: "expected two tab-separated columns".into(),
            })?;
            if cols.next().is_some() {
                return Err(ParseError::Table {
                    line: idx + 1,
                    message: "more than two columns".into(),
                });
            }
            if clean(raw).is_empty() || clean(canonical).is_empty() {
                return Err(ParseError::Table {
                    line: idx + 1,
                    message: "empty raw or canonical value".into(),
                });
            }
            self.insert(raw, canonical);
        }
        Ok(())
    }

    /// Canonical form of `raw`: the mapped value, or the cleaned input when unmapped.
    pub fn normalize(&self, raw: &str) -> String {
        let cleaned = clean(raw);
        match self.map.get(&cleaned.to_lowercase()) {
            Some(canonical) => canonical.clone(),
            None => cleaned,
        }
    }
}

/// Free-function form of [`NormalizationTable::normalize`].
pub fn normalize_entity(raw: &str, table: &NormalizationTable) -> String {
    table.normalize(raw)
}

/// The pair of tables used when building matrices.
#[derive(Debug, Clone)]
pub struct Normalizer {
    pub country: NormalizationTable,
    pub institution: NormalizationTable,
}

impl Default for Normalizer {
    fn default() -> Self {
        Self {
            country: NormalizationTable::default_for(Level::Country),
            institution: NormalizationTable::default_for(Level::Institution),
        }
    }
}

impl Normalizer {
    pub fn table_mut(&mut self, level: Level) -> &mut NormalizationTable {
        match level {
            Level::Country => &mut self.country,
            Level::Institution => &mut self.institution,
        }
    }

    pub fn table(&self, level: Level) -> &NormalizationTable {
        match level {
            Level::Country => &self.country,
            Level::Institution => &self.institution,
        }
    }
}
