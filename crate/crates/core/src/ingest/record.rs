use serde::{Deserialize, Serialize};

use super::address::Address;
use super::normalize::{Level, Normalizer};

/// One publication with its byline affiliations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DocumentRecord {
    pub id: String,
    pub year: Option<i32>,
    pub authors: Vec<String>,
    pub addresses: Vec<Address>,
}

impl DocumentRecord {
    pub fn usable_addresses(&self) -> impl Iterator<Item = &Address> {
        self.addresses.iter().filter(|a| a.usable)
    }

    pub fn has_usable_address(&self) -> bool {
        self.addresses.iter().any(|a| a.usable)
    }

    pub fn entity(address: &Address, level: Level) -> &str {
        match level {
            Level::Country => &address.country,
            Level::Institution => &address.institution,
        }
    }

    /// Rewrites institution and country names through `normalizer`; an
    /// address that normalizes to an empty name is marked unusable.
    pub fn normalize(&mut self, normalizer: &Normalizer) {
        for address in self.addresses.iter_mut().filter(|a| a.usable) {
            address.institution = normalizer.institution.normalize(&address.institution);
            address.country = normalizer.country.normalize(&address.country);
            if address.institution.is_empty() || address.country.is_empty() {
                address.usable = false;
            }
        }
    }
}

/// Non-fatal problem found while reading a record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseWarning {
    pub record: String,
    pub line: usize,
    pub message: String,
}

/// Records plus the warnings raised while reading them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParsedCorpus {
    pub records: Vec<DocumentRecord>,
    pub warnings: Vec<ParseWarning>,
}

impl ParsedCorpus {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn normalize(&mut self, normalizer: &Normalizer) {
        for record in &mut self.records {
            record.normalize(normalizer);
        }
    }
}
