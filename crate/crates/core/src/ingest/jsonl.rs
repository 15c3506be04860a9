//! Neutral one-record-per-line JSON corpus format.
//!
//! ```json
//! {"id": "doc1", "year": 2014, "entities": [
//!     {"institution": "A", "country": "X", "authors": 3},
//!     {"institution": "B", "country": "Y", "authors": ["Park, S", "Choi, J"]}]}
//! ```
//!
//! A numeric `authors` value creates that many anonymous authors for the
//! entity. Named authors are shared across entities of the same record, so a
//! name listed under two entities is one author with two addresses.

use std::collections::{BTreeSet, HashSet};

use serde::Deserialize;

use super::address::Address;
use super::normalize::clean;
use super::record::{DocumentRecord, ParsedCorpus};
use crate::error::ParseError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRecord {
    id: String,
    year: Option<i32>,
    entities: Vec<JsonEntity>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEntity {
    institution: String,
    country: String,
    authors: JsonAuthors,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum JsonAuthors {
    Count(u32),
    Names(Vec<String>),
}

pub fn load_jsonl_corpus(text: &str) -> Result<ParsedCorpus, ParseError> {
    let mut corpus = ParsedCorpus::default();
    let mut seen = HashSet::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim_start_matches('\u{feff}').trim();
        if line.is_empty() {
            continue;
        }
        let parsed: JsonRecord = serde_json::from_str(line).map_err(|source| ParseError::Json {
            line: lineno,
            source,
        })?;
        if parsed.id.trim().is_empty() {
            return Err(ParseError::Schema {
                line: lineno,
                message: "empty id".into(),
            });
        }
        if !seen.insert(parsed.id.clone()) {
            return Err(ParseError::DuplicateId {
                line: lineno,
                id: parsed.id,
            });
        }
        corpus.records.push(build(parsed));
    }
    Ok(corpus)
}

fn build(parsed: JsonRecord) -> DocumentRecord {
    let mut authors: Vec<String> = Vec::new();
    let mut addresses = Vec::with_capacity(parsed.entities.len());
    for (e, entity) in parsed.entities.into_iter().enumerate() {
        let mut indices = BTreeSet::new();
        match entity.authors {
            JsonAuthors::Count(n) => {
                for k in 0..n {
                    indices.insert(authors.len());
                    authors.push(format!("{}#{}.{}", parsed.id, e + 1, k + 1));
                }
            }
            JsonAuthors::Names(names) => {
                for name in names {
                    let i = match authors.iter().position(|a| *a == name) {
                        Some(i) => i,
                        None => {
                            authors.push(name);
                            authors.len() - 1
                        }
                    };
                    indices.insert(i);
                }
            }
        }
        let institution = clean(&entity.institution);
        let country = clean(&entity.country);
        let usable = !institution.is_empty() && !country.is_empty() && !indices.is_empty();
        addresses.push(Address {
            raw_text: format!("{}, {}", entity.institution, entity.country),
            institution,
            country,
            author_indices: Some(indices),
            usable,
        });
    }
    DocumentRecord {
        id: parsed.id,
        year: parsed.year,
        authors,
        addresses,
    }
}
