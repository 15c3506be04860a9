use std::collections::BTreeSet;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

static US_STATE_ZIP: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^(?:[A-Z]{2}\s+)?(?:\d{5}(?:-\d{4})?\s+)?USA$").unwrap());

/// One affiliation line of a record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Address {
    pub institution: String,
    pub country: String,
    /// Positions in the record's author list; `None` when the line carried no
    /// bracketed author names.
    pub author_indices: Option<BTreeSet<usize>>,
    pub raw_text: String,
    /// False when the line could not yield both an institution and a country.
    pub usable: bool,
}

impl Address {
    pub fn unusable(raw: &str) -> Self {
        Self {
            institution: String::new(),
            country: String::new(),
            author_indices: None,
            raw_text: raw.to_string(),
            usable: false,
        }
    }
}

/// Syntactic pieces of a C1 entry before author names are resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddressParts {
    pub names: Option<Vec<String>>,
    pub institution: String,
    pub country: String,
}

/// Splits `[Name; Name] Inst, Dept, City, Country.` into its parts. Returns
/// `None` when fewer than two comma segments follow the bracket.
pub fn split_address(raw: &str) -> Option<AddressParts> {
    let text = raw.trim();
    let (names, rest) = match text.strip_prefix('[') {
        Some(inner) => {
            let close = inner.find(']')?;
            let names = inner[..close]
                .split(';')
                .map(|n| n.split_whitespace().collect::<Vec<_>>().join(" "))
                .filter(|n| !n.is_empty())
                .collect::<Vec<_>>();
            (Some(names), inner[close + 1..].trim())
        }
        None => (None, text),
    };

    let segments: Vec<&str> = rest.split(',').map(str::trim).collect();
    if segments.len() < 2 {
        return None;
    }
    let institution = segments[0].to_string();
    let last = segments[segments.len() - 1].trim_end_matches('.').trim();
    let country = if US_STATE_ZIP.is_match(last) {
        "USA".to_string()
    } else {
        last.to_string()
    };
    if institution.is_empty() || country.is_empty() {
        return None;
    }
    Some(AddressParts {
        names,
        institution,
        country,
    })
}

/// Outcome of [`parse_address`]: the address plus any bracketed names that
/// matched no author of the record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedAddress {
    pub address: Address,
    pub unmatched: Vec<String>,
}

/// Parses one C1 entry and links bracketed names to positions in `authors`
/// by exact match. `alternates` is a parallel name list (e.g. the abbreviated
/// AU names when `authors` holds AF names) tried when the primary list misses.
pub fn parse_address(raw: &str, authors: &[String], alternates: &[String]) -> ParsedAddress {
    let Some(parts) = split_address(raw) else {
        return ParsedAddress {
            address: Address::unusable(raw),
            unmatched: Vec::new(),
        };
    };
    let mut unmatched = Vec::new();
    let author_indices = parts.names.map(|names| {
        let mut indices = BTreeSet::new();
        for name in names {
            let hit = authors
                .iter()
                .position(|a| *a == name)
                .or_else(|| alternates.iter().position(|a| *a == name))
                .filter(|&i| i < authors.len());
            match hit {
                Some(i) => {
                    indices.insert(i);
                }
                None => unmatched.push(name),
            }
        }
        indices
    });
    ParsedAddress {
        address: Address {
            institution: parts.institution,
            country: parts.country,
            author_indices,
            raw_text: raw.to_string(),
            usable: true,
        },
        unmatched,
    }
}
