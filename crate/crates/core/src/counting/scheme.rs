use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;

/// How one document's author counts become link weights between entities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CountingScheme {
    /// 1 iff at least one document links the pair.
    Binary,
    /// Product of the two entities' author counts, summed over documents.
    IntegerLinks,
    /// Number of documents in which both entities appear.
    CoPresence,
    /// Smaller of the two author counts, summed over documents.
    MinOverlap,
    /// Product of author counts over twice the document's total link count,
    /// so that each multi-entity document carries a mass of exactly one.
    FractionalLinks,
}

impl CountingScheme {
    pub const ALL: [CountingScheme; 5] = [
        CountingScheme::Binary,
        CountingScheme::IntegerLinks,
        CountingScheme::CoPresence,
        CountingScheme::MinOverlap,
        CountingScheme::FractionalLinks,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CountingScheme::Binary => "BINARY",
            CountingScheme::IntegerLinks => "INTEGER_LINKS",
            CountingScheme::CoPresence => "CO_PRESENCE",
            CountingScheme::MinOverlap => "MIN_OVERLAP",
            CountingScheme::FractionalLinks => "FRACTIONAL_LINKS",
        }
    }
}

impl fmt::Display for CountingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountingScheme {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|scheme| scheme.as_str() == s)
            .ok_or_else(|| AnalysisError::UnknownScheme(s.to_string()))
    }
}

/// How one document's single unit of credit is divided among entities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CreditScheme {
    /// Every participating entity gets a full point.
    Integer,
    /// Share of the document's authors.
    AuthorFraction,
    /// Share of the document's addresses.
    AddressFraction,
    /// 1/k for each of k entities.
    EqualSplit,
}

impl CreditScheme {
    pub const ALL: [CreditScheme; 4] = [
        CreditScheme::Integer,
        CreditScheme::AuthorFraction,
        CreditScheme::AddressFraction,
        CreditScheme::EqualSplit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CreditScheme::Integer => "INTEGER",
            CreditScheme::AuthorFraction => "AUTHOR_FRACTION",
            CreditScheme::AddressFraction => "ADDRESS_FRACTION",
            CreditScheme::EqualSplit => "EQUAL_SPLIT",
        }
    }
}

impl fmt::Display for CreditScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CreditScheme {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|scheme| scheme.as_str() == s)
            .ok_or_else(|| AnalysisError::UnknownCreditScheme(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for scheme in CountingScheme::ALL {
            assert_eq!(scheme.as_str().parse::<CountingScheme>().unwrap(), scheme);
            let json = serde_json::to_string(&scheme).unwrap();
            assert_eq!(json, format!("\"{}\"", scheme.as_str()));
        }
        for scheme in CreditScheme::ALL {
            assert_eq!(scheme.as_str().parse::<CreditScheme>().unwrap(), scheme);
        }
    }

    #[test]
    fn unknown_names() {
        assert_eq!(
            "HALF_LINKS".parse::<CountingScheme>(),
            Err(AnalysisError::UnknownScheme("HALF_LINKS".into()))
        );
        assert!("integer_links".parse::<CountingScheme>().is_err());
        assert!("FRACTION".parse::<CreditScheme>().is_err());
    }
}
