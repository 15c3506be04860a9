use std::collections::BTreeMap;

use serde::Serialize;

use super::occurrence::document_profile;
use super::scheme::CreditScheme;
use crate::ingest::{DocumentRecord, Level};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductionCredit {
    pub entity: String,
    pub credit: f64,
    pub scheme: CreditScheme,
}

/// Credit each entity receives from one document under `scheme`, in the
/// entity order of [`document_profile`].
pub fn document_credits(record: &DocumentRecord, level: Level, scheme: CreditScheme) -> Vec<(String, f64)> {
    let profile = document_profile(record, level);
    let k = profile.len() as f64;
    let authors: f64 = profile.iter().map(|s| f64::from(s.authors)).sum();
    let addresses: f64 = profile.iter().map(|s| f64::from(s.addresses)).sum();
    profile
        .into_iter()
        .map(|s| {
            let credit = match scheme {
                CreditScheme::Integer => 1.0,
                CreditScheme::AuthorFraction => f64::from(s.authors) / authors,
                CreditScheme::AddressFraction => f64::from(s.addresses) / addresses,
                CreditScheme::EqualSplit => 1.0 / k,
            };
            (s.entity, credit)
        })
        .collect()
}

/// Per-entity production credit summed over the corpus, sorted by entity.
/// Single-entity documents carry full weight here even though they add no
/// network links.
pub fn production_credits(
    records: &[DocumentRecord],
    level: Level,
    scheme: CreditScheme,
) -> Vec<ProductionCredit> {
    let mut totals: BTreeMap<String, f64> = BTreeMap::new();
    for record in records {
        for (entity, credit) in document_credits(record, level, scheme) {
            *totals.entry(entity).or_default() += credit;
        }
    }
    totals
        .into_iter()
        .map(|(entity, credit)| ProductionCredit {
            entity,
            credit,
            scheme,
        })
        .collect()
}
