use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use super::record::DocumentRecord;

/// Year window and bilateral-country requirement applied before counting.
#[derive(Debug, Clone, Default)]
pub struct CorpusFilter {
    pub years: Option<RangeInclusive<i32>>,
    pub required_countries: BTreeSet<String>,
}

impl CorpusFilter {
    pub fn matches(&self, record: &DocumentRecord) -> bool {
        if let Some(years) = &self.years {
            match record.year {
                Some(y) if years.contains(&y) => {}
                _ => return false,
            }
        }
        self.required_countries.iter().all(|required| {
            record
                .usable_addresses()
                .any(|a| a.country == *required)
        })
    }
}

/// Keeps records in the year window that carry every required country.
pub fn filter_corpus(records: &[DocumentRecord], filter: &CorpusFilter) -> Vec<DocumentRecord> {
    records.iter().filter(|r| filter.matches(r)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::address::Address;

    fn record(id: &str, year: i32, countries: &[&str]) -> DocumentRecord {
        DocumentRecord {
            id: id.into(),
            year: Some(year),
            authors: vec!["a".into()],
            addresses: countries
                .iter()
                .map(|c| Address {
                    institution: format!("Inst {c}"),
                    country: c.to_string(),
                    author_indices: None,
                    raw_text: String::new(),
                    usable: true,
                })
                .collect(),
        }
    }

    #[test]
    fn bilateral_filter() {
        let corpus = vec![
            record("1", 2014, &["Peoples R China"]),
            record("2", 2014, &["Peoples R China", "USA", "South Korea"]),
            record("3", 2014, &["South Korea", "Japan"]),
        ];
        let filter = CorpusFilter {
            years: None,
            required_countries: ["Peoples R China", "South Korea"].map(String::from).into(),
        };
        let kept = filter_corpus(&corpus, &filter);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].id, "2");
    }

    #[test]
    fn year_filter() {
        let corpus = vec![
            record("a", 2013, &["X"]),
            record("b", 2014, &["X"]),
            record("c", 2015, &["X"]),
        ];
        let filter = CorpusFilter {
            years: Some(2014..=2014),
            ..CorpusFilter::default()
        };
        let kept = filter_corpus(&corpus, &filter);
        assert_eq!(kept.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(), vec!["b"]);
    }

    #[test]
    fn identity_filter() {
        let corpus = vec![record("a", 2013, &["X"]), record("b", 2014, &[])];
        assert_eq!(filter_corpus(&corpus, &CorpusFilter::default()), corpus);
    }
}
