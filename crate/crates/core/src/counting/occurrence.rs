use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::ingest::{DocumentRecord, Level};

/// Per-entity participation of one document at one aggregation level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntityShare {
    pub entity: String,
    /// Distinct authors linked to the entity, or its address count when the
    /// document carries no author links.
    pub authors: u32,
    pub addresses: u32,
}

/// Entities of `record` at `level`, sorted by name. Empty when the record has
/// no usable address.
///
/// Author links are used only when every usable address has at least one
/// linked author; otherwise the whole record falls back to address counts.
pub fn document_profile(record: &DocumentRecord, level: Level) -> Vec<EntityShare> {
    let usable: Vec<_> = record.usable_addresses().collect();
    let linked = usable
        .iter()
        .all(|a| a.author_indices.as_ref().is_some_and(|ix| !ix.is_empty()));

    let mut acc: BTreeMap<&str, (BTreeSet<usize>, u32)> = BTreeMap::new();
    for address in &usable {
        let slot = acc.entry(DocumentRecord::entity(address, level)).or_default();
        slot.1 += 1;
        if let Some(ix) = &address.author_indices {
            slot.0.extend(ix.iter().copied());
        }
    }
    acc.into_iter()
        .map(|(entity, (authors, addresses))| EntityShare {
            entity: entity.to_string(),
            authors: if linked { authors.len() as u32 } else { addresses },
            addresses,
        })
        .collect()
}

/// Documents × entities matrix of author counts, stored by row.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OccurrenceMatrix {
    pub level: Level,
    pub documents: Vec<String>,
    pub entities: Vec<String>,
    /// `rows[d]` lists `(entity index, count)` with positive counts, ascending
    /// by entity index.
    pub rows: Vec<Vec<(usize, u32)>>,
}

impl OccurrenceMatrix {
    pub fn n_documents(&self) -> usize {
        self.documents.len()
    }

    pub fn n_entities(&self) -> usize {
        self.entities.len()
    }

    pub fn get(&self, document: usize, entity: usize) -> u32 {
        self.rows[document]
            .binary_search_by_key(&entity, |&(e, _)| e)
            .map(|pos| self.rows[document][pos].1)
            .unwrap_or(0)
    }

    pub fn dense(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![0; self.entities.len()];
                for &(e, c) in row {
                    dense[e] = c;
                }
                dense
            })
            .collect()
    }

    pub fn from_rows(
        level: Level,
        documents: Vec<String>,
        entities: Vec<String>,
        dense: &[Vec<u32>],
    ) -> Self {
        let rows = dense
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(e, &c)| (e, c))
                    .collect()
            })
            .collect();
        Self {
            level,
            documents,
            entities,
            rows,
        }
    }
}

/// Builds the documents × entities matrix. Records without a usable address
/// are left out; entity columns are sorted by name.
pub fn build_occurrence_matrix(records: &[DocumentRecord], level: Level) -> OccurrenceMatrix {
    let profiles: Vec<(&str, Vec<EntityShare>)> = records
        .iter()
        .map(|r| (r.id.as_str(), document_profile(r, level)))
        .filter(|(_, p)| !p.is_empty())
        .collect();

    let entities: Vec<String> = profiles
        .iter()
        .flat_map(|(_, p)| p.iter().map(|s| s.entity.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<&str, usize> = entities
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();

    let mut documents = Vec::with_capacity(profiles.len());
    let mut rows = Vec::with_capacity(profiles.len());
    for (id, profile) in &profiles {
        documents.push(id.to_string());
        // profile is name-sorted, so indices ascend
        rows.push(
            profile
                .iter()
                .map(|s| (index[s.entity.as_str()], s.authors))
                .collect(),
        );
    }
    OccurrenceMatrix {
        level,
        documents,
        entities,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{load_jsonl_corpus, Address};

    fn table_one() -> Vec<DocumentRecord> {
        load_jsonl_corpus(
            r#"{"id":"t1","year":2014,"entities":[{"institution":"A","country":"X","authors":3},{"institution":"B","country":"Y","authors":2},{"institution":"C","country":"X","authors":4}]}"#,
        )
        .unwrap()
        .records
    }

    #[test]
    fn table_one_institutions() {
        let occ = build_occurrence_matrix(&table_one(), Level::Institution);
        assert_eq!(occ.entities, vec!["A", "B", "C"]);
        assert_eq!(occ.dense(), vec![vec![3, 2, 4]]);
    }

    #[test]
    fn table_one_countries() {
        let occ = build_occurrence_matrix(&table_one(), Level::Country);
        assert_eq!(occ.entities, vec!["X", "Y"]);
        assert_eq!(occ.dense(), vec![vec![7, 2]]);
    }

    #[test]
    fn single_author_single_address() {
        let corpus = load_jsonl_corpus(
            r#"{"id":"s","year":2014,"entities":[{"institution":"Solo","country":"Z","authors":1}]}"#,
        )
        .unwrap();
        let occ = build_occurrence_matrix(&corpus.records, Level::Institution);
        assert_eq!(occ.dense(), vec![vec![1]]);
    }

    fn addr(inst: &str, country: &str, ix: Option<&[usize]>) -> Address {
        Address {
            institution: inst.into(),
            country: country.into(),
            author_indices: ix.map(|s| s.iter().copied().collect()),
            raw_text: String::new(),
            usable: true,
        }
    }

    #[test]
    fn unlinked_addresses_count_addresses() {
        let record = DocumentRecord {
            id: "old".into(),
            year: Some(2005),
            authors: vec!["a".into(), "b".into(), "c".into()],
            addresses: vec![
                addr("U1", "X", None),
                addr("U1", "X", None),
                addr("U2", "Y", None),
            ],
        };
        let occ = build_occurrence_matrix(&[record], Level::Institution);
        assert_eq!(occ.dense(), vec![vec![2, 1]]);
    }

    #[test]
    fn author_with_two_addresses_counts_in_both() {
        let record = DocumentRecord {
            id: "dual".into(),
            year: Some(2014),
            authors: vec!["a".into(), "b".into()],
            addresses: vec![addr("U1", "X", Some(&[0, 1])), addr("U2", "X", Some(&[1]))],
        };
        let inst = build_occurrence_matrix(std::slice::from_ref(&record), Level::Institution);
        assert_eq!(inst.dense(), vec![vec![2, 1]]);
        // same author twice within one country counts once
        let country = build_occurrence_matrix(&[record], Level::Country);
        assert_eq!(country.dense(), vec![vec![2]]);
    }

    #[test]
    fn records_without_usable_addresses_are_dropped() {
        let mut bad = Address::unusable("nowhere");
        bad.author_indices = None;
        let record = DocumentRecord {
            id: "x".into(),
            year: None,
            authors: vec![],
            addresses: vec![bad],
        };
        let occ = build_occurrence_matrix(&[record], Level::Country);
        assert_eq!(occ.n_documents(), 0);
        assert_eq!(occ.n_entities(), 0);
    }
}
