use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::AnalysisError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankRow {
    pub entity: String,
    pub value: f64,
    pub rank: usize,
}

/// Entities sorted by descending value with competition ranks ("1, 1, 3").
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankTable {
    pub rows: Vec<RankRow>,
}

impl RankTable {
    pub fn rank_of(&self, entity: &str) -> Option<usize> {
        self.rows.iter().find(|r| r.entity == entity).map(|r| r.rank)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Ties share the smallest rank and are listed alphabetically.
pub fn rank_vector(entities: &[String], values: &[f64]) -> Result<RankTable, AnalysisError> {
    if entities.len() != values.len() {
        return Err(AnalysisError::LengthMismatch(entities.len(), values.len()));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .total_cmp(&values[a])
            .then_with(|| entities[a].cmp(&entities[b]))
    });
    let mut rows: Vec<RankRow> = Vec::with_capacity(order.len());
    for (pos, &i) in order.iter().enumerate() {
        let rank = match rows.last() {
            Some(prev) if prev.value.total_cmp(&values[i]) == Ordering::Equal => prev.rank,
            _ => pos + 1,
        };
        rows.push(RankRow {
            entity: entities[i].clone(),
            value: values[i],
            rank,
        });
    }
    Ok(RankTable { rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RankDelta {
    pub entity: String,
    pub old_rank: usize,
    pub new_rank: usize,
    /// `old − new`: positive when the entity climbs under the second scheme.
    pub delta: i64,
}

/// Per-entity rank movement, in the order of `integer_ranks`.
pub fn rank_delta(
    integer_ranks: &RankTable,
    fractional_ranks: &RankTable,
) -> Result<Vec<RankDelta>, AnalysisError> {
    let new: HashMap<&str, usize> = fractional_ranks
        .rows
        .iter()
        .map(|r| (r.entity.as_str(), r.rank))
        .collect();
    let old: BTreeSet<&str> = integer_ranks.rows.iter().map(|r| r.entity.as_str()).collect();
    let newer: BTreeSet<&str> = new.keys().copied().collect();
    if old != newer {
        let diff = old
            .symmetric_difference(&newer)
            .map(|s| s.to_string())
            .collect();
        return Err(AnalysisError::EntityMismatch(diff));
    }
    Ok(integer_ranks
        .rows
        .iter()
        .map(|r| {
            let new_rank = new[r.entity.as_str()];
            RankDelta {
                entity: r.entity.clone(),
                old_rank: r.rank,
                new_rank,
                delta: r.rank as i64 - new_rank as i64,
            }
        })
        .collect())
}
