//! Comparing two counting schemes: rankings, correlations, QAP and
//! per-metric percent differences.

pub mod correlate;
pub mod difference;
pub mod qap;
pub mod rank;

use serde::Serialize;

pub use correlate::{average_ranks, correlate, pearson, Correlation, CorrelationMethod};
pub use difference::{metric_difference, percent_difference, DifferenceRow};
pub use qap::{qap_correlation, replica_permutation, Alternative, QapResult};
pub use rank::{rank_delta, rank_vector, RankDelta, RankRow, RankTable};

use crate::counting::{CoauthorshipNetwork, CountingScheme};
use crate::metrics::{cohesion_report, degree_stats, CohesionReport, DegreeMode, DegreeStats};

/// Everything reported when two projections of one corpus are compared.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SchemeComparison {
    pub scheme_a: CountingScheme,
    pub scheme_b: CountingScheme,
    pub cohesion_a: CohesionReport,
    pub cohesion_b: CohesionReport,
    pub degree_a: DegreeStats,
    pub degree_b: DegreeStats,
    pub binary_degree: DegreeStats,
    pub ranking_a: RankTable,
    pub ranking_b: RankTable,
    pub rank_deltas: Vec<RankDelta>,
    pub pearson: Option<Correlation>,
    pub spearman: Option<Correlation>,
    pub qap: Option<QapResult>,
    pub differences: Vec<DifferenceRow>,
}

#[derive(Debug, Clone, Copy)]
pub struct ComparisonOptions {
    pub permutations: usize,
    pub seed: u64,
    pub alternative: Alternative,
}

impl Default for ComparisonOptions {
    fn default() -> Self {
        Self {
            permutations: 999,
            seed: 1,
            alternative: Alternative::Greater,
        }
    }
}

/// Compares two networks over the same entities. Correlations and QAP that
/// are undefined for this input (too few nodes, zero variance) are absent.
pub fn compare_networks(
    a: &CoauthorshipNetwork,
    b: &CoauthorshipNetwork,
    options: ComparisonOptions,
) -> Result<SchemeComparison, crate::AnalysisError> {
    if a.entities != b.entities {
        return Err(crate::AnalysisError::EntityMismatch(
            symmetric_difference(&a.entities, &b.entities),
        ));
    }
    let degree_a = degree_stats(a, DegreeMode::Valued);
    let degree_b = degree_stats(b, DegreeMode::Valued);
    let ranking_a = rank_vector(&a.entities, &degree_a.nrm_degree)?;
    let ranking_b = rank_vector(&b.entities, &degree_b.nrm_degree)?;
    let rank_deltas = rank_delta(&ranking_a, &ranking_b)?;
    let differences = metric_difference(&degree_a, &degree_b)?;
    Ok(SchemeComparison {
        scheme_a: a.scheme,
        scheme_b: b.scheme,
        cohesion_a: cohesion_report(a),
        cohesion_b: cohesion_report(b),
        binary_degree: degree_stats(a, DegreeMode::Binary),
        pearson: correlate(&degree_a.nrm_degree, &degree_b.nrm_degree, CorrelationMethod::Pearson).ok(),
        spearman: correlate(&degree_a.nrm_degree, &degree_b.nrm_degree, CorrelationMethod::Spearman).ok(),
        qap: qap_correlation(&a.matrix, &b.matrix, options.permutations, options.seed, options.alternative)
            .ok(),
        degree_a,
        degree_b,
        ranking_a,
        ranking_b,
        rank_deltas,
        differences,
    })
}

fn symmetric_difference(a: &[String], b: &[String]) -> Vec<String> {
    let mut out: Vec<String> = a
        .iter()
        .filter(|e| !b.contains(e))
        .chain(b.iter().filter(|e| !a.contains(e)))
        .cloned()
        .collect();
    out.sort();
    out
}
