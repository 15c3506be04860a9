use serde::Serialize;

use crate::error::AnalysisError;
use crate::metrics::{Aggregates, DegreeStats};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DifferenceRow {
    pub metric: &'static str,
    /// `degree`, `nrmDegree` or `share`.
    pub column: &'static str,
    pub integer: Option<f64>,
    pub fractional: Option<f64>,
    /// Percent change from integer to fractional; absent when undefined.
    pub difference: Option<f64>,
}

/// `(fractional − integer) / integer · 100`. Zero-to-zero is no change; a
/// zero integer value with a nonzero fractional value has no defined change.
pub fn percent_difference(integer: Option<f64>, fractional: Option<f64>) -> Option<f64> {
    let (i, f) = (integer?, fractional?);
    if i == 0.0 {
        return (f == 0.0).then_some(0.0);
    }
    Some((f - i) / i * 100.0)
}

const AGGREGATE_FIELDS: [&str; 10] = [
    "mean", "stdDev", "sum", "variance", "ssq", "mcssq", "eucNorm", "minimum", "maximum", "nOfObs",
];

fn field(a: &Aggregates, name: &str) -> f64 {
    match name {
        "mean" => a.mean,
        "stdDev" => a.std_dev,
        "sum" => a.sum,
        "variance" => a.variance,
        "ssq" => a.ssq,
        "mcssq" => a.mcssq,
        "eucNorm" => a.euc_norm,
        "minimum" => a.minimum,
        "maximum" => a.maximum,
        "nOfObs" => a.n_of_obs as f64,
        _ => unreachable!("unknown aggregate {name}"),
    }
}

/// Row-by-row percent change between two degree batteries, laid out as the
/// Integer / Fractional / Difference comparison table.
pub fn metric_difference(
    integer: &DegreeStats,
    fractional: &DegreeStats,
) -> Result<Vec<DifferenceRow>, AnalysisError> {
    if integer.entities != fractional.entities {
        let mut diff: Vec<String> = integer
            .entities
            .iter()
            .filter(|e| !fractional.entities.contains(e))
            .chain(fractional.entities.iter().filter(|e| !integer.entities.contains(e)))
            .cloned()
            .collect();
        diff.sort();
        return Err(AnalysisError::EntityMismatch(diff));
    }
    let columns: [(&'static str, Option<&Aggregates>, Option<&Aggregates>); 3] = [
        ("degree", Some(&integer.aggregates), Some(&fractional.aggregates)),
        (
            "nrmDegree",
            Some(&integer.nrm_degree_aggregates),
            Some(&fractional.nrm_degree_aggregates),
        ),
        (
            "share",
            integer.share_aggregates.as_ref(),
            fractional.share_aggregates.as_ref(),
        ),
    ];
    let mut rows = Vec::with_capacity(33);
    for metric in AGGREGATE_FIELDS {
        for (column, i, f) in columns {
            let iv = i.map(|a| field(a, metric));
            let fv = f.map(|a| field(a, metric));
            rows.push(DifferenceRow {
                metric,
                column,
                integer: iv,
                fractional: fv,
                difference: percent_difference(iv, fv),
            });
        }
    }
    for (metric, iv, fv) in [
        (
            "networkCentralization",
            integer.network_centralization,
            fractional.network_centralization,
        ),
        (
            "blauHeterogeneity",
            integer.blau_heterogeneity,
            fractional.blau_heterogeneity,
        ),
        ("normalizedIQV", integer.normalized_iqv, fractional.normalized_iqv),
    ] {
        rows.push(DifferenceRow {
            metric,
            column: "degree",
            integer: iv,
            fractional: fv,
            difference: percent_difference(iv, fv),
        });
    }
    Ok(rows)
}
