//! Degree centrality battery for valued and binary networks.
//!
//! Normalized degree divides by `(n − 1) · maxCell`, the largest value a node
//! could reach if every tie carried the heaviest observed weight. For binary
//! networks this is the familiar `degree / (n − 1)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::counting::{binarize, CoauthorshipNetwork};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeMode {
    Valued,
    Binary,
}

impl FromStr for DegreeMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "valued" => Ok(DegreeMode::Valued),
            "binary" => Ok(DegreeMode::Binary),
            other => Err(format!("unknown degree mode `{other}`")),
        }
    }
}

impl fmt::Display for DegreeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeMode::Valued => "valued",
            DegreeMode::Binary => "binary",
        })
    }
}

/// Descriptive statistics of one per-node vector, population moments.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Aggregates {
    pub mean: f64,
    pub std_dev: f64,
    pub sum: f64,
    pub variance: f64,
    pub ssq: f64,
    pub mcssq: f64,
    pub euc_norm: f64,
    pub minimum: f64,
    pub maximum: f64,
    pub n_of_obs: usize,
}

impl Aggregates {
    pub fn of(values: &[f64]) -> Self {
        let n = values.len();
        if n == 0 {
            return Self::default();
        }
        let sum: f64 = values.iter().sum();
        let mean = sum / n as f64;
        let ssq: f64 = values.iter().map(|v| v * v).sum();
        let mcssq: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
        let variance = mcssq / n as f64;
        Self {
            mean,
            std_dev: variance.sqrt(),
            sum,
            variance,
            ssq,
            mcssq,
            euc_norm: ssq.sqrt(),
            minimum: values.iter().copied().fold(f64::INFINITY, f64::min),
            maximum: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            n_of_obs: n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeStats {
    pub mode: DegreeMode,
    pub entities: Vec<String>,
    pub degree: Vec<f64>,
    /// Percent of the maximum attainable degree.
    pub nrm_degree: Vec<f64>,
    /// Absent when the total degree is zero.
    pub share: Option<Vec<f64>>,
    /// Aggregates of `degree`.
    #[serde(flatten)]
    pub aggregates: Aggregates,
    pub nrm_degree_aggregates: Aggregates,
    pub share_aggregates: Option<Aggregates>,
    /// Percent; absent for fewer than three nodes.
    pub network_centralization: Option<f64>,
    /// `Σ share² · 100`.
    pub blau_heterogeneity: Option<f64>,
    /// `(Σ share² − 1/n) / (1 − 1/n) · 100`.
    #[serde(rename = "normalizedIQV")]
    pub normalized_iqv: Option<f64>,
}

/// Summary statistics computed from a degree vector and the cell maximum.
pub fn degree_stats_from_degrees(
    entities: Vec<String>,
    degree: Vec<f64>,
    max_cell: f64,
    mode: DegreeMode,
) -> DegreeStats {
    let n = degree.len();
    let scale = if n >= 2 && max_cell > 0.0 {
        100.0 / ((n - 1) as f64 * max_cell)
    } else {
        0.0
    };
    let nrm_degree: Vec<f64> = degree.iter().map(|d| d * scale).collect();
    let total: f64 = degree.iter().sum();
    let share = (total > 0.0).then(|| degree.iter().map(|d| d / total).collect::<Vec<_>>());

    let network_centralization = (n >= 3).then(|| {
        let max = nrm_degree.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        nrm_degree.iter().map(|v| max - v).sum::<f64>() / (n - 2) as f64
    });
    let herfindahl = share.as_ref().map(|s| s.iter().map(|v| v * v).sum::<f64>());
    let blau_heterogeneity = herfindahl.map(|h| h * 100.0);
    let normalized_iqv = herfindahl
        .filter(|_| n >= 2)
        .map(|h| {
            let inv = 1.0 / n as f64;
            (h - inv) / (1.0 - inv) * 100.0
        });

    DegreeStats {
        mode,
        entities,
        aggregates: Aggregates::of(&degree),
        nrm_degree_aggregates: Aggregates::of(&nrm_degree),
        share_aggregates: share.as_deref().map(Aggregates::of),
        degree,
        nrm_degree,
        share,
        network_centralization,
        blau_heterogeneity,
        normalized_iqv,
    }
}

pub fn degree_stats(net: &CoauthorshipNetwork, mode: DegreeMode) -> DegreeStats {
    let binary;
    let net = match mode {
        DegreeMode::Valued => net,
        DegreeMode::Binary => {
            binary = binarize(net);
            &binary
        }
    };
    let degree = (0..net.order())
        .map(|i| {
            net.matrix
                .row(i)
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v)
                .sum()
        })
        .collect();
    degree_stats_from_degrees(net.entities.clone(), degree, net.matrix.max_off_diagonal(), mode)
}
