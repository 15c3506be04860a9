//! Tabular CSV renderings of the cohesion, degree and comparison reports.
//! Absent values are written as `N.A.`.

use std::io::{self, Write};

use super::csv_out::{csv_err, format_cell, writer};
use crate::compare::{RankTable, SchemeComparison};
use crate::metrics::{Aggregates, CohesionReport, DegreeStats};

const NA: &str = "N.A.";

fn opt(v: Option<f64>) -> String {
    v.map(format_cell).unwrap_or_else(|| NA.to_string())
}

pub fn cohesion_rows(r: &CohesionReport) -> Vec<(&'static str, String)> {
    vec![
        ("Density", format_cell(r.density)),
        ("Avg Degree", format_cell(r.avg_degree)),
        ("H-Index", r.h_index.to_string()),
        ("Compactness", format_cell(r.compactness)),
        ("Closure", format_cell(r.closure)),
        ("Avg Distance", format_cell(r.avg_distance)),
        ("SD Distance", format_cell(r.sd_distance)),
        ("Wiener Index", format_cell(r.wiener)),
        ("Diameter", r.diameter.to_string()),
        ("Deg Centralization", opt(r.deg_centralization)),
        ("Nulls", format_cell(r.nulls)),
        ("Dependency Sum", format_cell(r.dependency_sum)),
    ]
}

pub fn write_cohesion_csv<W: Write>(r: &CohesionReport, out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(["No", "Metric", "Value"]).map_err(csv_err)?;
    for (i, (name, value)) in cohesion_rows(r).into_iter().enumerate() {
        w.write_record([(i + 1).to_string(), name.to_string(), value])
            .map_err(csv_err)?;
    }
    w.flush()
}

const AGGREGATE_LABELS: [&str; 10] = [
    "Mean", "Std Dev", "Sum", "Variance", "SSQ", "MCSSQ", "Euc Norm", "Minimum", "Maximum", "N of Obs",
];

fn aggregate_values(a: Option<&Aggregates>) -> [String; 10] {
    match a {
        Some(a) => [
            format_cell(a.mean),
            format_cell(a.std_dev),
            format_cell(a.sum),
            format_cell(a.variance),
            format_cell(a.ssq),
            format_cell(a.mcssq),
            format_cell(a.euc_norm),
            format_cell(a.minimum),
            format_cell(a.maximum),
            a.n_of_obs.to_string(),
        ],
        None => std::array::from_fn(|_| NA.to_string()),
    }
}

/// The three Degree / NrmDegree / Share columns for one battery, 13 rows.
fn degree_columns(s: &DegreeStats) -> Vec<[String; 3]> {
    let deg = aggregate_values(Some(&s.aggregates));
    let nrm = aggregate_values(Some(&s.nrm_degree_aggregates));
    let share = aggregate_values(s.share_aggregates.as_ref());
    let mut rows: Vec<[String; 3]> = (0..10)
        .map(|i| [deg[i].clone(), nrm[i].clone(), share[i].clone()])
        .collect();
    for v in [s.network_centralization, s.blau_heterogeneity, s.normalized_iqv] {
        rows.push([opt(v), String::new(), String::new()]);
    }
    rows
}

fn metric_labels() -> impl Iterator<Item = &'static str> {
    AGGREGATE_LABELS
        .into_iter()
        .chain(["Network Centralization", "Blau Heterogeneity", "Normalized (IQV)"])
}

pub fn write_degree_csv<W: Write>(s: &DegreeStats, out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(["No", "Metric", "Degree", "NrmDegree", "Share"])
        .map_err(csv_err)?;
    for (i, (label, cols)) in metric_labels().zip(degree_columns(s)).enumerate() {
        let mut record = vec![(i + 1).to_string(), label.to_string()];
        record.extend(cols);
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush()
}

pub fn write_rank_csv<W: Write>(table: &RankTable, out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(["Rank", "Entity", "Value"]).map_err(csv_err)?;
    for row in &table.rows {
        w.write_record([row.rank.to_string(), row.entity.clone(), format_cell(row.value)])
            .map_err(csv_err)?;
    }
    w.flush()
}

/// Two schemes side by side with the percent difference and the binary
/// battery, one row per metric.
pub fn write_comparison_csv<W: Write>(c: &SchemeComparison, out: W) -> io::Result<()> {
    let mut w = writer(out);
    let mut header = vec!["No".to_string(), "Metric".to_string()];
    for prefix in [c.scheme_a.as_str(), c.scheme_b.as_str(), "Difference %", "BINARY"] {
        for col in ["Degree", "NrmDegree", "Share"] {
            header.push(format!("{prefix} {col}"));
        }
    }
    w.write_record(&header).map_err(csv_err)?;

    let a = degree_columns(&c.degree_a);
    let b = degree_columns(&c.degree_b);
    let bin = degree_columns(&c.binary_degree);
    for (i, label) in metric_labels().enumerate() {
        let mut record = vec![(i + 1).to_string(), label.to_string()];
        record.extend(a[i].iter().cloned());
        record.extend(b[i].iter().cloned());
        if i < 10 {
            for k in 0..3 {
                record.push(opt(c.differences[i * 3 + k].difference));
            }
        } else {
            record.push(opt(c.differences[30 + (i - 10)].difference));
            record.push(NA.to_string());
            record.push(NA.to_string());
        }
        record.extend(bin[i].iter().cloned());
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{CoauthorshipNetwork, CountingScheme};
    use crate::matrix::SquareMatrix;
    use crate::metrics::{cohesion_report, degree_stats, DegreeMode};

    fn path() -> CoauthorshipNetwork {
        CoauthorshipNetwork::from_matrix(
            vec!["a".into(), "b".into(), "c".into()],
            SquareMatrix::from_rows(&[vec![0.0, 2.0, 0.0], vec![2.0, 0.0, 1.0], vec![0.0, 1.0, 0.0]]).unwrap(),
            CountingScheme::IntegerLinks,
        )
    }

    fn render(f: impl FnOnce(&mut Vec<u8>) -> io::Result<()>) -> String {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn cohesion_table() {
        let text = render(|b| write_cohesion_csv(&cohesion_report(&path()), b));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 13);
        assert_eq!(lines[9], "9,Diameter,2");
        assert_eq!(lines[12], "12,Dependency Sum,2");
    }

    #[test]
    fn degree_table() {
        let text = render(|b| write_degree_csv(&degree_stats(&path(), DegreeMode::Valued), b));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 14);
        assert!(lines[3].starts_with("3,Sum,6,150,"));
        assert!(lines[11].starts_with("11,Network Centralization,"));
    }
}
