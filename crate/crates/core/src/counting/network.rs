use serde::Serialize;

use super::occurrence::OccurrenceMatrix;
use super::scheme::CountingScheme;
use crate::error::AnalysisError;
use crate::matrix::SquareMatrix;

/// 1-mode valued network over entities, symmetric with a zero diagonal.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoauthorshipNetwork {
    pub entities: Vec<String>,
    pub matrix: SquareMatrix,
    pub scheme: CountingScheme,
    pub document_count: usize,
    pub multi_entity_document_count: usize,
}

impl CoauthorshipNetwork {
    pub fn order(&self) -> usize {
        self.entities.len()
    }

    /// Wraps a bare matrix, e.g. one read back from a Pajek file.
    pub fn from_matrix(entities: Vec<String>, matrix: SquareMatrix, scheme: CountingScheme) -> Self {
        Self {
            entities,
            matrix,
            scheme,
            document_count: 0,
            multi_entity_document_count: 0,
        }
    }
}

/// Symmetric link allocation for one document: `(i, j, w)` for `i < j`, where
/// `w = a_i·a_j / 2L` is added to both `(i, j)` and `(j, i)` and
/// `L = Σ_{i<j} a_i·a_j`. Entity `i`'s row total is therefore
/// `a_i·(T − a_i) / 2L` and all cells of the document sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkFractions {
    pub len: usize,
    pub cells: Vec<(usize, usize, f64)>,
}

impl LinkFractions {
    pub fn row_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.len];
        for &(i, j, w) in &self.cells {
            sums[i] += w;
            sums[j] += w;
        }
        sums
    }

    pub fn total(&self) -> f64 {
        self.cells.iter().map(|c| 2.0 * c.2).sum()
    }
}

pub fn document_link_fractions(counts: &[u32]) -> Result<LinkFractions, AnalysisError> {
    if let Some(&bad) = counts.iter().find(|&&c| c == 0) {
        return Err(AnalysisError::NonPositiveCount(bad));
    }
    let mut cells = Vec::new();
    if counts.len() >= 2 {
        let links: f64 = pairs(counts.len())
            .map(|(i, j)| f64::from(counts[i]) * f64::from(counts[j]))
            .sum();
        for (i, j) in pairs(counts.len()) {
            let w = f64::from(counts[i]) * f64::from(counts[j]) / (2.0 * links);
            cells.push((i, j, w));
        }
    }
    Ok(LinkFractions {
        len: counts.len(),
        cells,
    })
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Projects the documents × entities matrix onto an entities × entities network.
pub fn project_network(occ: &OccurrenceMatrix, scheme: CountingScheme) -> CoauthorshipNetwork {
    let n = occ.n_entities();
    let mut matrix = SquareMatrix::zeros(n);
    let mut multi = 0;
    for row in &occ.rows {
        if row.len() < 2 {
            continue;
        }
        multi += 1;
        match scheme {
            CountingScheme::FractionalLinks => {
                let counts: Vec<u32> = row.iter().map(|&(_, c)| c).collect();
                // rows only hold positive counts
                let fractions = document_link_fractions(&counts).expect("positive counts");
                for (i, j, w) in fractions.cells {
                    matrix.add_symmetric(row[i].0, row[j].0, w);
                }
            }
            _ => {
                for (x, &(ei, ai)) in row.iter().enumerate() {
                    for &(ej, aj) in &row[x + 1..] {
                        let w = match scheme {
                            CountingScheme::IntegerLinks => f64::from(ai) * f64::from(aj),
                            CountingScheme::MinOverlap => f64::from(ai.min(aj)),
                            CountingScheme::CoPresence | CountingScheme::Binary => 1.0,
                            CountingScheme::FractionalLinks => unreachable!(),
                        };
                        matrix.add_symmetric(ei, ej, w);
                    }
                }
            }
        }
    }
    let net = CoauthorshipNetwork {
        entities: occ.entities.clone(),
        matrix,
        scheme,
        document_count: occ.n_documents(),
        multi_entity_document_count: multi,
    };
    if scheme == CountingScheme::Binary {
        binarize(&net)
    } else {
        net
    }
}

/// Support of the network: 1 where a cell is positive, else 0.
pub fn binarize(net: &CoauthorshipNetwork) -> CoauthorshipNetwork {
    CoauthorshipNetwork {
        entities: net.entities.clone(),
        matrix: net.matrix.map(|v| if v > 0.0 { 1.0 } else { 0.0 }),
        scheme: CountingScheme::Binary,
        document_count: net.document_count,
        multi_entity_document_count: net.multi_entity_document_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::Level;
    use proptest::prelude::*;

    fn table_one() -> OccurrenceMatrix {
        OccurrenceMatrix::from_rows(
            Level::Institution,
            vec!["t1".into()],
            vec!["A".into(), "B".into(), "C".into()],
            &[vec![3, 2, 4]],
        )
    }

    #[test]
    fn relations_row() {
        let f = document_link_fractions(&[3, 2, 4]).unwrap();
        let sums = f.row_sums();
        let expected = [9.0 / 26.0, 7.0 / 26.0, 10.0 / 26.0];
        for (got, want) in sums.iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
        assert!((f.total() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pair_and_singleton() {
        let f = document_link_fractions(&[1, 1]).unwrap();
        assert_eq!(f.cells, vec![(0, 1, 0.5)]);
        assert_eq!(f.row_sums(), vec![0.5, 0.5]);
        assert!(document_link_fractions(&[5]).unwrap().cells.is_empty());
        assert_eq!(
            document_link_fractions(&[2, 0]),
            Err(AnalysisError::NonPositiveCount(0))
        );
    }

    #[test]
    fn integer_links_table_one() {
        let net = project_network(&table_one(), CountingScheme::IntegerLinks);
        let m = &net.matrix;
        assert_eq!((m.get(0, 1), m.get(0, 2), m.get(1, 2)), (6.0, 12.0, 8.0));
        assert_eq!(m.get(1, 0), 6.0);
        assert_eq!((m.get(0, 0), m.get(1, 1), m.get(2, 2)), (0.0, 0.0, 0.0));
        assert_eq!(net.multi_entity_document_count, 1);
    }

    #[test]
    fn integer_links_additive() {
        let occ = OccurrenceMatrix::from_rows(
            Level::Institution,
            vec!["a".into(), "b".into()],
            vec!["A".into(), "B".into(), "C".into()],
            &[vec![3, 2, 4], vec![3, 2, 4]],
        );
        let m = project_network(&occ, CountingScheme::IntegerLinks).matrix;
        assert_eq!((m.get(0, 1), m.get(0, 2), m.get(1, 2)), (12.0, 24.0, 16.0));
    }

    #[test]
    fn other_schemes_table_one() {
        let bin = project_network(&table_one(), CountingScheme::Binary).matrix;
        assert_eq!(bin.to_rows(), vec![vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 1.0], vec![1.0, 1.0, 0.0]]);
        let min = project_network(&table_one(), CountingScheme::MinOverlap).matrix;
        assert_eq!((min.get(0, 1), min.get(0, 2), min.get(1, 2)), (2.0, 3.0, 2.0));
        let frac = project_network(&table_one(), CountingScheme::FractionalLinks);
        assert!((frac.matrix.total() - 1.0).abs() < 1e-12);
        assert!((frac.matrix.get(0, 2) - 12.0 / 52.0).abs() < 1e-15);
    }

    #[test]
    fn binarize_is_idempotent() {
        let net = project_network(&table_one(), CountingScheme::IntegerLinks);
        let once = binarize(&net);
        assert_eq!(binarize(&once), once);
        assert_eq!(once, project_network(&table_one(), CountingScheme::Binary));
    }

    /// Brute-force `OᵀO` with the diagonal zeroed.
    fn gram_oracle(rows: &[Vec<u32>], n: usize) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out[i][j] = rows.iter().map(|r| f64::from(r[i] * r[j])).sum();
                }
            }
        }
        out
    }

    fn occurrence_strategy() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
        (1usize..7).prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(
                    proptest::collection::vec(prop_oneof![3 => Just(0u32), 2 => 1u32..6], n)
                        .prop_filter("row needs a positive cell", |r| r.iter().any(|&c| c > 0)),
                    1..=10,
                ),
            )
        })
    }

    fn occ_of(n: usize, rows: &[Vec<u32>]) -> OccurrenceMatrix {
        OccurrenceMatrix::from_rows(
            Level::Institution,
            (0..rows.len()).map(|d| format!("d{d}")).collect(),
            (0..n).map(|e| format!("e{e}")).collect(),
            rows,
        )
    }

    proptest! {
        #[test]
        fn integer_links_is_gram_off_diagonal((n, rows) in occurrence_strategy()) {
            let net = project_network(&occ_of(n, &rows), CountingScheme::IntegerLinks);
            prop_assert_eq!(net.matrix.to_rows(), gram_oracle(&rows, n));
        }

        #[test]
        fn fractional_mass_and_support((n, rows) in occurrence_strategy()) {
            let occ = occ_of(n, &rows);
            let multi = rows.iter().filter(|r| r.iter().filter(|&&c| c > 0).count() >= 2).count();
            let frac = project_network(&occ, CountingScheme::FractionalLinks);
            prop_assert_eq!(frac.multi_entity_document_count, multi);
            prop_assert!((frac.matrix.total() - multi as f64).abs() < 1e-12);
            let support = binarize(&project_network(&occ, CountingScheme::Binary));
            for scheme in CountingScheme::ALL {
                let net = project_network(&occ, scheme);
                prop_assert!(net.matrix.is_symmetric());
                for i in 0..n {
                    prop_assert_eq!(net.matrix.get(i, i), 0.0);
                    for j in 0..n {
                        prop_assert!(net.matrix.get(i, j) >= 0.0);
                    }
                }
                prop_assert_eq!(&binarize(&net).matrix, &support.matrix);
            }
        }

        #[test]
        fn per_document_mass(counts in proptest::collection::vec(1u32..50, 2..12)) {
            let f = document_link_fractions(&counts).unwrap();
            prop_assert!((f.total() - 1.0).abs() < 1e-12);
        }
    }
}
