//! Quadratic assignment procedure for the correlation of two node-aligned
//! matrices.
//!
//! The null distribution relabels the nodes of the second matrix (rows and
//! columns together) and recomputes the off-diagonal Pearson coefficient.
//! Replica `k` draws its permutation from a ChaCha stream keyed by
//! `(seed, k)`, so the result does not depend on the thread count.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::AnalysisError;
use crate::matrix::SquareMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Alternative {
    /// Count permuted `r >= observed`.
    #[default]
    Greater,
    /// Count permuted `|r| >= |observed|`.
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QapResult {
    pub observed_r: f64,
    pub permutations: usize,
    /// `(1 + #{permuted r at least as extreme}) / (permutations + 1)`.
    pub p_value: f64,
    pub seed: u64,
    pub alternative: Alternative,
    /// Permuted coefficients in replica order.
    #[serde(skip)]
    pub null_distribution: Vec<f64>,
}

// relative slack so that relabelings which are automorphisms compare equal
const TIE_EPS: f64 = 1e-12;

struct Prepared<'a> {
    a_centered: Vec<f64>,
    b: &'a SquareMatrix,
    b_mean: f64,
    denom: f64,
}

impl<'a> Prepared<'a> {
    fn new(a: &SquareMatrix, b: &'a SquareMatrix) -> Result<Self, AnalysisError> {
        let n = a.order();
        let off = |m: &SquareMatrix| -> Vec<f64> {
            (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| m.get(i, j))
                .collect()
        };
        let av = off(a);
        let bv = off(b);
        let count = av.len() as f64;
        let a_mean = av.iter().sum::<f64>() / count;
        let b_mean = bv.iter().sum::<f64>() / count;
        let a_centered: Vec<f64> = av.iter().map(|x| x - a_mean).collect();
        let saa: f64 = a_centered.iter().map(|x| x * x).sum();
        let sbb: f64 = bv.iter().map(|x| (x - b_mean).powi(2)).sum();
        if saa == 0.0 || sbb == 0.0 {
            return Err(AnalysisError::ZeroVariance);
        }
        Ok(Self {
            a_centered,
            b,
            b_mean,
            denom: saa.sqrt() * sbb.sqrt(),
        })
    }

    /// Off-diagonal correlation of A with `B` relabeled by `perm`.
    fn r(&self, perm: &[usize]) -> f64 {
        let mut cross = 0.0;
        let mut k = 0;
        for (i, &pi) in perm.iter().enumerate() {
            for (j, &pj) in perm.iter().enumerate() {
                if j == i {
                    continue;
                }
                cross += self.a_centered[k] * (self.b.get(pi, pj) - self.b_mean);
                k += 1;
            }
        }
        (cross / self.denom).clamp(-1.0, 1.0)
    }
}

/// Draws the permutation used by replica `replica`.
pub fn replica_permutation(n: usize, seed: u64, replica: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replica);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    perm
}

pub fn qap_correlation(
    a: &SquareMatrix,
    b: &SquareMatrix,
    permutations: usize,
    seed: u64,
    alternative: Alternative,
) -> Result<QapResult, AnalysisError> {
    if permutations < 1 {
        return Err(AnalysisError::NoPermutations);
    }
    if a.order() != b.order() {
        return Err(AnalysisError::ShapeMismatch);
    }
    if a.order() < 3 {
        return Err(AnalysisError::TooFewObservations {
            needed: 3,
            got: a.order(),
        });
    }
    let prepared = Prepared::new(a, b)?;
    let n = a.order();
    let identity: Vec<usize> = (0..n).collect();
    let observed = prepared.r(&identity);

    let null_distribution: Vec<f64> = (0..permutations as u64)
        .into_par_iter()
        .map(|k| prepared.r(&replica_permutation(n, seed, k)))
        .collect();

    let extreme = |r: f64| match alternative {
        Alternative::Greater => r >= observed - TIE_EPS * observed.abs().max(1.0),
        Alternative::TwoSided => r.abs() >= observed.abs() * (1.0 - TIE_EPS) - TIE_EPS,
    };
    let hits = null_distribution.iter().filter(|&&r| extreme(r)).count();
    Ok(QapResult {
        observed_r: observed,
        permutations,
        p_value: (1 + hits) as f64 / (permutations + 1) as f64,
        seed,
        alternative,
        null_distribution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compare::correlate::pearson;
    use rand::Rng;

    fn random_symmetric(n: usize, seed: u64) -> SquareMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                m.add_symmetric(i, j, rng.random::<f64>());
            }
        }
        m
    }

    fn off_diagonal(m: &SquareMatrix) -> Vec<f64> {
        let n = m.order();
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j))
            .collect()
    }

    #[test]
    fn self_correlation() {
        let a = random_symmetric(12, 1);
        let q = qap_correlation(&a, &a, 99, 7, Alternative::Greater).unwrap();
        assert!((q.observed_r - 1.0).abs() < 1e-12);
        assert_eq!(q.p_value, 1.0 / 100.0);
    }

    #[test]
    fn observed_matches_plain_pearson() {
        let a = random_symmetric(9, 2);
        let b = random_symmetric(9, 3);
        let q = qap_correlation(&a, &b, 10, 0, Alternative::Greater).unwrap();
        let r = pearson(&off_diagonal(&a), &off_diagonal(&b)).unwrap();
        assert!((q.observed_r - r).abs() < 1e-12);
    }

    #[test]
    fn joint_relabeling_preserves_r() {
        let a = random_symmetric(10, 4);
        let b = random_symmetric(10, 5);
        let perm = replica_permutation(10, 99, 3);
        let r1 = qap_correlation(&a, &b, 1, 0, Alternative::Greater).unwrap().observed_r;
        let r2 = qap_correlation(&a.permuted(&perm), &b.permuted(&perm), 1, 0, Alternative::Greater)
            .unwrap()
            .observed_r;
        assert!((r1 - r2).abs() < 1e-12);
    }

    #[test]
    fn deterministic_for_seed() {
        let a = random_symmetric(8, 6);
        let b = random_symmetric(8, 7);
        let x = qap_correlation(&a, &b, 200, 42, Alternative::TwoSided).unwrap();
        let y = qap_correlation(&a, &b, 200, 42, Alternative::TwoSided).unwrap();
        assert_eq!(x, y);
        assert!(x.p_value > 0.0 && x.p_value <= 1.0);
    }

    #[test]
    fn argument_errors() {
        let a = random_symmetric(5, 8);
        assert_eq!(
            qap_correlation(&a, &a, 0, 0, Alternative::Greater),
            Err(AnalysisError::NoPermutations)
        );
        assert_eq!(
            qap_correlation(&a, &random_symmetric(4, 1), 5, 0, Alternative::Greater),
            Err(AnalysisError::ShapeMismatch)
        );
        let flat = SquareMatrix::zeros(5);
        assert_eq!(
            qap_correlation(&a, &flat, 5, 0, Alternative::Greater),
            Err(AnalysisError::ZeroVariance)
        );
    }
}
