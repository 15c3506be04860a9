//! Breadth-first all-pairs distances on the binarized network.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::graph::BinaryGraph;

/// Distance moments over ordered reachable pairs.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GeodesicSummary {
    pub avg_distance: f64,
    /// Population standard deviation.
    pub sd_distance: f64,
    /// Sum of distances over ordered reachable pairs.
    pub wiener: f64,
    pub diameter: u32,
    /// Mean reciprocal distance over all `n(n-1)` ordered pairs; unreachable
    /// pairs contribute zero.
    pub compactness: f64,
    pub reachable_ordered_pairs: u64,
    /// `Σ (d(s,t) − 1)` over ordered reachable pairs.
    pub dependency_sum: f64,
}

/// `hist[d]` = number of ordered pairs at distance `d` (index 0 unused).
pub fn distance_histogram(graph: &BinaryGraph) -> Vec<u64> {
    let n = graph.order();
    (0..n)
        .into_par_iter()
        .fold(
            || (vec![0u64; n.max(1)], vec![u32::MAX; n], VecDeque::new()),
            |(mut hist, mut dist, mut queue), source| {
                dist.fill(u32::MAX);
                dist[source] = 0;
                queue.clear();
                queue.push_back(source);
                while let Some(v) = queue.pop_front() {
                    let next = dist[v] + 1;
                    for &w in graph.neighbors(v) {
                        let w = w as usize;
                        if dist[w] == u32::MAX {
                            dist[w] = next;
                            hist[next as usize] += 1;
                            queue.push_back(w);
                        }
                    }
                }
                (hist, dist, queue)
            },
        )
        .map(|(hist, _, _)| hist)
        .reduce(
            || vec![0u64; n.max(1)],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

pub fn summarize_histogram(n: usize, hist: &[u64]) -> GeodesicSummary {
    let pairs: u64 = hist.iter().skip(1).sum();
    if n < 2 || pairs == 0 {
        return GeodesicSummary::default();
    }
    let mut wiener = 0u128;
    let mut reciprocal = 0.0;
    let mut diameter = 0;
    for (d, &count) in hist.iter().enumerate().skip(1) {
        if count > 0 {
            wiener += d as u128 * u128::from(count);
            reciprocal += count as f64 / d as f64;
            diameter = d as u32;
        }
    }
    let wiener = wiener as f64;
    let avg = wiener / pairs as f64;
    let var = hist
        .iter()
        .enumerate()
        .skip(1)
        .map(|(d, &c)| c as f64 * (d as f64 - avg).powi(2))
        .sum::<f64>()
        / pairs as f64;
    GeodesicSummary {
        avg_distance: avg,
        sd_distance: var.sqrt(),
        wiener,
        diameter,
        compactness: reciprocal / (n as f64 * (n as f64 - 1.0)),
        reachable_ordered_pairs: pairs,
        dependency_sum: wiener - pairs as f64,
    }
}

pub fn all_pairs_geodesics(graph: &BinaryGraph) -> GeodesicSummary {
    if graph.order() < 2 {
        return GeodesicSummary::default();
    }
    summarize_histogram(graph.order(), &distance_histogram(graph))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn path_of_three() {
        let g = BinaryGraph::from_edges(3, [(0, 1), (1, 2)]);
        let s = all_pairs_geodesics(&g);
        close(s.avg_distance, 4.0 / 3.0);
        assert_eq!(s.wiener, 8.0);
        assert_eq!(s.diameter, 2);
        close(s.compactness, 5.0 / 6.0);
        assert_eq!(s.dependency_sum, 2.0);
        assert_eq!(s.reachable_ordered_pairs, 6);
        close(s.sd_distance, (2.0f64 / 9.0).sqrt());
    }

    #[test]
    fn complete_four() {
        let g = BinaryGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let s = all_pairs_geodesics(&g);
        assert_eq!(s.avg_distance, 1.0);
        assert_eq!(s.diameter, 1);
        assert_eq!(s.compactness, 1.0);
        assert_eq!(s.dependency_sum, 0.0);
        assert_eq!(s.sd_distance, 0.0);
    }

    #[test]
    fn tiny_and_disconnected() {
        assert_eq!(all_pairs_geodesics(&BinaryGraph::empty(1)), GeodesicSummary::default());
        assert_eq!(all_pairs_geodesics(&BinaryGraph::empty(0)), GeodesicSummary::default());
        let s = all_pairs_geodesics(&BinaryGraph::empty(5));
        assert_eq!(s.reachable_ordered_pairs, 0);
        assert_eq!(s.compactness, 0.0);
        // two components: an edge and an isolated node
        let s = all_pairs_geodesics(&BinaryGraph::from_edges(3, [(0, 1)]));
        assert_eq!(s.reachable_ordered_pairs, 2);
        assert_eq!(s.avg_distance, 1.0);
        close(s.compactness, 2.0 / 6.0);
    }

    #[test]
    fn published_diameter_two_histogram() {
        // 10338 adjacent and 5162 distance-2 ordered pairs over n = 125
        let s = summarize_histogram(125, &[0, 10338, 5162]);
        assert_eq!(s.wiener, 20662.0);
        assert_eq!(s.dependency_sum, 5162.0);
        assert!((s.avg_distance - 1.333).abs() < 5e-4);
        assert!((s.sd_distance - 0.471).abs() < 5e-4);
        assert!((s.compactness - 0.833).abs() < 5e-4);
    }
}
