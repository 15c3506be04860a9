use serde::Serialize;

use super::geodesic::{all_pairs_geodesics, GeodesicSummary};
use super::graph::BinaryGraph;
use crate::counting::CoauthorshipNetwork;

/// Whole-network cohesion measures of the binarized network.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CohesionReport {
    pub density: f64,
    pub avg_degree: f64,
    pub h_index: usize,
    pub compactness: f64,
    pub closure: f64,
    pub avg_distance: f64,
    pub sd_distance: f64,
    pub wiener: f64,
    pub diameter: u32,
    /// Freeman degree centralization as a fraction; absent for `n < 3`.
    pub deg_centralization: Option<f64>,
    pub nulls: f64,
    pub dependency_sum: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DensityDegree {
    pub density: f64,
    pub avg_degree: f64,
    pub nulls: f64,
}

pub fn density_degree(graph: &BinaryGraph) -> DensityDegree {
    let n = graph.order();
    if n < 2 {
        return DensityDegree {
            density: 0.0,
            avg_degree: 0.0,
            nulls: 0.0,
        };
    }
    let arcs = 2 * graph.edge_count();
    let possible = n * (n - 1);
    DensityDegree {
        density: arcs as f64 / possible as f64,
        avg_degree: arcs as f64 / n as f64,
        nulls: (possible - arcs) as f64 / possible as f64,
    }
}

pub fn h_index_degrees(graph: &BinaryGraph) -> usize {
    h_index(&graph.degrees())
}

/// Largest `x` such that at least `x` values are `>= x`.
pub fn h_index(degrees: &[usize]) -> usize {
    let mut degrees = degrees.to_vec();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
        .iter()
        .enumerate()
        .take_while(|&(i, &d)| d > i)
        .count()
}

/// Number of triangles, via bitset intersection of neighbourhoods.
pub fn triangle_count(graph: &BinaryGraph) -> u64 {
    let n = graph.order();
    let words = n.div_ceil(64);
    let mut bits = vec![0u64; n * words];
    for v in 0..n {
        for &w in graph.neighbors(v) {
            bits[v * words + w as usize / 64] |= 1 << (w % 64);
        }
    }
    let mut closed = 0u64;
    for u in 0..n {
        let bu = &bits[u * words..(u + 1) * words];
        for &v in graph.neighbors(u) {
            let v = v as usize;
            if v <= u {
                continue;
            }
            let bv = &bits[v * words..(v + 1) * words];
            closed += bu
                .iter()
                .zip(bv)
                .map(|(a, b)| u64::from((a & b).count_ones()))
                .sum::<u64>();
        }
    }
    // every triangle is seen once from each of its three edges
    closed / 3
}

/// Transitive ordered two-paths over all ordered two-paths `i–j–k`, `i ≠ k`.
pub fn closure(graph: &BinaryGraph) -> f64 {
    let two_paths: u64 = graph
        .degrees()
        .iter()
        .map(|&d| (d as u64) * (d as u64).saturating_sub(1))
        .sum();
    if two_paths == 0 {
        return 0.0;
    }
    (6 * triangle_count(graph)) as f64 / two_paths as f64
}

/// Freeman centralization `Σ(d_max − d_i) / ((n−1)(n−2))`.
pub fn freeman_centralization(graph: &BinaryGraph) -> Option<f64> {
    let n = graph.order();
    if n < 3 {
        return None;
    }
    let degrees = graph.degrees();
    let max = degrees.iter().copied().max().unwrap_or(0);
    let gap: usize = degrees.iter().map(|&d| max - d).sum();
    Some(gap as f64 / ((n - 1) * (n - 2)) as f64)
}

pub fn cohesion_of_graph(graph: &BinaryGraph) -> CohesionReport {
    let dd = density_degree(graph);
    let GeodesicSummary {
        avg_distance,
        sd_distance,
        wiener,
        diameter,
        compactness,
        dependency_sum,
        ..
    } = all_pairs_geodesics(graph);
    CohesionReport {
        density: dd.density,
        avg_degree: dd.avg_degree,
        h_index: h_index_degrees(graph),
        compactness,
        closure: closure(graph),
        avg_distance,
        sd_distance,
        wiener,
        diameter,
        deg_centralization: freeman_centralization(graph),
        nulls: dd.nulls,
        dependency_sum,
    }
}

/// Cohesion battery on the support of `net`, whatever its counting scheme.
pub fn cohesion_report(net: &CoauthorshipNetwork) -> CohesionReport {
    cohesion_of_graph(&BinaryGraph::from_network(net))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> BinaryGraph {
        BinaryGraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    #[test]
    fn triangle_graph() {
        let g = complete(3);
        let dd = density_degree(&g);
        assert_eq!((dd.density, dd.avg_degree, dd.nulls), (1.0, 2.0, 0.0));
        assert_eq!(closure(&g), 1.0);
    }

    #[test]
    fn path_has_no_closure() {
        assert_eq!(closure(&BinaryGraph::from_edges(3, [(0, 1), (1, 2)])), 0.0);
        assert_eq!(closure(&BinaryGraph::empty(4)), 0.0);
    }

    #[test]
    fn k4_minus_edge_closure() {
        // 2 triangles → 12 transitive ordered two-paths out of Σ d(d−1) = 16
        let g = BinaryGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(triangle_count(&g), 2);
        assert_eq!(closure(&g), 0.75);
    }

    #[test]
    fn h_index_cases() {
        assert_eq!(h_index(&[3, 3, 2, 1]), 2);
        assert_eq!(h_index(&[]), 0);
        let g = BinaryGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4)]);
        assert_eq!(h_index_degrees(&g), 2);
        assert_eq!(h_index_degrees(&BinaryGraph::empty(6)), 0);
        assert_eq!(h_index_degrees(&complete(5)), 4);
    }

    #[test]
    fn single_edge() {
        let r = cohesion_of_graph(&BinaryGraph::from_edges(2, [(0, 1)]));
        assert_eq!(r.density, 1.0);
        assert_eq!(r.diameter, 1);
        assert_eq!(r.h_index, 1);
        assert_eq!(r.deg_centralization, None);
    }

    #[test]
    fn star_is_fully_centralized() {
        let g = BinaryGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(freeman_centralization(&g), Some(1.0));
        assert_eq!(freeman_centralization(&complete(4)), Some(0.0));
    }
}
