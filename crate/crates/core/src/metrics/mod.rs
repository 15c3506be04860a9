//! Cohesion and degree-centralization measures.

pub mod cohesion;
pub mod degree;
pub mod geodesic;
pub mod graph;

pub use cohesion::{
    closure, cohesion_of_graph, cohesion_report, density_degree, freeman_centralization, h_index,
    h_index_degrees, triangle_count, CohesionReport, DensityDegree,
};
pub use degree::{degree_stats, degree_stats_from_degrees, Aggregates, DegreeMode, DegreeStats};
pub use geodesic::{all_pairs_geodesics, distance_histogram, summarize_histogram, GeodesicSummary};
pub use graph::BinaryGraph;
