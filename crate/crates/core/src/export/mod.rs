//! Writers for networks (Pajek, CSV) and report tables.

pub mod csv_out;
pub mod pajek;
pub mod report;

pub use csv_out::{export_matrix_csv, format_cell, write_matrix_csv, write_occurrence_csv};
pub use pajek::{export_pajek, format_sig6, read_pajek, write_pajek};
pub use report::{
    cohesion_rows, write_cohesion_csv, write_comparison_csv, write_degree_csv, write_rank_csv,
};
