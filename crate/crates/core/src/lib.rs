//! Co-authorship networks from publication records under binary, integer
//! and fractional counting, with whole-network cohesion and degree
//! centralization measures and tools for comparing counting schemes.

pub mod cli;
pub mod compare;
pub mod counting;
pub mod error;
pub mod export;
pub mod ingest;
pub mod matrix;
pub mod metrics;
pub mod pipeline;

pub use error::{AnalysisError, Error, ParseError, Result};
