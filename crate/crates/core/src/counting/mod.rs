//! Occurrence matrices, their projection into co-authorship networks, and
//! per-entity production credits.

pub mod credits;
pub mod network;
pub mod occurrence;
pub mod scheme;

pub use credits::{document_credits, production_credits, ProductionCredit};
pub use network::{binarize, document_link_fractions, project_network, CoauthorshipNetwork, LinkFractions};
pub use occurrence::{build_occurrence_matrix, document_profile, EntityShare, OccurrenceMatrix};
pub use scheme::{CountingScheme, CreditScheme};
