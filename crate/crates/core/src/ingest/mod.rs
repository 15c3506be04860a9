//! Reading publication records and canonicalizing their affiliations.

pub mod address;
pub mod filter;
pub mod jsonl;
pub mod normalize;
pub mod record;
pub mod wos;

pub use address::{parse_address, split_address, Address, ParsedAddress};
pub use filter::{filter_corpus, CorpusFilter};
pub use jsonl::load_jsonl_corpus;
pub use normalize::{normalize_entity, Level, NormalizationTable, Normalizer};
pub use record::{DocumentRecord, ParseWarning, ParsedCorpus};
pub use wos::parse_wos_export;
