//! Corpus loading and network construction shared by the CLI and the FFI.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::counting::{build_occurrence_matrix, project_network, CoauthorshipNetwork, CountingScheme};
use crate::error::{Error, ParseError, Result};
use crate::ingest::{
    filter_corpus, load_jsonl_corpus, parse_wos_export, CorpusFilter, Level, Normalizer, ParsedCorpus,
};

/// Environment variable naming a directory with `country.tsv` and/or
/// `institution.tsv` default normalization tables.
pub const NORM_DIR_ENV: &str = "FRACCOUNT_NORM_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Wos,
    Jsonl,
}

impl InputFormat {
    /// `.jsonl`/`.json`/`.ndjson` are JSONL; anything else is a WoS export.
    pub fn infer(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("jsonl" | "json" | "ndjson") => InputFormat::Jsonl,
            _ => InputFormat::Wos,
        }
    }
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "wos" => Ok(InputFormat::Wos),
            "jsonl" => Ok(InputFormat::Jsonl),
            other => Err(format!("unknown input format `{other}`")),
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputFormat::Wos => "wos",
            InputFormat::Jsonl => "jsonl",
        })
    }
}

/// A normalization table file and the level it applies to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormTableSpec {
    pub level: Level,
    pub path: PathBuf,
}

impl FromStr for NormTableSpec {
    type Err = String;

    /// `country:PATH`, `institution:PATH`, or a bare `PATH` (country).
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        for (prefix, level) in [("country:", Level::Country), ("institution:", Level::Institution)] {
            if let Some(path) = s.strip_prefix(prefix) {
                return Ok(Self {
                    level,
                    path: path.into(),
                });
            }
        }
        if s.is_empty() {
            return Err("empty normalization table path".into());
        }
        Ok(Self {
            level: Level::Country,
            path: s.into(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    /// `None` infers the format per file from its extension.
    pub format: Option<InputFormat>,
    pub level: Level,
    pub schemes: Vec<CountingScheme>,
    pub norm_tables: Vec<NormTableSpec>,
    pub norm_dir: Option<PathBuf>,
    pub filter: CorpusFilter,
    pub out: Option<PathBuf>,
    pub permutations: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            inputs: Vec::new(),
            format: None,
            level: Level::Country,
            schemes: vec![CountingScheme::IntegerLinks],
            norm_tables: Vec::new(),
            norm_dir: None,
            filter: CorpusFilter::default(),
            out: None,
            permutations: 999,
            seed: 1,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))
}

pub fn parse_text(text: &str, format: InputFormat) -> std::result::Result<ParsedCorpus, ParseError> {
    match format {
        InputFormat::Wos => parse_wos_export(text),
        InputFormat::Jsonl => load_jsonl_corpus(text),
    }
}

/// Built-in tables, then the environment directory, then explicit files.
pub fn load_normalizer(config: &RunConfig) -> Result<Normalizer> {
    let mut normalizer = Normalizer::default();
    if let Some(dir) = &config.norm_dir {
        for level in [Level::Country, Level::Institution] {
            let path = dir.join(format!("{level}.tsv"));
            if path.is_file() {
                merge_table(&mut normalizer, level, &path)?;
            }
        }
    }
    for spec in &config.norm_tables {
        merge_table(&mut normalizer, spec.level, &spec.path)?;
    }
    Ok(normalizer)
}

fn merge_table(normalizer: &mut Normalizer, level: Level, path: &Path) -> Result<()> {
    let text = read(path)?;
    normalizer
        .table_mut(level)
        .merge_tsv(&text)
        .map_err(|source| Error::ParseFile {
            path: path.display().to_string(),
            source,
        })
}

/// Reads every input (in parallel), concatenates in input order, normalizes
/// and filters. Record ids must be unique across all inputs.
pub fn load_corpus(config: &RunConfig) -> Result<ParsedCorpus> {
    let normalizer = load_normalizer(config)?;
    let parts: Vec<Result<ParsedCorpus>> = config
        .inputs
        .par_iter()
        .map(|path| {
            let text = read(path)?;
            let format = config.format.unwrap_or_else(|| InputFormat::infer(path));
            parse_text(&text, format).map_err(|source| Error::ParseFile {
                path: path.display().to_string(),
                source,
            })
        })
        .collect();

    let mut corpus = ParsedCorpus::default();
    let mut seen = std::collections::HashSet::new();
    for (path, part) in config.inputs.iter().zip(parts) {
        let part = part?;
        for record in &part.records {
            if !seen.insert(record.id.clone()) {
                return Err(Error::ParseFile {
                    path: path.display().to_string(),
                    source: ParseError::DuplicateId {
                        line: 0,
                        id: record.id.clone(),
                    },
                });
            }
        }
        corpus.records.extend(part.records);
        corpus.warnings.extend(part.warnings);
    }
    corpus.normalize(&normalizer);
    let mut filter = config.filter.clone();
    filter.required_countries = filter
        .required_countries
        .iter()
        .map(|c| normalizer.table(Level::Country).normalize(c))
        .collect();
    corpus.records = filter_corpus(&corpus.records, &filter);
    Ok(corpus)
}

pub fn build_network(corpus: &ParsedCorpus, level: Level, scheme: CountingScheme) -> CoauthorshipNetwork {
    project_network(&build_occurrence_matrix(&corpus.records, level), scheme)
}
