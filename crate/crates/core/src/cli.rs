//! The `fraccount` command line.
//!
//! Exit codes: 0 success, 1 usage or analysis error, 2 malformed input,
//! 3 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::compare::{compare_networks, qap_correlation, rank_vector, Alternative, ComparisonOptions};
use crate::counting::{build_occurrence_matrix, CountingScheme};
use crate::error::{Error, Result};
use crate::export::{
    csv_out::{csv_err, writer},
    write_cohesion_csv, write_comparison_csv, write_degree_csv, write_matrix_csv, write_occurrence_csv,
    write_pajek, write_rank_csv,
};
use crate::ingest::{CorpusFilter, DocumentRecord, Level, ParsedCorpus};
use crate::metrics::{cohesion_report, degree_stats, CohesionReport, DegreeMode, DegreeStats};
use crate::pipeline::{build_network, load_corpus, InputFormat, NormTableSpec, RunConfig, NORM_DIR_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fraccount", version, about = "Integer and fractional counting of co-authorship networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse the inputs and report records and warnings.
    Parse,
    /// Write the document × entity occurrence matrix.
    Matrix,
    /// Write the co-authorship network under `--scheme`.
    Net,
    /// Cohesion and degree centralization of the `--scheme` network.
    Metrics,
    /// Rank entities by normalized degree under `--scheme`.
    Rank,
    /// Compare `--scheme` against `--scheme-b`.
    Compare,
    /// QAP correlation between the `--scheme` and `--scheme-b` networks.
    Qap,
    /// Write the `--scheme` network as a Pajek `.net` file.
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Options {
    /// Input corpus file; repeat for several files.
    #[arg(long = "in", value_name = "PATH", global = true)]
    inputs: Vec<PathBuf>,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_parser = parse_format, global = true)]
    format: Option<InputFormat>,
    #[arg(long, default_value = "country", value_parser = parse_level, global = true)]
    level: Level,
    #[arg(long, default_value = "INTEGER_LINKS", value_parser = parse_scheme, global = true)]
    scheme: CountingScheme,
    /// Second scheme for `compare` and `qap`.
    #[arg(long = "scheme-b", value_parser = parse_scheme, global = true)]
    scheme_b: Option<CountingScheme>,
    /// Single year (`2014`) or inclusive range (`2010-2014`).
    #[arg(long, value_parser = parse_years, global = true)]
    year: Option<RangeInclusive<i32>>,
    /// Keep only records with an address in this country; repeatable.
    #[arg(long = "require-country", value_name = "COUNTRY", global = true)]
    require_country: Vec<String>,
    /// `country:PATH`, `institution:PATH` or a bare country table path.
    #[arg(long = "norm-table", value_name = "SPEC", value_parser = parse_norm_table, global = true)]
    norm_tables: Vec<NormTableSpec>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 999, global = true)]
    permutations: usize,
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    /// QAP counts `|r|` instead of `r`.
    #[arg(long = "two-sided", global = true)]
    two_sided: bool,
    #[arg(long, value_enum, global = true)]
    report: Option<ReportFormat>,
}

fn parse_format(s: &str) -> std::result::Result<InputFormat, String> {
    s.parse()
}

fn parse_level(s: &str) -> std::result::Result<Level, String> {
    s.parse::<Level>().map_err(|e| e.to_string())
}

fn parse_scheme(s: &str) -> std::result::Result<CountingScheme, String> {
    s.parse::<CountingScheme>().map_err(|e| e.to_string())
}

fn parse_norm_table(s: &str) -> std::result::Result<NormTableSpec, String> {
    s.parse()
}

fn parse_years(s: &str) -> std::result::Result<RangeInclusive<i32>, String> {
    let bad = || format!("expected YEAR or FROM-TO, got `{s}`");
    let (from, to) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let y = s.trim().parse().map_err(|_| bad())?;
            (y, y)
        }
    };
    if from > to {
        return Err(format!("empty year range `{s}`"));
    }
    Ok(from..=to)
}

/// Runs the command line and returns the process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("fraccount: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Analysis(_) => EXIT_USAGE,
        Error::Parse(_) | Error::ParseFile { .. } => EXIT_PARSE,
        Error::Io { .. } => EXIT_IO,
    }
}

fn config(opts: &Options) -> RunConfig {
    RunConfig {
        inputs: opts.inputs.clone(),
        format: opts.format,
        level: opts.level,
        schemes: std::iter::once(opts.scheme).chain(opts.scheme_b).collect(),
        norm_tables: opts.norm_tables.clone(),
        norm_dir: std::env::var_os(NORM_DIR_ENV).map(PathBuf::from),
        filter: CorpusFilter {
            years: opts.year.clone(),
            required_countries: opts.require_country.iter().cloned().collect(),
        },
        out: opts.out.clone(),
        permutations: opts.permutations,
        seed: opts.seed,
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MetricsReport<'a> {
    scheme: CountingScheme,
    level: String,
    cohesion: &'a CohesionReport,
    degree: &'a DegreeStats,
    binary_degree: &'a DegreeStats,
}

fn run(cli: Cli) -> Result<()> {
    let opts = &cli.opts;
    if opts.inputs.is_empty() {
        return Err(Error::Usage("at least one --in file is required".into()));
    }
    let second = || {
        opts.scheme_b
            .ok_or_else(|| Error::Usage("this command needs --scheme-b".into()))
    };
    let config = config(opts);
    if matches!(cli.command, Command::Compare | Command::Qap) {
        second()?;
    }
    let corpus = load_corpus(&config)?;
    for w in &corpus.warnings {
        eprintln!("warning: record {} (line {}): {}", w.record, w.line, w.message);
    }
    let out = opts.out.as_deref();
    let report = |default| opts.report.unwrap_or(default);
    let level = opts.level;

    match cli.command {
        Command::Parse => {
            let body = match report(ReportFormat::Json) {
                ReportFormat::Json => json(&corpus)?,
                ReportFormat::Csv => render(|w| write_records_csv(&corpus, w))?,
            };
            emit(out, &body, || {
                let usable = corpus.records.iter().filter(|r| r.has_usable_address()).count();
                format!(
                    "{} records ({usable} with a usable address), {} warnings",
                    corpus.len(),
                    corpus.warnings.len()
                )
            })
        }
        Command::Matrix => {
            let occ = build_occurrence_matrix(&corpus.records, level);
            let body = match report(ReportFormat::Csv) {
                ReportFormat::Json => json(&occ)?,
                ReportFormat::Csv => render(|w| write_occurrence_csv(&occ, w))?,
            };
            emit(out, &body, || {
                format!("{} documents × {} {level} entities", occ.documents.len(), occ.entities.len())
            })
        }
        Command::Net | Command::Export => {
            let net = build_network(&corpus, level, opts.scheme);
            let pajek = matches!(cli.command, Command::Export)
                || out.is_some_and(|p| p.extension().is_some_and(|e| e == "net"));
            let body = if pajek {
                render(|w| write_pajek(&net, w))?
            } else {
                match report(ReportFormat::Csv) {
                    ReportFormat::Json => json(&net)?,
                    ReportFormat::Csv => render(|w| write_matrix_csv(&net.entities, &net.matrix, w))?,
                }
            };
            emit(out, &body, || {
                format!(
                    "{} network: {} {level} entities from {} documents ({} multi-entity)",
                    net.scheme,
                    net.order(),
                    net.document_count,
                    net.multi_entity_document_count
                )
            })
        }
        Command::Metrics => {
            let net = build_network(&corpus, level, opts.scheme);
            let cohesion = cohesion_report(&net);
            let degree = degree_stats(&net, DegreeMode::Valued);
            let binary_degree = degree_stats(&net, DegreeMode::Binary);
            let body = match report(ReportFormat::Json) {
                ReportFormat::Json => json(&MetricsReport {
                    scheme: net.scheme,
                    level: level.to_string(),
                    cohesion: &cohesion,
                    degree: &degree,
                    binary_degree: &binary_degree,
                })?,
                ReportFormat::Csv => {
                    let mut body = render(|w| write_cohesion_csv(&cohesion, w))?;
                    body.push(b'\n');
                    body.extend(render(|w| write_degree_csv(&degree, w))?);
                    body
                }
            };
            emit(out, &body, || {
                format!(
                    "{} network of {} entities: density {:.4}, diameter {}",
                    net.scheme,
                    net.order(),
                    cohesion.density,
                    cohesion.diameter
                )
            })
        }
        Command::Rank => {
            let net = build_network(&corpus, level, opts.scheme);
            let degree = degree_stats(&net, DegreeMode::Valued);
            let table = rank_vector(&net.entities, &degree.nrm_degree)?;
            let body = match report(ReportFormat::Csv) {
                ReportFormat::Json => json(&table)?,
                ReportFormat::Csv => render(|w| write_rank_csv(&table, w))?,
            };
            emit(out, &body, || format!("ranked {} entities under {}", table.len(), net.scheme))
        }
        Command::Compare => {
            let a = build_network(&corpus, level, opts.scheme);
            let b = build_network(&corpus, level, second()?);
            let cmp = compare_networks(
                &a,
                &b,
                ComparisonOptions {
                    permutations: opts.permutations,
                    seed: opts.seed,
                    alternative: alternative(opts),
                },
            )?;
            let body = match report(ReportFormat::Json) {
                ReportFormat::Json => json(&cmp)?,
                ReportFormat::Csv => render(|w| write_comparison_csv(&cmp, w))?,
            };
            emit(out, &body, || {
                let moved = cmp.rank_deltas.iter().filter(|d| d.delta != 0).count();
                format!(
                    "{} vs {} over {} entities: {moved} rank changes",
                    cmp.scheme_a,
                    cmp.scheme_b,
                    a.order()
                )
            })
        }
        Command::Qap => {
            let a = build_network(&corpus, level, opts.scheme);
            let b = build_network(&corpus, level, second()?);
            let result = qap_correlation(&a.matrix, &b.matrix, opts.permutations, opts.seed, alternative(opts))?;
            let body = match report(ReportFormat::Json) {
                ReportFormat::Json => json(&result)?,
                ReportFormat::Csv => render(|out| {
                    let mut w = writer(out);
                    w.write_record(["observedR", "permutations", "pValue", "seed", "alternative"])
                        .map_err(csv_err)?;
                    w.write_record([
                        result.observed_r.to_string(),
                        result.permutations.to_string(),
                        result.p_value.to_string(),
                        result.seed.to_string(),
                        match result.alternative {
                            Alternative::Greater => "greater".into(),
                            Alternative::TwoSided => "twosided".to_string(),
                        },
                    ])
                    .map_err(csv_err)?;
                    w.flush()
                })?,
            };
            emit(out, &body, || {
                format!(
                    "QAP r = {:.6}, p = {:.4} ({} permutations, seed {})",
                    result.observed_r, result.p_value, result.permutations, result.seed
                )
            })
        }
    }
}

fn alternative(opts: &Options) -> Alternative {
    if opts.two_sided {
        Alternative::TwoSided
    } else {
        Alternative::Greater
    }
}

fn write_records_csv<W: Write>(corpus: &ParsedCorpus, out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(["id", "year", "authors", "addresses", "countries", "institutions"])
        .map_err(csv_err)?;
    for r in &corpus.records {
        let join = |level| {
            let mut names: Vec<String> = r.usable_addresses().map(|a| DocumentRecord::entity(a, level).to_string()).collect();
            names.sort();
            names.dedup();
            names.join("; ")
        };
        w.write_record([
            r.id.clone(),
            r.year.map(|y| y.to_string()).unwrap_or_default(),
            r.authors.len().to_string(),
            r.addresses.len().to_string(),
            join(Level::Country),
            join(Level::Institution),
        ])
        .map_err(csv_err)?;
    }
    w.flush()
}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut body = serde_json::to_vec_pretty(value).map_err(|e| Error::Usage(format!("serializing report: {e}")))?;
    body.push(b'\n');
    Ok(body)
}

fn render(f: impl FnOnce(&mut Vec<u8>) -> io::Result<()>) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    f(&mut buf).map_err(|e| Error::io("<memory>", e))?;
    Ok(buf)
}

/// Writes the report to `out` and prints a one-line summary, or writes the
/// report itself to standard output.
fn emit(out: Option<&Path>, body: &[u8], summary: impl FnOnce() -> String) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| Error::io(path.display().to_string(), e))?;
            println!("{} -> {}", summary(), path.display());
        }
        None => {
            let mut stdout = io::stdout().lock();
            match stdout.write_all(body).and_then(|()| stdout.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(Error::io("<stdout>", e)),
                _ => {}
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn year_ranges() {
        assert_eq!(parse_years("2014"), Ok(2014..=2014));
        assert_eq!(parse_years("2010-2014"), Ok(2010..=2014));
        assert!(parse_years("2014-2010").is_err());
        assert!(parse_years("recent").is_err());
    }

    #[test]
    fn help_and_unknown_scheme() {
        assert_eq!(run_cli(["fraccount", "--help"]), EXIT_OK);
        assert_eq!(run_cli(["fraccount", "--version"]), EXIT_OK);
        assert_eq!(run_cli(["fraccount", "net", "--scheme", "HALF"]), EXIT_USAGE);
        assert_eq!(run_cli(["fraccount", "net"]), EXIT_USAGE);
        assert_eq!(run_cli(["fraccount", "net", "--in", "/nonexistent/corpus.jsonl"]), EXIT_IO);
    }
}
