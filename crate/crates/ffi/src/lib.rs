//! C ABI for loading corpora, projecting co-authorship networks and reading
//! their metrics.
//!
//! Handles are opaque and owned by the caller once returned; release them with
//! the matching `*_free` function. Every function returns an [`FcStatus`];
//! on failure [`fc_last_error_message`] describes the problem. Strings handed
//! out by the library are NUL-terminated UTF-8 and must be released with
//! [`fc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use fraccount::compare::{qap_correlation, Alternative};
use fraccount::counting::{CoauthorshipNetwork, CountingScheme};
use fraccount::export::export_pajek;
use fraccount::ingest::{Level, Normalizer, ParsedCorpus};
use fraccount::metrics::{cohesion_report, degree_stats, DegreeMode};
use fraccount::pipeline::{build_network, load_corpus, parse_text, InputFormat, RunConfig};
use fraccount::{Error, ParseError};

/// Result code of every library call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An argument was out of its domain (unknown scheme, bad level, ...).
    InvalidArgument = 3,
    /// An index was past the end.
    OutOfRange = 4,
    /// The input text could not be parsed.
    ParseError = 5,
    /// A file could not be read.
    IoError = 6,
    /// The analysis is undefined for this input.
    AnalysisError = 7,
    /// An internal error was caught at the boundary.
    Panic = 8,
}

/// Country-level aggregation.
pub const FC_LEVEL_COUNTRY: u32 = 0;
/// Institution-level aggregation.
pub const FC_LEVEL_INSTITUTION: u32 = 1;

/// Parsed and normalized corpus.
pub struct FcCorpus {
    inner: ParsedCorpus,
}

/// Co-authorship network under one counting scheme.
pub struct FcNetwork {
    inner: CoauthorshipNetwork,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(message).ok());
}

struct Failure(FcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::ParseFile { .. } => FcStatus::ParseError,
            Error::Io { .. } => FcStatus::IoError,
            Error::Analysis(_) => FcStatus::AnalysisError,
            Error::Usage(_) => FcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure(FcStatus::ParseError, e.to_string())
    }
}

fn fail(status: FcStatus, message: impl Into<String>) -> Failure {
    Failure(status, message.into())
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> FcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FcStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal error".into());
            set_error(format!("panic: {message}"));
            FcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(FcStatus::NullPointer, format!("{name} is NULL")));
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| fail(FcStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    unsafe { p.as_ref() }.ok_or_else(|| fail(FcStatus::NullPointer, format!("{name} is NULL")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(FcStatus::NullPointer, "output pointer is NULL"));
    }
    unsafe { out.write(value) };
    Ok(())
}

fn level_arg(level: u32) -> Result<Level, Failure> {
    match level {
        FC_LEVEL_COUNTRY => Ok(Level::Country),
        FC_LEVEL_INSTITUTION => Ok(Level::Institution),
        other => Err(fail(FcStatus::InvalidArgument, format!("unknown level {other}"))),
    }
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(FcStatus::InvalidArgument, "string contains NUL"))
}

fn corpus_from_text(text: &str, format: InputFormat) -> Result<FcCorpus, Failure> {
    let mut inner = parse_text(text, format)?;
    inner.normalize(&Normalizer::default());
    Ok(FcCorpus { inner })
}

unsafe fn load_text(text: *const c_char, out: *mut *mut FcCorpus, format: InputFormat) -> FcStatus {
    guard(|| {
        let text = unsafe { str_arg(text, "text") }?;
        let corpus = corpus_from_text(text, format)?;
        unsafe { write_out(out, Box::into_raw(Box::new(corpus))) }
    })
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn fc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a JSONL corpus held in memory.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_corpus_from_jsonl(text: *const c_char, out: *mut *mut FcCorpus) -> FcStatus {
    unsafe { load_text(text, out, InputFormat::Jsonl) }
}

/// Parses a field-tagged Web of Science export held in memory.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_corpus_from_wos(text: *const c_char, out: *mut *mut FcCorpus) -> FcStatus {
    unsafe { load_text(text, out, InputFormat::Wos) }
}

/// Reads a corpus file; `.jsonl`, `.json` and `.ndjson` are JSONL, anything
/// else is a Web of Science export.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_corpus_load_file(path: *const c_char, out: *mut *mut FcCorpus) -> FcStatus {
    guard(|| {
        let path = unsafe { str_arg(path, "path") }?;
        let config = RunConfig {
            inputs: vec![PathBuf::from(path)],
            ..RunConfig::default()
        };
        let inner = load_corpus(&config)?;
        unsafe { write_out(out, Box::into_raw(Box::new(FcCorpus { inner }))) }
    })
}

/// Number of records in the corpus.
///
/// # Safety
/// `corpus` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_corpus_len(corpus: *const FcCorpus, out: *mut usize) -> FcStatus {
    guard(|| {
        let corpus = unsafe { ref_arg(corpus, "corpus") }?;
        unsafe { write_out(out, corpus.inner.len()) }
    })
}

/// Number of warnings raised while parsing.
///
/// # Safety
/// `corpus` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_corpus_warning_count(corpus: *const FcCorpus, out: *mut usize) -> FcStatus {
    guard(|| {
        let corpus = unsafe { ref_arg(corpus, "corpus") }?;
        unsafe { write_out(out, corpus.inner.warnings.len()) }
    })
}

/// Releases a corpus. NULL is ignored.
///
/// # Safety
/// `corpus` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_corpus_free(corpus: *mut FcCorpus) {
    if !corpus.is_null() {
        drop(unsafe { Box::from_raw(corpus) });
    }
}

/// Projects the corpus onto a network at `level` (`FC_LEVEL_*`) under the
/// named counting scheme, e.g. `"INTEGER_LINKS"` or `"FRACTIONAL_LINKS"`.
///
/// # Safety
/// `corpus` must come from this library, `scheme` must be a NUL-terminated
/// string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_network_project(
    corpus: *const FcCorpus,
    level: u32,
    scheme: *const c_char,
    out: *mut *mut FcNetwork,
) -> FcStatus {
    guard(|| {
        let corpus = unsafe { ref_arg(corpus, "corpus") }?;
        let scheme: CountingScheme = unsafe { str_arg(scheme, "scheme") }?
            .parse()
            .map_err(|e: fraccount::AnalysisError| fail(FcStatus::InvalidArgument, e.to_string()))?;
        let inner = build_network(&corpus.inner, level_arg(level)?, scheme);
        unsafe { write_out(out, Box::into_raw(Box::new(FcNetwork { inner }))) }
    })
}

/// Number of entities (nodes).
///
/// # Safety
/// `network` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_network_size(network: *const FcNetwork, out: *mut usize) -> FcStatus {
    guard(|| {
        let network = unsafe { ref_arg(network, "network") }?;
        unsafe { write_out(out, network.inner.order()) }
    })
}

/// Cell `(i, j)` of the network matrix.
///
/// # Safety
/// `network` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_network_get(network: *const FcNetwork, i: usize, j: usize, out: *mut f64) -> FcStatus {
    guard(|| {
        let network = unsafe { ref_arg(network, "network") }?;
        let n = network.inner.order();
        if i >= n || j >= n {
            return Err(fail(FcStatus::OutOfRange, format!("cell ({i}, {j}) outside {n} × {n}")));
        }
        unsafe { write_out(out, network.inner.matrix.get(i, j)) }
    })
}

/// Name of entity `i`; release with [`fc_string_free`].
///
/// # Safety
/// `network` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_network_entity(network: *const FcNetwork, i: usize, out: *mut *mut c_char) -> FcStatus {
    guard(|| {
        let network = unsafe { ref_arg(network, "network") }?;
        let name = network
            .inner
            .entities
            .get(i)
            .ok_or_else(|| fail(FcStatus::OutOfRange, format!("entity {i} of {}", network.inner.order())))?;
        unsafe { write_out(out, owned_string(name.clone())?) }
    })
}

fn json(value: &impl serde::Serialize) -> Result<*mut c_char, Failure> {
    let text = serde_json::to_string(value).map_err(|e| fail(FcStatus::Panic, e.to_string()))?;
    owned_string(text)
}

/// Cohesion report of the binarized network as JSON.
///
/// # Safety
/// `network` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_network_cohesion_json(network: *const FcNetwork, out: *mut *mut c_char) -> FcStatus {
    guard(|| {
        let network = unsafe { ref_arg(network, "network") }?;
        unsafe { write_out(out, json(&cohesion_report(&network.inner))?) }
    })
}

/// Degree battery as JSON; `binary` non-zero uses the binarized network.
///
/// # Safety
/// `network` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_network_degree_json(
    network: *const FcNetwork,
    binary: i32,
    out: *mut *mut c_char,
) -> FcStatus {
    guard(|| {
        let network = unsafe { ref_arg(network, "network") }?;
        let mode = if binary != 0 { DegreeMode::Binary } else { DegreeMode::Valued };
        unsafe { write_out(out, json(&degree_stats(&network.inner, mode))?) }
    })
}

/// Network in Pajek `.net` format.
///
/// # Safety
/// `network` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_network_pajek(network: *const FcNetwork, out: *mut *mut c_char) -> FcStatus {
    guard(|| {
        let network = unsafe { ref_arg(network, "network") }?;
        unsafe { write_out(out, owned_string(export_pajek(&network.inner))?) }
    })
}

/// Releases a network. NULL is ignored.
///
/// # Safety
/// `network` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_network_free(network: *mut FcNetwork) {
    if !network.is_null() {
        drop(unsafe { Box::from_raw(network) });
    }
}

/// QAP correlation of two networks over the same entities. `two_sided`
/// non-zero counts `|r|`; otherwise the test is one-sided (greater).
///
/// # Safety
/// `a` and `b` must come from this library; `r` and `p` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_qap(
    a: *const FcNetwork,
    b: *const FcNetwork,
    permutations: usize,
    seed: u64,
    two_sided: i32,
    r: *mut f64,
    p: *mut f64,
) -> FcStatus {
    guard(|| {
        let a = unsafe { ref_arg(a, "a") }?;
        let b = unsafe { ref_arg(b, "b") }?;
        if r.is_null() || p.is_null() {
            return Err(fail(FcStatus::NullPointer, "output pointer is NULL"));
        }
        if a.inner.entities != b.inner.entities {
            return Err(fail(FcStatus::AnalysisError, "networks have different entity sets"));
        }
        let alternative = if two_sided != 0 { Alternative::TwoSided } else { Alternative::Greater };
        let result = qap_correlation(&a.inner.matrix, &b.inner.matrix, permutations, seed, alternative)
            .map_err(|e| fail(FcStatus::AnalysisError, e.to_string()))?;
        unsafe {
            write_out(r, result.observed_r)?;
            write_out(p, result.p_value)
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
