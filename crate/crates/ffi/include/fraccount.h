/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef FRACCOUNT_H
#define FRACCOUNT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Country-level aggregation.
#define FC_LEVEL_COUNTRY 0

// Institution-level aggregation.
#define FC_LEVEL_INSTITUTION 1

// Result code of every library call.
typedef enum FcStatus {
  FC_STATUS_OK = 0,
  // A required pointer argument was NULL.
  FC_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  FC_STATUS_INVALID_UTF8 = 2,
  // An argument was out of its domain (unknown scheme, bad level, ...).
  FC_STATUS_INVALID_ARGUMENT = 3,
  // An index was past the end.
  FC_STATUS_OUT_OF_RANGE = 4,
  // The input text could not be parsed.
  FC_STATUS_PARSE_ERROR = 5,
  // A file could not be read.
  FC_STATUS_IO_ERROR = 6,
  // The analysis is undefined for this input.
  FC_STATUS_ANALYSIS_ERROR = 7,
  // An internal error was caught at the boundary.
  FC_STATUS_PANIC = 8,
} FcStatus;

// Parsed and normalized corpus.
typedef struct FcCorpus FcCorpus;

// Co-authorship network under one counting scheme.
typedef struct FcNetwork FcNetwork;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *fc_last_error_message(void);

// Library version as a static string.
const char *fc_version(void);

// Parses a JSONL corpus held in memory.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum FcStatus fc_corpus_from_jsonl(const char *text, struct FcCorpus **out);

// Parses a field-tagged Web of Science export held in memory.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum FcStatus fc_corpus_from_wos(const char *text, struct FcCorpus **out);

// Reads a corpus file; `.jsonl`, `.json` and `.ndjson` are JSONL, anything
// else is a Web of Science export.
//
// # Safety
// `path` must be a NUL-terminated string and `out` a writable pointer.
enum FcStatus fc_corpus_load_file(const char *path, struct FcCorpus **out);

// Number of records in the corpus.
//
// # Safety
// `corpus` must come from this library; `out` must be writable.
enum FcStatus fc_corpus_len(const struct FcCorpus *corpus, uintptr_t *out);

// Number of warnings raised while parsing.
//
// # Safety
// `corpus` must come from this library; `out` must be writable.
enum FcStatus fc_corpus_warning_count(const struct FcCorpus *corpus, uintptr_t *out);

// Releases a corpus. NULL is ignored.
//
// # Safety
// `corpus` must come from this library and not be used afterwards.
void fc_corpus_free(struct FcCorpus *corpus);

// Projects the corpus onto a network at `level` (`FC_LEVEL_*`) under the
// named counting scheme, e.g. `"INTEGER_LINKS"` or `"FRACTIONAL_LINKS"`.
//
// # Safety
// `corpus` must come from this library, `scheme` must be a NUL-terminated
// string and `out` must be writable.
enum FcStatus fc_network_project(const struct FcCorpus *corpus,
                                 uint32_t level,
                                 const char *scheme,
                                 struct FcNetwork **out);

// Number of entities (nodes).
//
// # Safety
// `network` must come from this library; `out` must be writable.
enum FcStatus fc_network_size(const struct FcNetwork *network, uintptr_t *out);

// Cell `(i, j)` of the network matrix.
//
// # Safety
// `network` must come from this library; `out` must be writable.
enum FcStatus fc_network_get(const struct FcNetwork *network,
                             uintptr_t i,
                             uintptr_t j,
                             double *out);

// Name of entity `i`; release with [`fc_string_free`].
//
// # Safety
// `network` must come from this library; `out` must be writable.
enum FcStatus fc_network_entity(const struct FcNetwork *network, uintptr_t i, char **out);

// Cohesion report of the binarized network as JSON.
//
// # Safety
// `network` must come from this library; `out` must be writable.
enum FcStatus fc_network_cohesion_json(const struct FcNetwork *network, char **out);

// Degree battery as JSON; `binary` non-zero uses the binarized network.
//
// # Safety
// `network` must come from this library; `out` must be writable.
enum FcStatus fc_network_degree_json(const struct FcNetwork *network, int32_t binary, char **out);

// Network in Pajek `.net` format.
//
// # Safety
// `network` must come from this library; `out` must be writable.
enum FcStatus fc_network_pajek(const struct FcNetwork *network, char **out);

// Releases a network. NULL is ignored.
//
// # Safety
// `network` must come from this library and not be used afterwards.
void fc_network_free(struct FcNetwork *network);

// QAP correlation of two networks over the same entities. `two_sided`
// non-zero counts `|r|`; otherwise the test is one-sided (greater).
//
// # Safety
// `a` and `b` must come from this library; `r` and `p` must be writable.
enum FcStatus fc_qap(const struct FcNetwork *a,
                     const struct FcNetwork *b,
                     uintptr_t permutations,
                     uint64_t seed,
                     int32_t two_sided,
                     double *r,
                     double *p);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void fc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRACCOUNT_H */
