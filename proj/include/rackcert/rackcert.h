#ifndef RACKCERT_H
#define RACKCERT_H

/*
 * C interface to rackcert. Handles are opaque; every function that can fail
 * returns an rc_status and leaves a message for rc_last_error() on the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with rc_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(RACKCERT_BUILDING)
#define RC_API __attribute__((visibility("default")))
#else
#define RC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
    RC_OK = 0,
    RC_INPUT_ERROR = 1,
    RC_DEFECT = 2,
    RC_NULL_ARGUMENT = 3,
    RC_INTERNAL_ERROR = 4
} rc_status;

typedef enum rc_verdict {
    RC_INFINITE_ALL_REPS = 0,
    RC_INFINITE_WHEN_Q_MINUS_ONE = 1,
    RC_NO_CRITERION = 2
} rc_verdict;

typedef struct rc_rack rc_rack;
typedef struct rc_config rc_config;
typedef struct rc_certificate rc_certificate;

RC_API const char* rc_version(void);
RC_API const char* rc_schema_version(void);
RC_API const char* rc_status_name(rc_status s);
/* Message of the last failing call on this thread; "" if none. */
RC_API const char* rc_last_error(void);
/* Number of internal-consistency failures raised in this process. */
RC_API uint64_t rc_defect_count(void);
RC_API void rc_string_free(char* s);

/* Keys: search_budget (default 50000), word_depth (12), twist_length (8). */
RC_API rc_status rc_config_new(rc_config** out);
RC_API void rc_config_free(rc_config* cfg);
RC_API rc_status rc_config_set(rc_config* cfg, const char* key, const char* value);
RC_API rc_status rc_config_get(const rc_config* cfg, const char* key, int64_t* out);

/* name: "octahedral", "Xn:<odd n>", "Dn:<n>", "trivial:<n>", "square:<name>",
 * "file:<path>" (JSON {"labels": [...], "table": [[...]]}, 0-based). */
RC_API rc_status rc_rack_named(const char* name, rc_rack** out);
RC_API void rc_rack_free(rc_rack* rack);
RC_API size_t rc_rack_size(const rc_rack* rack);
/* 0-based i ▷ j. */
RC_API rc_status rc_rack_op(const rc_rack* rack, size_t i, size_t j, size_t* out);
RC_API rc_status rc_rack_label(const rc_rack* rack, size_t i, char** out);
RC_API rc_status rc_rack_to_json(const rc_rack* rack, char** out);
/* Rack axioms; *ok is 0 or 1, *message describes the first failure. */
RC_API rc_status rc_rack_check_axioms(const rc_rack* rack, int* ok, size_t* checked, char** message);
/* Braid equation for the constant cocycle q ≡ −1 on all triples. */
RC_API rc_status rc_rack_check_braid(const rc_rack* rack, int* ok, size_t* checked, char** message);

/* JSON array of the cycle types of degree m, largest part first. */
RC_API rc_status rc_partitions(size_t m, char** out);

/* group: "sym:<m>" with a cycle type such as "1,2,3" or "2^3";
 * "gl:<n>:<p>" with "diag:λ_1,…,λ_n" or "antidiag:c". cfg may be NULL. */
RC_API rc_status rc_classify(const char* group, const char* class_label, const rc_config* cfg,
                             rc_certificate** out);
RC_API void rc_certificate_free(rc_certificate* cert);
RC_API rc_status rc_certificate_verdict(const rc_certificate* cert, rc_verdict* out);
RC_API rc_status rc_certificate_construction(const rc_certificate* cert, char** out);
RC_API rc_status rc_certificate_to_json(const rc_certificate* cert, char** out);
RC_API rc_status rc_certificate_from_json(const char* text, rc_certificate** out);
/* Full re-verification; never fails on a bad certificate, reports *ok = 0. */
RC_API rc_status rc_certificate_verify(const rc_certificate* cert, int* ok, char** message);

RC_API size_t rc_example_count(void);
/* NULL when i is out of range. The string is static. */
RC_API const char* rc_example_tag(size_t i);
/* Replays one worked example; *ok = 0 on a failed check, RC_DEFECT if an
 * internal identity failed. report is a JSON object. */
RC_API rc_status rc_run_example(const char* tag, const rc_config* cfg, int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif
