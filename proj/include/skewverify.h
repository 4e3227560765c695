#ifndef SKEWVERIFY_H
#define SKEWVERIFY_H

/* C interface to the skewverify checker.
 *
 * The library verifies, in exact rational arithmetic, the defining relations
 * of a specific cyclic division algebra D over a degree-3 number field, an
 * outer ring map sigma_tilde on D with an inner witness d for its cube, the
 * induced twisted Laurent-series structure D((x)) with x*a = sigma_tilde(a)*x,
 * and the matching residue-level facts over small finite fields.
 *
 * Usage: create a session, optionally adjust seed/trials/precision or load
 * alternative constants, run one named check or all of them, then inspect or
 * render the report.  All functions are thread-compatible: distinct sessions
 * and reports may be used from distinct threads concurrently.
 *
 * Ownership: objects created by skv_*_new / skv_run_* are released with the
 * matching skv_*_free.  Strings returned through `char **out` are owned by
 * the caller and released with skv_string_free; all other strings are
 * borrowed and live as long as the object they came from.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skv_status {
  SKV_OK = 0,
  SKV_ERR_ARGUMENT = 1,               /* null pointer, bad enum value, ... */
  SKV_ERR_PARSE = 2,                  /* malformed JSON */
  SKV_ERR_SHAPE = 3,                  /* well-formed JSON, wrong structure */
  SKV_ERR_NON_RATIONAL = 4,           /* float or zero denominator */
  SKV_ERR_UNKNOWN_CHECK = 5,          /* name not in the registry */
  SKV_ERR_DIVISION_BY_ZERO = 6,
  SKV_ERR_SINGULAR = 7,               /* would witness a zero divisor */
  SKV_ERR_PRECONDITION = 8,
  SKV_ERR_INSUFFICIENT_PRECISION = 9, /* coefficient beyond a series window */
  SKV_ERR_INCONSISTENT = 10,          /* checked constructor found a violation */
  SKV_ERR_NO_WITNESS = 11,
  SKV_ERR_IO = 12,
  SKV_ERR_INTERNAL = 13
} skv_status;

typedef struct skv_session skv_session;
typedef struct skv_report skv_report;

typedef enum skv_check_status {
  SKV_CHECK_PASS = 0,
  SKV_CHECK_FAIL = 1,
  SKV_CHECK_ERROR = 2
} skv_check_status;

/* Human-readable description of the most recent failure on this thread.
 * Never null; empty string when no error has occurred. */
const char* skv_last_error(void);

/* --- registry (session-independent) ------------------------------------- */

size_t skv_check_count(void);
/* Borrowed static strings; null when index is out of range. */
const char* skv_check_name(size_t index);
const char* skv_check_anchor(size_t index);

/* --- sessions ------------------------------------------------------------ */

/* A session holds the run configuration: seed 0, 100 trials, precision 12,
 * built-in constants by default. */
skv_session* skv_session_new(void);
void skv_session_free(skv_session* session);

skv_status skv_session_set_seed(skv_session* session, uint64_t seed);
skv_status skv_session_set_trials(skv_session* session, int trials);
skv_status skv_session_set_precision(skv_session* session, int precision);

/* Replace selected constants from a JSON document (see the README for the
 * schema); fields not present keep their built-in values. */
skv_status skv_session_set_constants(skv_session* session, const char* json_text);
skv_status skv_session_load_constants(skv_session* session, const char* path);

/* --- running checks -------------------------------------------------------*/

/* Run one named check; *out receives a single-entry report. */
skv_status skv_run_check(skv_session* session, const char* name, skv_report** out);
/* Run every registered check in registry order. */
skv_status skv_run_all(skv_session* session, skv_report** out);

/* --- reports ------------------------------------------------------------- */

void skv_report_free(skv_report* report);

size_t skv_report_size(const skv_report* report);
/* 1 when every entry passed, 0 otherwise (and 0 on null). */
int skv_report_all_pass(const skv_report* report);

/* Borrowed strings, valid while the report lives; null on bad index. */
const char* skv_report_check_name(const skv_report* report, size_t index);
const char* skv_report_check_detail(const skv_report* report, size_t index);
const char* skv_report_check_anchor(const skv_report* report, size_t index);
skv_check_status skv_report_check_status(const skv_report* report, size_t index);
int64_t skv_report_check_elapsed_ms(const skv_report* report, size_t index);

/* Render the whole report; format is "text" or "json".  *out receives a
 * caller-owned NUL-terminated string. */
skv_status skv_report_render(const skv_report* report, const char* format, char** out);

void skv_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* SKEWVERIFY_H */
