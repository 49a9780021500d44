/* grhom C API: script-driven computation of sheaf Ext groups, derived global
 * sections, and exceptional-collection tooling over projective varieties.
 *
 * All state lives behind an opaque session handle.  Strings returned by the
 * API are owned by the session and remain valid until the next grhom_run call
 * on that session or until the session is freed. */

#ifndef GRHOM_H
#define GRHOM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct grhom_session grhom_session;

/* status codes; grhom_run's return value doubles as the CLI exit code */
#define GRHOM_OK 0
#define GRHOM_ERROR_PARSE 1
#define GRHOM_ERROR_MATH 2
#define GRHOM_ERROR_USAGE 3

grhom_session* grhom_session_new(void);
void grhom_session_free(grhom_session* s);

/* override the script's prime (0 restores the script's own choice) */
int grhom_session_set_prime(grhom_session* s, long prime);
/* verbosity: 0 quiet (default), 1 progress notes in the text report */
int grhom_session_set_verbose(grhom_session* s, int level);

/* parse and execute a script; returns a status code */
int grhom_session_run(grhom_session* s, const char* script_utf8);

/* human-readable report of the last run */
const char* grhom_session_text(const grhom_session* s);
/* JSON document of the last run: {"ring": {...}, "results": [...]} */
const char* grhom_session_json(const grhom_session* s);

/* last error message ("" if none) and its script position (0 if unknown) */
const char* grhom_session_error(const grhom_session* s);
int grhom_session_error_line(const grhom_session* s);
int grhom_session_error_column(const grhom_session* s);

const char* grhom_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GRHOM_H */
