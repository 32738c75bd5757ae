#ifndef SHCACHE_SHCACHE_H
#define SHCACHE_SHCACHE_H

/* Public C surface of the shared-cache coded-caching toolkit.
 *
 * Usage pattern: create a session, call command functions with a JSON
 * configuration string, read back a JSON result string, free the result,
 * destroy the session. All exact quantities travel as "p/q" strings inside
 * the JSON documents. Every function returns a status code; on failure the
 * session stores a human-readable message retrievable via shc_last_error.
 *
 * Sessions are not thread-safe; use one session per thread. Result strings
 * are heap-allocated and must be released with shc_string_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shc_status {
  SHC_OK = 0,
  SHC_ERR_INVALID_ARGUMENT = 1, /* bad config, malformed JSON, out-of-range values */
  SHC_ERR_RESOURCE_LIMIT = 2,   /* an enumeration or size cap would be exceeded */
  SHC_ERR_DECODE_FAILURE = 3,   /* a user could not reconstruct a subfile */
  SHC_ERR_IO = 4,               /* file system failure (path in the message) */
  SHC_ERR_INTERNAL = 5          /* unexpected failure; message has details */
} shc_status;

typedef struct shc_session shc_session;

/* Session lifecycle. shc_session_create returns NULL only on allocation
 * failure. Destroy accepts NULL. */
shc_session* shc_session_create(void);
void shc_session_destroy(shc_session* session);

/* Message of the most recent failing call on this session; empty string if
 * the last call succeeded. Owned by the session; valid until the next call. */
const char* shc_last_error(const shc_session* session);

/* Static name of a status code, e.g. "SHC_ERR_INVALID_ARGUMENT". */
const char* shc_status_name(shc_status status);

/* Library version, "major.minor.patch". Static storage. */
const char* shc_version_string(void);

/* Commands. `config_json` is a JSON document (see README for each schema);
 * on SHC_OK, *out_json receives a heap-allocated JSON result to be freed
 * with shc_string_free. On failure *out_json is set to NULL.
 *
 *   allocate  exact per-cache memory shares, delivery time, sharing split
 *   place     subfile partition and per-cache contents
 *   deliver   XOR schedule + byte-exact decode report
 *   bound     general/regular lower bounds and the convexity certificate
 *   verify    built-in cross-check suite; result carries "all_pass"
 *   mismatch  assumed-vs-realized analysis, both sides of the equality
 *   simulate  Poisson Monte Carlo curve; optionally writes CSV + JSON
 */
shc_status shc_allocate(shc_session* session, const char* config_json, char** out_json);
shc_status shc_place(shc_session* session, const char* config_json, char** out_json);
shc_status shc_deliver(shc_session* session, const char* config_json, char** out_json);
shc_status shc_bound(shc_session* session, const char* config_json, char** out_json);
shc_status shc_verify(shc_session* session, const char* config_json, char** out_json);
shc_status shc_mismatch(shc_session* session, const char* config_json, char** out_json);
shc_status shc_simulate(shc_session* session, const char* config_json, char** out_json);

/* Run any of the commands above by name. */
shc_status shc_run(shc_session* session, const char* command, const char* config_json,
                   char** out_json);

void shc_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SHCACHE_SHCACHE_H */
