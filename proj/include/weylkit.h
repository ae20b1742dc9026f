/* weylkit C API: exact root-datum, Weyl-group, series, and Soergel-calculus
 * computations behind opaque handles. All functions return a wk_status;
 * output strings are heap-allocated JSON documents released with
 * wk_string_free. On failure, wk_last_error() returns a thread-local
 * description of what went wrong.
 */
#ifndef WEYLKIT_H
#define WEYLKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wk_status {
  WK_OK = 0,
  WK_ERR_INVALID_ARGUMENT = 1,
  WK_ERR_VALIDATION = 2,
  WK_ERR_COMPUTATION = 3,
  WK_ERR_IO = 4,
  WK_ERR_INTERNAL = 5
} wk_status;

/* Library version, monotonically increasing. */
uint32_t wk_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* wk_last_error(void);

const char* wk_status_name(wk_status status);

void wk_string_free(char* s);

/* ---- root datum handles -------------------------------------------------- */

typedef struct wk_datum wk_datum;

/* Builtin constructors: GLn, SLn, PGLn, Sp4, SO5, SL2xSL2, G2, Tn. */
wk_status wk_datum_create_builtin(const char* name, wk_datum** out);
/* JSON object: { "rank": n, "simple_roots": [[int]],
 *                "simple_coroots": [[int]], "name": string }  */
wk_status wk_datum_create_from_json(const char* json_text, wk_datum** out);
wk_status wk_datum_create_from_file(const char* path, wk_datum** out);
wk_status wk_datum_dual(const wk_datum* rd, wk_datum** out);
void wk_datum_destroy(wk_datum* rd);

int wk_datum_rank(const wk_datum* rd);
int wk_datum_num_roots(const wk_datum* rd);
/* Validation plus classification, fundamental groups, file-schema fields. */
wk_status wk_datum_describe(const wk_datum* rd, char** json_out);
/* The datum in the JSON file schema. */
wk_status wk_datum_to_json(const wk_datum* rd, char** json_out);

/* ---- commands ------------------------------------------------------------ */

/* Runs one named command with a JSON parameter object and returns a JSON
 * document. Commands: validate, dual, weyl, blocks, endoscopy, series,
 * torus, curtis, gg, soergel-bs, soergel-steinberg, report, verify.
 */
wk_status wk_command(const char* name, const char* params_json, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WEYLKIT_H */
