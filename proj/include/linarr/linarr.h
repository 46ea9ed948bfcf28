/*
 * linarr C API.
 *
 * Opaque handles and integer status codes over the C++ core. Every function
 * that produces text hands back a NUL-terminated, heap-allocated JSON string
 * that the caller releases with linarr_string_free(). On failure the status
 * is nonzero and linarr_last_error_json() describes it (thread-local, valid
 * until the next call on the same thread).
 */
#ifndef LINARR_H
#define LINARR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef LINARR_BUILDING
#    define LINARR_API __declspec(dllexport)
#  else
#    define LINARR_API __declspec(dllimport)
#  endif
#else
#  define LINARR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum linarr_status {
    LINARR_OK = 0,
    LINARR_E_PARSE = 1,
    LINARR_E_ZERO_DIRECTION = 2,
    LINARR_E_DIMENSION_MISMATCH = 3,
    LINARR_E_DUPLICATE_LINE = 4,
    LINARR_E_WRONG_DIMENSION = 5,
    LINARR_E_RESOLUTION_TOO_COARSE = 6,
    LINARR_E_NON_GENERIC_DIRECTION = 7,
    LINARR_E_INVALID_PROFILE = 8,
    LINARR_E_INVALID_GRAPH = 9,
    LINARR_E_INVALID_ARGUMENT = 10,
    LINARR_E_INTERNAL = 99
} linarr_status;

typedef struct linarr_arrangement linarr_arrangement;
typedef struct linarr_graph linarr_graph;

LINARR_API const char* linarr_version(void);
LINARR_API const char* linarr_status_name(linarr_status status);

/* Error document {"error": {"code", "message", "path"?, "violation"?}} for
 * the last failed call on this thread, or "{}" if none. */
LINARR_API const char* linarr_last_error_json(void);

LINARR_API void linarr_string_free(char* text);

/* Arrangements */
LINARR_API linarr_status linarr_arrangement_parse(const char* json, size_t length, linarr_arrangement** out);

/* profile: "generic", "mixed", "pencil(k)" or "pencil:k". */
LINARR_API linarr_status linarr_arrangement_generate(int dimension, size_t count, const char* profile,
                                                     uint64_t seed, linarr_arrangement** out);

LINARR_API void linarr_arrangement_free(linarr_arrangement* arrangement);

LINARR_API int linarr_arrangement_dimension(const linarr_arrangement* arrangement);
LINARR_API size_t linarr_arrangement_line_count(const linarr_arrangement* arrangement);
LINARR_API linarr_status linarr_arrangement_genus(const linarr_arrangement* arrangement, int64_t* out);

/* Arrangement file JSON (canonical lines). */
LINARR_API linarr_status linarr_arrangement_serialize(const linarr_arrangement* arrangement, char** out);

/* Reports. Each embeds the tool version and a digest of the input text. */
LINARR_API linarr_status linarr_analyze(const linarr_arrangement* arrangement, char** out);
LINARR_API linarr_status linarr_poset(const linarr_arrangement* arrangement, char** out);

/* direction: NULL for the deterministic search, else "a,b,c" rationals. */
LINARR_API linarr_status linarr_sweep(const linarr_arrangement* arrangement, const char* direction, char** out);

/* grid >= 2; allow_expensive admits n = 4. *match receives 1 or 0. */
LINARR_API linarr_status linarr_verify(const linarr_arrangement* arrangement, int grid, int allow_expensive,
                                       int* match, char** out);

/* Everything above in one document; grid <= 0 skips verification. */
LINARR_API linarr_status linarr_report(const linarr_arrangement* arrangement, const char* direction, int grid,
                                       char** out);

/* General space graphs */
LINARR_API linarr_status linarr_graph_parse(const char* json, size_t length, linarr_graph** out);
LINARR_API void linarr_graph_free(linarr_graph* graph);
LINARR_API linarr_status linarr_graph_sweep(const linarr_graph* graph, const char* direction, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LINARR_H */
