/* C API for the nivat analysis library.
 *
 * All functions return a nivat_status; results come back through out
 * parameters.  Handles are opaque and must be released with the matching
 * _free function.  Strings returned through char** are heap-allocated and
 * must be released with nivat_string_free.  On failure,
 * nivat_last_error_message() describes the most recent error on the calling
 * thread.
 */

#ifndef NIVAT_H
#define NIVAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NIVAT_API __declspec(dllexport)
#else
#define NIVAT_API __attribute__((visibility("default")))
#endif

typedef enum nivat_status {
  NIVAT_OK = 0,
  NIVAT_EINVAL = 1,      /* bad arguments or malformed input */
  NIVAT_EPARSE = 2,      /* unparsable grid or generator spec */
  NIVAT_EIO = 3,         /* file system error */
  NIVAT_EHYPOTHESIS = 4, /* a complexity hypothesis does not hold */
  NIVAT_ETOOLARGE = 5,   /* shape or frame exceeds the window/caps */
  NIVAT_EINTERNAL = 6
} nivat_status;

typedef struct nivat_config nivat_config; /* opaque window configuration */

/* --- configuration construction ------------------------------------- */

/* Grid text: lines of symbols, optional first line "#origin X Y". */
NIVAT_API nivat_status nivat_config_from_text(const char* text, nivat_config** out);
NIVAT_API nivat_status nivat_config_from_file(const char* path, nivat_config** out);

/* Generator described by key=value pairs, e.g. {"kind=delta", "at=0,0"}.
 * The window is [x0, x0+width) x [y0, y0+height). */
NIVAT_API nivat_status nivat_config_generate(const char* const* kv, int kv_count, int64_t x0,
                                             int64_t y0, int64_t width, int64_t height,
                                             nivat_config** out);

NIVAT_API void nivat_config_free(nivat_config* cfg);

NIVAT_API nivat_status nivat_config_to_text(const nivat_config* cfg, char** out);
NIVAT_API nivat_status nivat_config_dims(const nivat_config* cfg, int64_t* x0, int64_t* y0,
                                         int64_t* width, int64_t* height);
NIVAT_API nivat_status nivat_config_alphabet(const nivat_config* cfg, char** out);

/* --- analyses --------------------------------------------------------- */

/* format: "text", "json" or "csv". */

/* Full pipeline: complexity table, Nivat hits, generating set, one-sided
 * expansiveness certificates, trichotomy verdict.  any_hit (optional) is
 * set to 1 when some P(n,k) <= nk inside the table, else 0. */
NIVAT_API nivat_status nivat_analyze(const nivat_config* cfg, int64_t max_n, int64_t max_k,
                                     int64_t budget_a, int64_t budget_b, const char* format,
                                     char** out, int* any_hit);

/* Analyze with an additional balanced-set request for direction (dx,dy). */
NIVAT_API nivat_status nivat_analyze_balanced(const nivat_config* cfg, int64_t max_n,
                                              int64_t max_k, int64_t budget_a, int64_t budget_b,
                                              int64_t dx, int64_t dy, const char* format,
                                              char** out, int* any_hit);

/* Complexity table only. */
NIVAT_API nivat_status nivat_complexity(const nivat_config* cfg, int64_t max_n, int64_t max_k,
                                        const char* format, char** out);

/* Mask-and-reconstruct demonstration: keep a centered seed_w x seed_h block
 * and deduce the rest from generating-set languages of R_{n,k} / R_{k,n}. */
NIVAT_API nivat_status nivat_deduce_demo(const nivat_config* cfg, int64_t n, int64_t k,
                                         int64_t seed_w, int64_t seed_h, int trace,
                                         const char* format, char** out);

/* Periodic reconstruction from a segment, maximum period p. */
NIVAT_API nivat_status nivat_fine_wilf(const char* segment, int64_t p, const char* format,
                                       char** out);

/* Interval Morse-Hedlund check for a finite word. */
NIVAT_API nivat_status nivat_morse_hedlund(const char* word, int64_t n0, const char* format,
                                           char** out);

/* --- misc ------------------------------------------------------------- */

NIVAT_API void nivat_string_free(char* s);
NIVAT_API const char* nivat_last_error_message(void);
NIVAT_API int nivat_schema_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NIVAT_H */
