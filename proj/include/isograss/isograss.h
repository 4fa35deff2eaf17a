/* C interface to the isograss library.
 *
 * Spaces and presentations are opaque handles. Every call returns an
 * isograss_status; on failure isograss_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). Strings
 * returned through `char **out` are owned by the caller and released with
 * isograss_free_string(). Structured results are JSON documents. */

#ifndef ISOGRASS_H
#define ISOGRASS_H

#include <stddef.h>
#include <stdint.h>

#if defined(ISOGRASS_BUILDING_LIBRARY)
#define ISOGRASS_API __attribute__((visibility("default")))
#else
#define ISOGRASS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isograss_status {
  ISOGRASS_OK = 0,
  ISOGRASS_INVALID_ARGUMENT = 1,
  ISOGRASS_SPACE_SYNTAX = 2,
  ISOGRASS_UNSUPPORTED = 3,
  ISOGRASS_DIMENSION_MISMATCH = 4,
  ISOGRASS_PARSE = 5,
  ISOGRASS_UNKNOWN_GENERATOR = 6,
  ISOGRASS_HEIGHT_OVERFLOW = 7,
  ISOGRASS_INTERNAL = 8
} isograss_status;

typedef struct isograss_space isograss_space;
typedef struct isograss_presentation isograss_presentation;

ISOGRASS_API const char *isograss_version(void);
ISOGRASS_API const char *isograss_last_error(void);
ISOGRASS_API void isograss_free_string(char *s);

/* `I:2n,k`, `RG:m,l`, `CG:n,k` or `S:d`. */
ISOGRASS_API isograss_status isograss_space_parse(const char *spec, isograss_space **out);
ISOGRASS_API void isograss_space_destroy(isograss_space *space);
ISOGRASS_API isograss_status isograss_space_dimension(const isograss_space *space, int64_t *out);
/* Dimension, fact sheet, sphere normalization, p1 height formula. */
ISOGRASS_API isograss_status isograss_space_describe(const isograss_space *space, char **json_out);

/* Fails with ISOGRASS_UNSUPPORTED for spaces without a ring presentation. */
ISOGRASS_API isograss_status isograss_presentation_create(const isograss_space *space,
                                                         isograss_presentation **out);
ISOGRASS_API void isograss_presentation_destroy(isograss_presentation *p);
/* iso-grass/presentation@1; with_trace adds the sieve trace. */
ISOGRASS_API isograss_status isograss_presentation_to_json(const isograss_presentation *p,
                                                          int with_trace, char **json_out);

/* Schubert summary; the space must be a complex Grassmannian. */
ISOGRASS_API isograss_status isograss_complex_summary(const isograss_space *space, char **json_out);

ISOGRASS_API isograss_status isograss_poincare(const isograss_space *space, char **json_out);

/* cap = 0 picks a cap from the top degree. ISOGRASS_HEIGHT_OVERFLOW still
 * fills json_out. */
ISOGRASS_API isograss_status isograss_element_height(const isograss_space *space,
                                                    const char *expression, size_t cap,
                                                    char **json_out);
ISOGRASS_API isograss_status isograss_element_eval(const isograss_space *space,
                                                  const char *expression, char **json_out);

ISOGRASS_API isograss_status isograss_verdict(const isograss_space *source,
                                             const isograss_space *target, char **json_out);

/* family: "IsoIso", "IsoReal" or "RealIso". iso-grass/report@1. */
ISOGRASS_API isograss_status isograss_enumerate(const char *family, int bound, char **json_out);

/* Full report; *ok_out is 1 iff every check holds. */
ISOGRASS_API isograss_status isograss_verify(int bound, int s_max, int *ok_out, char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* ISOGRASS_H */
