#ifndef TATLAS_TATLAS_H
#define TATLAS_TATLAS_H

/* C interface to the torsion-degree atlas.
 *
 * Every function returns a tatlas_status. On failure the message is kept per
 * thread and read with tatlas_last_error(). Strings handed out through char**
 * are owned by the caller and released with tatlas_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(TATLAS_BUILDING_LIBRARY)
#define TATLAS_API __attribute__((visibility("default")))
#else
#define TATLAS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tatlas_status {
  TATLAS_OK = 0,
  TATLAS_MODULUS_MISMATCH = 1,
  TATLAS_NON_INVERTIBLE = 2,
  TATLAS_NON_DIVISOR = 3,
  TATLAS_SIZE_CAP_EXCEEDED = 4,
  TATLAS_NOT_A_SUBGROUP = 5,
  TATLAS_NOT_NORMAL = 6,
  TATLAS_NON_PRIME_MODULUS = 7,
  TATLAS_NOT_SOLVABLE_AND_TOO_LARGE = 8,
  TATLAS_NOT_SOLVABLE = 9,
  TATLAS_SPEC_VIOLATION = 10,
  TATLAS_UNKNOWN_CM_PAIR = 11,
  TATLAS_INVALID_ARGUMENT = 12,
  TATLAS_PARSE_ERROR = 13,
  TATLAS_IO_ERROR = 14,
  TATLAS_INTERNAL = 99
} tatlas_status;

typedef enum tatlas_membership {
  TATLAS_MEMBER = 0,
  TATLAS_NON_MEMBER = 1,
  TATLAS_CONDITIONAL = 2
} tatlas_membership;

/* Formats: "json", "csv", "markdown". */

typedef struct tatlas_group tatlas_group;

TATLAS_API const char* tatlas_last_error(void);
TATLAS_API const char* tatlas_status_name(int status);
TATLAS_API void tatlas_string_free(char* s);

/* Groups */
TATLAS_API int tatlas_group_named(const char* name, uint64_t p, tatlas_group** out);
/* Full preimage of a named group under GL2(Z/p^2) -> GL2(F_p). */
TATLAS_API int tatlas_group_named_lifted(const char* name, uint64_t p, uint32_t modulus, tatlas_group** out);
/* entries: count matrices, 4 row-major integers each. */
TATLAS_API int tatlas_group_from_generators(const int64_t* entries, size_t count, uint32_t modulus,
                                            tatlas_group** out);
TATLAS_API int tatlas_group_from_json(const char* group_file, tatlas_group** out);
TATLAS_API void tatlas_group_free(tatlas_group* g);
TATLAS_API int tatlas_group_order(const tatlas_group* g, uint64_t* out);
TATLAS_API int tatlas_group_modulus(const tatlas_group* g, uint32_t* out);
/* Distinct orbit lengths of vectors of additive order n. *count receives the
 * number of lengths; at most cap are written to buf (buf may be NULL). */
TATLAS_API int tatlas_group_degrees(const tatlas_group* g, uint64_t n, uint64_t* buf, size_t cap, size_t* count);
TATLAS_API int tatlas_group_emit(const tatlas_group* g, const char* format, int orbits, char** out);
/* Group file JSON of the generators; parses back to the same text. */
TATLAS_API int tatlas_group_file(const tatlas_group* g, char** out);

/* Degrees and R_Q */
TATLAS_API int tatlas_degrees_emit(uint64_t p, int assume_conjecture, const char* format, char** out);
TATLAS_API int tatlas_rq_membership(uint64_t p, uint64_t d, int* out);
/* view: "r", "star", "s", "sstar". */
TATLAS_API int tatlas_rqd_emit(uint64_t max_d, const char* view, int assume_conjecture, const char* format,
                               char** out);
TATLAS_API int tatlas_scan_bad_prime(uint64_t* out);
TATLAS_API int tatlas_scan_ambiguous_degree(uint64_t* out);
TATLAS_API int tatlas_density_exceptional(int64_t* num, int64_t* den);
TATLAS_API int tatlas_density_no_growth(int64_t* num, int64_t* den);

/* Checks */
TATLAS_API size_t tatlas_check_count(void);
/* NULL when index is out of range. */
TATLAS_API const char* tatlas_check_name(size_t index);
/* results_dir may be NULL (nothing written). evidence may be NULL. */
TATLAS_API int tatlas_check_run(const char* name, const char* results_dir, int* passed, char** evidence);

/* Census and lifts */
TATLAS_API int tatlas_census_emit(const char* ambient, uint64_t p, int applicable_only, const char* format,
                                  char** out);
/* orbit_index < 0: no witness listing. */
TATLAS_API int tatlas_lift_emit(const char* base, uint64_t p, uint32_t target_modulus, int64_t orbit_index,
                                const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TATLAS_TATLAS_H */
