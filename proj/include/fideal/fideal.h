/*
 * C interface to the fideal library: square-free monomial ideals, their facet
 * and non-face complexes, Newton complementary duals, f-ideal certificates,
 * Kruskal-Katona checks and f-ideal censuses.
 *
 * Conventions
 *   - Every function returns fid_status; results come back through out
 *     parameters. On failure the out parameters are left untouched and
 *     fid_last_error() describes the problem (thread-local).
 *   - Monomials and faces are bitmasks: variable x_i is bit (i - 1).
 *   - List outputs use the (buffer, capacity, *count) pattern. *count always
 *     receives the full length; FID_ERR_BUFFER_TOO_SMALL is returned when
 *     capacity is short. Pass buffer = NULL, capacity = 0 to query the length.
 *   - f-vectors are arrays starting at f_{-1}.
 *   - Handles are owned by the caller and released with the matching _free.
 *     Strings returned as char* are released with fid_string_free.
 */
#ifndef FIDEAL_FIDEAL_H
#define FIDEAL_FIDEAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FIDEAL_BUILDING_LIBRARY)
#    define FID_API __declspec(dllexport)
#  else
#    define FID_API __declspec(dllimport)
#  endif
#else
#  define FID_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define FID_MAX_VARIABLES 20
#define FID_MAX_SLOTS (FID_MAX_VARIABLES + 2)

typedef enum fid_status {
  FID_OK = 0,
  FID_ERR_INVALID_ARGUMENT = 1,
  FID_ERR_AMBIENT_MISMATCH = 2,
  FID_ERR_AMBIENT_TOO_LARGE = 3,
  FID_ERR_INDEX_OUT_OF_RANGE = 4,
  FID_ERR_UNIT_GENERATOR = 5,
  FID_ERR_ZERO_IDEAL = 6,
  FID_ERR_UNIT_IDEAL = 7,
  FID_ERR_VOID_COMPLEX = 8,
  FID_ERR_INVALID_BETA = 9,
  FID_ERR_NOT_COMPLEMENTABLE = 10,
  FID_ERR_ORACLE_UNAVAILABLE = 11,
  FID_ERR_INAPPLICABLE = 12,
  FID_ERR_INTERNAL_DISAGREEMENT = 13,
  FID_ERR_OVERFLOW = 14,
  FID_ERR_PARSE = 15,
  FID_ERR_BUFFER_TOO_SMALL = 16,
  FID_ERR_NULL_ARGUMENT = 17,
  FID_ERR_IO = 18,
  FID_ERR_INTERNAL = 19
} fid_status;

typedef enum fid_format { FID_FORMAT_TEXT = 0, FID_FORMAT_RECORD = 1 } fid_format;

typedef enum fid_method {
  FID_METHOD_FVECTOR = 0,
  FID_METHOD_PARTITION = 1,
  FID_METHOD_BOTH = 2
} fid_method;

typedef enum fid_check { FID_CHECK_PASS = 0, FID_CHECK_FAIL = 1, FID_CHECK_VACUOUS = 2 } fid_check;

typedef enum fid_partition_class {
  FID_CLASS_A = 0, /* not in I, divides no generator */
  FID_CLASS_B = 1, /* not in I, divides some generator */
  FID_CLASS_C = 2, /* minimal generator */
  FID_CLASS_D = 3  /* in I, not a minimal generator */
} fid_partition_class;

#define FID_WARN_FULL_MONOMIAL_GENERATOR 0x1u
#define FID_WARN_DISTINCT_VERTEX_SETS 0x2u
#define FID_WARN_DIMENSION_MISMATCH 0x4u

typedef struct fid_ideal fid_ideal;
typedef struct fid_complex fid_complex;
typedef struct fid_census fid_census;

typedef struct fid_partition_sizes {
  uint64_t a, b, c, d;
} fid_partition_sizes;

typedef struct fid_certificate {
  int is_f_ideal;
  uint64_t facet_fvector[FID_MAX_SLOTS];
  size_t facet_len;
  uint64_t nonface_fvector[FID_MAX_SLOTS];
  size_t nonface_len;
  fid_partition_sizes sizes[FID_MAX_VARIABLES + 1]; /* degrees 0..n */
  size_t size_count;
  int has_failure;
  int failure_degree;
  uint64_t failure_a;
  uint64_t failure_c;
  unsigned warnings; /* FID_WARN_* bits */
} fid_certificate;

typedef struct fid_necessary_report {
  int applicable;
  int alpha, omega;
  fid_check items[5]; /* items (i)..(v) */
  int all_pass;
} fid_necessary_report;

typedef struct fid_implication {
  int hypothesis;
  fid_check conclusion;
  uint64_t lhs, rhs;
} fid_implication;

typedef struct fid_generator_report {
  int applicable;
  int alpha, omega;
  fid_implication raises_alpha; /* f_{a-1} > C(n,a)-n+a => generator of degree a+1 */
  fid_implication lowers_omega; /* f_{w-1} < w => generator of degree w-1 */
} fid_generator_report;

typedef struct fid_equivalence_report {
  int applicable;
  int ideal_is_f;
  int dual_is_f;
  int dual_unmixed_with_half_generators;
  int dual_uses_every_variable;
} fid_equivalence_report;

typedef struct fid_census_options {
  uint64_t budget;
  size_t witness_cap;
  unsigned workers;
  uint64_t seed;
  int prune;        /* nonzero: only C(n,d)/2-element generator sets */
  int mode;         /* 0 automatic, 1 exhaustive, 2 sampled */
  int count_orbits; /* nonzero: also count classes under relabeling */
} fid_census_options;

typedef struct fid_pairing_report {
  uint64_t count;
  uint64_t dual_count;
  int equal;
  int bijection_checked;
  int inconclusive;
} fid_pairing_report;

/* --- errors and memory ------------------------------------------------- */

FID_API const char* fid_last_error(void);
FID_API const char* fid_status_string(fid_status status);
FID_API void fid_string_free(char* s);
FID_API const char* fid_version(void);

/* --- ideals ------------------------------------------------------------ */

/* Minimalizes the generators. *reduced (optional) reports whether the input
 * was not already minimal. */
FID_API fid_status fid_ideal_from_masks(int n, const uint32_t* masks, size_t count, int allow_unit,
                                        fid_ideal** out, int* reduced);
/* Parses the text grammar or a record (chosen by the first character). */
FID_API fid_status fid_ideal_parse(const char* text, int allow_unit, fid_ideal** out, int* reduced,
                                   char** label);
FID_API fid_ideal* fid_ideal_clone(const fid_ideal* ideal);
FID_API void fid_ideal_free(fid_ideal* ideal);
FID_API fid_status fid_ideal_render(const fid_ideal* ideal, fid_format format, char** out);
FID_API int fid_ideal_ambient(const fid_ideal* ideal);
FID_API fid_status fid_ideal_generators(const fid_ideal* ideal, uint32_t* masks, size_t capacity,
                                        size_t* count);
FID_API int fid_ideal_equal(const fid_ideal* a, const fid_ideal* b);
FID_API fid_status fid_ideal_contains(const fid_ideal* ideal, uint32_t monomial, int* out);
FID_API fid_status fid_ideal_degree_extremes(const fid_ideal* ideal, int* alpha, int* omega);
FID_API fid_status fid_ideal_minimal_primes(const fid_ideal* ideal, uint32_t* primes, size_t capacity,
                                            size_t* count, int* height, int* unmixed);
FID_API fid_status fid_monomials_of_degree(int n, int d, uint32_t* masks, size_t capacity,
                                           size_t* count);

/* --- complexes --------------------------------------------------------- */

FID_API fid_status fid_complex_from_faces(const uint32_t* faces, size_t count, fid_complex** out);
FID_API fid_complex* fid_complex_void(void);
FID_API void fid_complex_free(fid_complex* complex);
FID_API fid_status fid_facet_complex(const fid_ideal* ideal, fid_complex** out);
FID_API fid_status fid_nonface_complex(const fid_ideal* ideal, fid_complex** out);
FID_API uint32_t fid_complex_vertices(const fid_complex* complex);
FID_API fid_status fid_complex_facets(const fid_complex* complex, uint32_t* facets, size_t capacity,
                                      size_t* count);
FID_API int fid_complex_is_void(const fid_complex* complex);
FID_API int fid_complex_equal(const fid_complex* a, const fid_complex* b);
FID_API fid_status fid_complex_fvector(const fid_complex* complex, uint64_t* f, size_t capacity,
                                       size_t* len);
FID_API fid_status fid_complex_dimension(const fid_complex* complex, int* dim);
/* The ambient vertex set X is given by n and a mask inside {1..n}. */
FID_API fid_status fid_alexander_dual(const fid_complex* complex, int n, uint32_t ambient,
                                      fid_complex** out);
FID_API fid_status fid_nonface_ideal(const fid_complex* complex, int n, uint32_t ambient,
                                     fid_ideal** out);

/* --- duality ----------------------------------------------------------- */

FID_API fid_status fid_newton_dual(const fid_ideal* ideal, int allow_unit, fid_ideal** out);
/* exponents: p rows of n entries. The minimal generators of the dual are
 * written row-major into out (capacity counted in rows). */
FID_API fid_status fid_generalized_dual(int n, const uint32_t* exponents, size_t p, const uint32_t* beta,
                                        uint32_t* out, size_t capacity_rows, size_t* rows);
FID_API fid_status fid_dual_divisor_count(const fid_ideal* ideal, int j, uint64_t* lhs, uint64_t* rhs);

/* --- f-ideals ---------------------------------------------------------- */

FID_API fid_status fid_degree_partition(const fid_ideal* ideal, int d, fid_partition_sizes* sizes);
FID_API fid_status fid_degree_partition_members(const fid_ideal* ideal, int d, fid_partition_class which,
                                                uint32_t* masks, size_t capacity, size_t* count);
FID_API fid_status fid_is_f_ideal(const fid_ideal* ideal, fid_method method, int* out);
FID_API fid_status fid_certify(const fid_ideal* ideal, fid_certificate* out);
FID_API fid_status fid_necessary_conditions(const fid_ideal* ideal, fid_necessary_report* out);
FID_API fid_status fid_generator_implications(const fid_ideal* ideal, fid_generator_report* out);
FID_API fid_status fid_n_minus_2_equivalence(const fid_ideal* ideal, fid_equivalence_report* out);

/* --- Kruskal-Katona ---------------------------------------------------- */

/* tops[i] pairs with bottom index j - i. */
FID_API fid_status fid_macaulay_expansion(uint64_t a, int j, uint64_t* tops, size_t capacity,
                                          size_t* count);
FID_API fid_status fid_macaulay_bound(uint64_t a, int j, uint64_t* out);
FID_API fid_status fid_kk_valid(const uint64_t* f, size_t len, int* out);
FID_API fid_status fid_kk_valid_dual(const uint64_t* f, size_t len, int n, int* out);
/* trimmed != 0 drops trailing zeros; otherwise all n+1 slots are returned. */
FID_API fid_status fid_complement_fvector(const uint64_t* f, size_t len, int n, int trimmed,
                                          uint64_t* out, size_t capacity, size_t* out_len);
FID_API fid_status fid_exists_complex(const uint64_t* f, size_t len, int* out);

/* --- censuses ---------------------------------------------------------- */

FID_API void fid_census_options_default(fid_census_options* options);
FID_API fid_status fid_enumerate_v(int n, int d, const fid_census_options* options, fid_census** out);
FID_API fid_status fid_enumerate_all(int n, const fid_census_options* options, fid_census** out);
FID_API fid_status fid_search_gap(int n, int gap, const fid_census_options* options, fid_census** out);
FID_API fid_status fid_verify_pairing(int n, int d, const fid_census_options* options,
                                      fid_pairing_report* out);
FID_API void fid_census_free(fid_census* census);
FID_API uint64_t fid_census_count(const fid_census* census);
FID_API uint64_t fid_census_candidates(const fid_census* census);
FID_API int fid_census_budget_exhausted(const fid_census* census);
FID_API int fid_census_sampled(const fid_census* census);
FID_API double fid_census_elapsed(const fid_census* census);
/* Returns -1 when orbits were not counted. */
FID_API int64_t fid_census_orbits(const fid_census* census);
FID_API size_t fid_census_witness_count(const fid_census* census);
FID_API fid_status fid_census_witness(const fid_census* census, size_t index, fid_ideal** out);
/* Census file contents: '#' summary then one ideal per line. */
FID_API fid_status fid_census_render(const fid_census* census, fid_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FIDEAL_FIDEAL_H */
