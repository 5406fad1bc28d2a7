/* C interface to the permutoid library.
 *
 * Objects are opaque handles released with their *_free function. Every call
 * returns a plab_status: PLAB_OK, PLAB_NEGATIVE or PLAB_INCONCLUSIVE for
 * verdicts, otherwise an error code. Calls that produce a report write a
 * NUL-terminated canonical JSON document to *out_json (also on error, where
 * it holds the structured error); release it with plab_string_free.
 * Constructors leave *error_json null on success. Any char** may be null. */
#ifndef PLAB_PERMUTOID_C_H
#define PLAB_PERMUTOID_C_H

#include <stddef.h>

#if defined(_WIN32)
#  define PLAB_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define PLAB_API __attribute__((visibility("default")))
#else
#  define PLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int plab_status;

enum {
  PLAB_OK = 0,
  PLAB_NEGATIVE = 1,
  PLAB_INCONCLUSIVE = 2,

  PLAB_EMPTY_ELEMENT = 10,
  PLAB_POINT_OUT_OF_RANGE = 11,
  PLAB_NOT_FUNCTIONAL = 12,
  PLAB_NOT_INJECTIVE = 13,
  PLAB_MISSING_IDENTITY = 14,
  PLAB_DUPLICATE_ELEMENT = 15,
  PLAB_UNIQUE_EXTENSION_VIOLATED = 16,
  PLAB_GROUND_SET_MISMATCH = 17,

  PLAB_IDENTITY_NOT_PRESERVED = 20,
  PLAB_EQUIVARIANCE_VIOLATED = 21,
  PLAB_COMPOSITION_NOT_PRESERVED = 22,
  PLAB_GROUND_SET_TOO_LARGE = 23,

  PLAB_PARSE_ERROR = 30,
  PLAB_UNKNOWN_GENERATOR = 31,
  PLAB_BAD_EXPONENT = 32,
  PLAB_EMPTY_GENERATOR_LIST = 33,
  PLAB_OUT_OF_BOUNDS = 34,
  PLAB_BACKEND_INCONCLUSIVE = 35,
  PLAB_PRECONDITION_RADIUS = 36,
  PLAB_RELATOR_NOT_KILLED = 37,
  PLAB_CLOSURE_CAP_EXCEEDED = 38,
  PLAB_BAD_GROUP_TABLE = 39,

  PLAB_NOT_EXTENDING = 40,
  PLAB_COMPOSITION_BROKEN = 41,
  PLAB_IDENTITY_NOT_FULL = 42,
  PLAB_INVALID_SOURCE = 43,
  PLAB_NOT_A_PERMUTATION = 44,

  PLAB_NOT_RIGID = 50,
  PLAB_NOT_FREE = 51,
  PLAB_NOT_AN_ACTION = 52,
  PLAB_GROUP_CLOSURE_CAP_EXCEEDED = 53,

  PLAB_INVALID_ARGUMENT = 90,
  PLAB_INTERNAL = 99
};

/* 0 success, 1 negative, 2 inconclusive, 3 usage. */
PLAB_API int plab_status_class(plab_status status);
PLAB_API const char* plab_status_name(plab_status status);
/* Message of the last failing call on this thread; empty when none. */
PLAB_API const char* plab_last_error(void);
PLAB_API void plab_string_free(char* s);

typedef struct plab_permutoid plab_permutoid;
typedef struct plab_group plab_group;
typedef struct plab_pseudogroup plab_pseudogroup;

/* Permutoids ------------------------------------------------------------ */

PLAB_API plab_status plab_permutoid_from_json(const char* text, plab_permutoid** out, char** error_json);
PLAB_API void plab_permutoid_free(plab_permutoid* p);
/* Canonical form of the permutoid plus size and rigidity. */
PLAB_API plab_status plab_permutoid_describe(const plab_permutoid* p, char** out_json);
PLAB_API plab_status plab_quotients(const plab_permutoid* p, int nontrivial_only, size_t canonical_cap,
                                    char** out_json);
/* Presentation text of the universal group, realized by coset enumeration
 * when max_cosets > 0. */
PLAB_API plab_status plab_universal_group(const plab_permutoid* p, size_t max_cosets, char** out_json);

/* Developments ---------------------------------------------------------- */

PLAB_API plab_status plab_develop(const plab_permutoid* p, size_t max_ground, size_t node_budget,
                                  int deterministic, int timing, char** out_json);
PLAB_API plab_status plab_verify_development(const plab_permutoid* p, const char* development_json,
                                             char** out_json);

/* Groups ---------------------------------------------------------------- */

PLAB_API plab_status plab_group_from_presentation(const char* text, plab_group** out, char** error_json);
PLAB_API plab_status plab_group_from_table_json(const char* text, plab_group** out, char** error_json);
PLAB_API void plab_group_free(plab_group* g);

PLAB_API plab_status plab_coset_enum(const plab_group* g, size_t max_cosets, char** out_json);
PLAB_API plab_status plab_cameron(const plab_group* g, size_t radius, size_t max_cosets, char** out_json);
PLAB_API plab_status plab_triangulate(const plab_group* g, size_t m, size_t max_cosets, char** out_json);

typedef struct plab_probe_options {
  size_t radius;
  size_t max_ground;
  size_t node_budget;
  size_t max_cosets;
  size_t canonical_cap;
  int deterministic;
} plab_probe_options;

PLAB_API void plab_probe_options_init(plab_probe_options* options);
PLAB_API plab_status plab_probe(const plab_group* g, const plab_probe_options* options, char** out_json);

/* Pseudogroups ---------------------------------------------------------- */

/* Accepts generator files ("elements") and saturated files ("maximal_elements"). */
PLAB_API plab_status plab_pseudogroup_from_json(const char* text, plab_pseudogroup** out, char** error_json);
PLAB_API void plab_pseudogroup_free(plab_pseudogroup* h);
PLAB_API plab_status plab_pseudogroup_generate(const plab_pseudogroup* h, char** out_json);
/* PLAB_OK when rigid, PLAB_NEGATIVE otherwise. */
PLAB_API plab_status plab_pseudogroup_rigid(const plab_pseudogroup* h, char** out_json);
PLAB_API plab_status plab_pseudogroup_maximal(const plab_pseudogroup* h, char** out_json);
PLAB_API plab_status plab_pseudogroup_develop(const plab_pseudogroup* h, size_t max_ground, size_t node_budget,
                                              size_t group_cap, int timing, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
