/* C interface to the sepr toolkit. Every call returns a status code; on
 * failure sepr_last_error() describes the problem (thread-local). Strings
 * returned through char** are owned by the caller and released with
 * sepr_string_free. */
#ifndef SEPR_SEPR_H
#define SEPR_SEPR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SEPR_API __declspec(dllexport)
#else
#define SEPR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sepr_status {
  SEPR_OK = 0,
  SEPR_ERR_PARSE = 1,
  SEPR_ERR_INVALID_ARGUMENT = 2,
  SEPR_ERR_RANGE = 3,
  SEPR_ERR_PRECONDITION = 4,
  SEPR_ERR_INTERNAL = 5
} sepr_status;

typedef struct sepr_pattern sepr_pattern;
typedef struct sepr_matrix sepr_matrix;
typedef struct sepr_sequence sepr_sequence;

typedef struct sepr_options {
  /* Comma-separated positive rationals; NULL or "" for the default grid. */
  const char* grid_csv;
  uint64_t budget;
  uint64_t seed;
  /* 0 = one worker per hardware thread. */
  int threads;
  int full_sweep;
} sepr_options;

SEPR_API const char* sepr_version(void);
SEPR_API const char* sepr_last_error(void);
SEPR_API const char* sepr_status_name(sepr_status s);
SEPR_API void sepr_options_init(sepr_options* opt);
SEPR_API void sepr_string_free(char* s);

/* Patterns: rows of + - 0. */
SEPR_API sepr_status sepr_pattern_parse(const char* text, sepr_pattern** out);
SEPR_API void sepr_pattern_free(sepr_pattern* p);
SEPR_API int sepr_pattern_order(const sepr_pattern* p);
SEPR_API sepr_status sepr_pattern_to_string(const sepr_pattern* p, char** out);

/* Matrices: rows of rationals such as 3/5, -2 or 0.9. */
SEPR_API sepr_status sepr_matrix_parse(const char* text, sepr_matrix** out);
SEPR_API void sepr_matrix_free(sepr_matrix* m);
SEPR_API int sepr_matrix_order(const sepr_matrix* m);

/* Sequences: concatenated N A+ A- A* S+ S- S*. */
SEPR_API sepr_status sepr_sequence_parse(const char* text, sepr_sequence** out);
SEPR_API void sepr_sequence_free(sepr_sequence* s);
SEPR_API size_t sepr_sequence_length(const sepr_sequence* s);
SEPR_API sepr_status sepr_sequence_to_string(const sepr_sequence* s, char** out);

SEPR_API sepr_status sepr_matrix_sepr(const sepr_matrix* m, sepr_sequence** out);
SEPR_API sepr_status sepr_combine(const sepr_sequence* a, const sepr_sequence* b, sepr_sequence** out);
SEPR_API sepr_status sepr_simplify(const sepr_pattern* p, sepr_pattern** out);
/* family: path, path-loop-end, ..., doubly-directed-cycle; rule: skew,
 * positive, negative-diagonal. loops is read by cycle-with-loops only. */
SEPR_API sepr_status sepr_family(const char* family, int k, const char* rule, int loops, sepr_pattern** out);

/* JSON-returning analyses. */
SEPR_API sepr_status sepr_matrix_report_json(const sepr_matrix* m, char** json);
SEPR_API sepr_status sepr_det_json(const sepr_pattern* p, char** json);
SEPR_API sepr_status sepr_seprset_json(const sepr_pattern* p, const sepr_options* opt, char** json);
SEPR_API sepr_status sepr_check_unique_json(const sepr_pattern* p, const sepr_options* opt, char** json);
SEPR_API sepr_status sepr_semistable_json(const sepr_pattern* p, char** json);
SEPR_API sepr_status sepr_stable_json(const sepr_pattern* p, char** json);
SEPR_API sepr_status sepr_predict_json(const sepr_pattern* p, char** json);
SEPR_API sepr_status sepr_sequence_laws_json(const sepr_sequence* s, char** json);

/* Visits the patterns of order n satisfying the comma-separated
 * constraints (symmetric, nonnegative, zero-diagonal, full-off-diagonal,
 * semi-stable, irreducible) until the callback returns nonzero. */
typedef int (*sepr_pattern_visitor)(const sepr_pattern* p, void* user);
SEPR_API sepr_status sepr_enumerate(int n, const char* constraints, sepr_pattern_visitor visit, void* user);
SEPR_API sepr_status sepr_enumerate_count(int n, const char* constraints, uint64_t* count);

/* check_id NULL runs every check; otherwise one of symbol-tables,
 * matrix-anchors, seprset-anchors, conjecture-n1 .. conjecture-n4,
 * table-order3-nonneg, semistable-suite, properties, symposunique.
 * Writes a JSON array of reports; *all_passed is 1 when none failed. */
SEPR_API sepr_status sepr_verify_json(const char* check_id, const sepr_options* opt, char** json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
