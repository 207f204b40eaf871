#ifndef GRT2_GRT2_H
#define GRT2_GRT2_H

#include <stdint.h>

#if defined(_WIN32)
#define GRT2_API __declspec(dllexport)
#else
#define GRT2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grt2_status {
  GRT2_OK = 0,
  GRT2_ERR_INVALID_ARGUMENT = 1,
  GRT2_ERR_IO = 2,
  GRT2_ERR_INTERNAL = 3
} grt2_status;

/* Bit flags, combinable. */
typedef enum grt2_oracle {
  GRT2_ORACLE_PSI = 1,
  GRT2_ORACLE_RANK = 2,
  GRT2_ORACLE_IHARA = 4,
  GRT2_ORACLE_ALL = 7
} grt2_oracle;

typedef enum grt2_graph_check {
  GRT2_CHECK_D_SQUARED = 0,
  GRT2_CHECK_ENCODING = 1,
  GRT2_CHECK_BOWTIE = 2,
  GRT2_CHECK_FILTRATION = 3,
  GRT2_CHECK_THETA_IDENTITY = 4
} grt2_graph_check;

typedef enum grt2_graph_kind {
  GRT2_KIND_ICG = 0,
  GRT2_KIND_ADMISSIBLE = 1,
  GRT2_KIND_GC2 = 2
} grt2_graph_kind;

/* Result of one command: a JSON record
 *   {"schema":1,"command":...,"parameters":{...},"status":"pass"|"fail"|"info","payload":{...}}
 * Strings returned by accessors live as long as the handle. */
typedef struct grt2_report grt2_report;

/* A single graph with ordered edges. */
typedef struct grt2_graph grt2_graph;

GRT2_API const char* grt2_version(void);
GRT2_API const char* grt2_status_string(grt2_status status);
/* Message of the last failed call on this thread, "" if none. */
GRT2_API const char* grt2_last_error(void);

/* Threads used by parallel work: GRT2_THREADS if set, else the hardware count. */
GRT2_API int grt2_thread_count(void);

/* dim H^degree of the theta complex for weights 1..max_weight next to the
 * closed form; status "pass" iff every row matches. */
GRT2_API grt2_status grt2_dims(int degree, int max_weight, grt2_report** out);

/* Relation spaces at an even weight >= 8 from the selected oracles, with
 * count, Schneps and (for several oracles) span-equality checks. */
GRT2_API grt2_status grt2_relations(int weight, unsigned oracles, grt2_report** out);

/* Random integer vectors outside the relation space must fail the Schneps
 * check. Deterministic for a fixed seed. */
GRT2_API grt2_status grt2_schneps_sample(int weight, int samples, uint64_t seed, grt2_report** out);

/* One graph-complex suite; starting graphs above size_cap vertices are skipped.
 * size_cap must lie in 1..12. */
GRT2_API grt2_status grt2_graph_check_run(grt2_graph_check check, int size_cap, grt2_report** out);

GRT2_API int grt2_report_passed(const grt2_report* report);
GRT2_API const char* grt2_report_json(const grt2_report* report);
GRT2_API void grt2_report_free(grt2_report* report);

/* Reference theta graph for x^k1 y^k2 z^k3 in grade 0, 1 or 2. */
GRT2_API grt2_status grt2_graph_theta(int grade, int k1, int k2, int k3, grt2_graph** out);
GRT2_API grt2_status grt2_graph_wheel(int spokes, grt2_graph** out);
GRT2_API grt2_status grt2_graph_figure_eight(int two_i, int two_j, grt2_graph** out);
/* Parses the line-oriented interchange format. */
GRT2_API grt2_status grt2_graph_parse(const char* text, grt2_graph** out);
/* Canonical representative; *sign is +1 or -1, or 0 when the class vanishes
 * (then *out is NULL). */
GRT2_API grt2_status grt2_graph_canonicalize(const grt2_graph* graph, grt2_graph_kind kind, int* sign,
                                             grt2_graph** out);
GRT2_API const char* grt2_graph_text(const grt2_graph* graph);
GRT2_API int grt2_graph_vertex_count(const grt2_graph* graph);
GRT2_API int grt2_graph_edge_count(const grt2_graph* graph);
GRT2_API void grt2_graph_free(grt2_graph* graph);

#ifdef __cplusplus
}
#endif

#endif
