/* C API for the propcolor engine.  All functions return a pc_status;
 * results come back through out parameters.  Strings returned through
 * char** are heap-allocated and must be released with pc_string_free.
 * Graph handles are opaque and must be released with pc_graph_free.
 */
#ifndef PROPCOLOR_C_H
#define PROPCOLOR_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pc_graph pc_graph;

typedef enum {
    PC_OK = 0,
    PC_ERR_INVALID_ARGUMENT = 1,
    PC_ERR_PARSE = 2,
    PC_ERR_INTERNAL = 3,
} pc_status;

/* Decision outcomes, aligned with the CLI exit-code contract. */
typedef enum {
    PC_DECISION_CHOOSABLE = 0,
    PC_DECISION_NOT_CHOOSABLE = 1,
    PC_DECISION_UNKNOWN = 2,
} pc_decision;

const char* pc_version(void);

void pc_string_free(char* s);
void pc_graph_free(pc_graph* g);

/* Text graph format: "n m" header, then m lines "u v".  On failure the
 * diagnostic (with line number) is written to errbuf when provided. */
pc_status pc_graph_parse(const char* text, pc_graph** out, char* errbuf, size_t errbuf_len);

/* Families: "path", "cycle", "star", "complete" (params: {n});
 * "kmm" (params: {m}); "wang-lih" (params: {k});
 * "linear-forest" (params: component orders). */
pc_status pc_graph_family(const char* family, const int* params, int n_params, pc_graph** out,
                          char* errbuf, size_t errbuf_len);

int pc_graph_vertex_count(const pc_graph* g);
int pc_graph_edge_count(const pc_graph* g);
pc_status pc_graph_format(const pc_graph* g, char** out_text);

/* mode: "list", "equitable-list", or "proportional".  budget < 0 means
 * unbounded.  out_json receives the verdict document; out_cert_json
 * (optional, may be NULL) receives a certificate when the claim is
 * refuted, and NULL otherwise. */
pc_status pc_decide(const pc_graph* g, int k, const char* mode, int64_t budget, int threads,
                    pc_decision* out_decision, char** out_json, char** out_cert_json,
                    char* errbuf, size_t errbuf_len);

/* k_max < 0 selects the default cap (|V|-1, or |V| for complete graphs).
 * out_decision is CHOOSABLE when an exact value was determined. */
pc_status pc_chi_pc(const pc_graph* g, int k_max, int64_t budget, int threads,
                    pc_decision* out_decision, char** out_json, char* errbuf, size_t errbuf_len);

/* Runs the full claim suite.  out_decision: CHOOSABLE = all verified,
 * NOT_CHOOSABLE = some claim refuted, UNKNOWN = budget skips present. */
pc_status pc_suite_run(int nmax, int64_t budget, int threads, pc_decision* out_decision,
                       char** out_json, char** out_text, char* errbuf, size_t errbuf_len);

/* Certificate verification.  out_valid: 1 = accepted, 0 = rejected.
 * Returns PC_ERR_PARSE only when the input is not a JSON document at
 * all; a structurally broken certificate is a rejection, not an error. */
pc_status pc_cert_verify(const char* cert_json, int* out_valid, char* errbuf, size_t errbuf_len);

/* Differential benchmark over enumeration strategies and pruning
 * configurations.  out_agree: 1 when every configuration produced the
 * same verdict (and witness, where applicable). */
pc_status pc_bench(const pc_graph* g, int k, const char* mode, int64_t budget, int threads,
                   const char* strategy /* NULL = both */, int vary_pruning,
                   int* out_agree, char** out_json, char* errbuf, size_t errbuf_len);

#ifdef __cplusplus
}
#endif

#endif
