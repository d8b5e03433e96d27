/* toricirc C API.
 *
 * Exact-arithmetic analysis of circuits of toric ideals of integer vector
 * configurations and of edge subrings of multigraphs. All state lives behind
 * opaque handles; every entry point reports a tc_status and, on failure,
 * copies a message into the caller's error buffer. Handles are immutable
 * after creation and safe to share between threads.
 *
 * Analysis results are delivered as JSON documents with a fixed field order,
 * so repeated runs over the same input are byte-identical.
 */
#ifndef TORICIRC_H
#define TORICIRC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_INTERNAL = 1,     /* engine invariant failed; a bug, not bad input */
    TC_ERR_PARSE = 2,        /* unreadable file or malformed input text */
    TC_ERR_PRECONDITION = 3, /* documented operation precondition violated */
    TC_ERR_USAGE = 4         /* null handle, unknown command, bad argument */
} tc_status;

typedef struct tc_config tc_config; /* integer vector configuration */
typedef struct tc_graph tc_graph;   /* multigraph */
typedef struct tc_result tc_result; /* analysis result (JSON document) */

const char* tc_version(void);

/* Matrix text format: optional '#' comment lines, "n q", then n rows of q
 * whitespace-separated integers. Columns are the configuration vectors. */
tc_status tc_config_parse(const char* text, tc_config** out, char* err, size_t err_cap);
tc_status tc_config_load(const char* path, tc_config** out, char* err, size_t err_cap);
void tc_config_free(tc_config* cfg);
int tc_config_dim(const tc_config* cfg);  /* n */
int tc_config_size(const tc_config* cfg); /* q */

/* Graph text format: optional '#' comments, "vertices n", then an "i j" line
 * per edge; repeated lines are parallel edges and "i i" is a loop. Edge order
 * fixes the variable order. */
tc_status tc_graph_parse(const char* text, tc_graph** out, char* err, size_t err_cap);
tc_status tc_graph_load(const char* path, tc_graph** out, char* err, size_t err_cap);
void tc_graph_free(tc_graph* g);
int tc_graph_vertex_count(const tc_graph* g);
int tc_graph_edge_count(const tc_graph* g);

/* Incidence configuration of a multigraph: column e_i + e_j per edge {i, j},
 * 2 e_i per loop. */
tc_status tc_graph_to_config(const tc_graph* g, tc_config** out, char* err, size_t err_cap);

/* Configuration commands: "circuits", "toric", "classify", "verify".
 * Graph commands: "graph-circuits", "graph-verify".
 * input_name is echoed into the JSON document; max_degree (>= 1) bounds the
 * degree-bounded searches and oracles. */
tc_status tc_config_analyze(const tc_config* cfg, const char* command, const char* input_name,
                            int max_degree, tc_result** out, char* err, size_t err_cap);
tc_status tc_graph_analyze(const tc_graph* g, const char* command, const char* input_name,
                           int max_degree, tc_result** out, char* err, size_t err_cap);

/* UTF-8 JSON document, owned by the result handle. */
const char* tc_result_json(const tc_result* result);
void tc_result_free(tc_result* result);

#ifdef __cplusplus
}
#endif

#endif /* TORICIRC_H */
