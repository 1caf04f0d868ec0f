/*
 * Copyright 2026 The cdiffusion authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the competitive diffusion game library: graph families,
 * exact propagation, Nash verification, exhaustive multiset search, the
 * closed-form constructions and the reproduction suites.
 *
 * Every function that can fail returns CDG_OK or an error code;
 * cdg_last_error() describes the calling thread's most recent failure.
 * Vertex ids are 0-based. Strings returned through char** are owned by the
 * caller and released with cdg_string_free().
 */

#ifndef CDIFFUSION_H
#define CDIFFUSION_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    CDG_OK = 0,
    CDG_ERR_INVALID = 1,    /* bad argument or precondition violated */
    CDG_ERR_PARSE = 2,      /* malformed selector, token or graph6 text */
    CDG_ERR_CAP = 3,        /* size cap exceeded */
    CDG_ERR_BUDGET = 4,     /* search ceiling exceeded; set force to override */
    CDG_ERR_NO_PROFILE = 5, /* requested construction provably does not exist */
    CDG_ERR_IO = 6,
    CDG_ERR_INTERNAL = 99
};

const char* cdg_version(void);
const char* cdg_last_error(void);
void cdg_string_free(char* s);

/* --- graphs --------------------------------------------------------------- */

typedef struct cdg_graph cdg_graph;

int cdg_graph_path(int32_t n, cdg_graph** out);
int cdg_graph_cycle(int32_t n, cdg_graph** out);
int cdg_graph_grid(int32_t rows, int32_t cols, cdg_graph** out);
int cdg_graph_hypercube(int32_t d, cdg_graph** out);
int cdg_graph_no_ne_tree(int32_t players, cdg_graph** out);
int cdg_graph_fig7(cdg_graph** out);
/* path:N | cycle:N | grid:MxN | hypercube:D | tree:K | fig7 | graph6:FILE[:LINE] */
int cdg_graph_from_spec(const char* spec, cdg_graph** out);
int cdg_graph_from_graph6(const char* line, cdg_graph** out);
void cdg_graph_free(cdg_graph* g);

int32_t cdg_graph_vertex_count(const cdg_graph* g);
int64_t cdg_graph_edge_count(const cdg_graph* g);
int cdg_graph_has_edge(const cdg_graph* g, int32_t u, int32_t v); /* 1, 0, or < 0 */
int cdg_graph_degree(const cdg_graph* g, int32_t v);              /* >= 0, or < 0 */
/* hop distance; *dist = -1 when unreachable */
int cdg_graph_distance(const cdg_graph* g, int32_t u, int32_t v, int32_t* dist);
int cdg_graph_to_graph6(const cdg_graph* g, char** text);
/* states: one entry per vertex (player id, -1 uncolored, -2 removed) or NULL */
int cdg_graph_to_dot(const cdg_graph* g, const int32_t* states, char** text);
/* relabeling-invariant form, graphs up to ten vertices */
int cdg_graph_canonical_form(const cdg_graph* g, uint64_t* form);
int cdg_graph_isomorphic(const cdg_graph* a, const cdg_graph* b, int* iso);

/* Vertex labels follow the selector family: 1-based ids, "x.y" grid
 * coordinates, raw bit patterns on hypercubes. */
int cdg_parse_vertex(const char* spec, const cdg_graph* g, const char* token, int32_t* id);
int cdg_format_vertex(const char* spec, int32_t id, char** text);

/* --- propagation ----------------------------------------------------------- */

typedef struct cdg_outcome cdg_outcome;

/* profile[i] is player i's seed; duplicates collide and score zero */
int cdg_propagate(const cdg_graph* g, const int32_t* profile, int32_t players,
                  int want_trace, cdg_outcome** out);
void cdg_outcome_free(cdg_outcome* o);
int32_t cdg_outcome_steps(const cdg_outcome* o);
int64_t cdg_outcome_payoff(const cdg_outcome* o, int32_t player);
int32_t cdg_outcome_state(const cdg_outcome* o, int32_t vertex);
/* round-indexed state arrays; requires want_trace at propagation time */
int cdg_outcome_trace_json(const cdg_outcome* o, char** text);

/* --- equilibria ------------------------------------------------------------ */

typedef struct {
    int is_nash;
    int32_t witness_player; /* meaningful when is_nash == 0 */
    int32_t witness_vertex;
    int64_t witness_old_payoff;
    int64_t witness_new_payoff;
} cdg_verify_report;

/* payoffs may be NULL or hold `players` entries */
int cdg_verify(const cdg_graph* g, const int32_t* profile, int32_t players,
               cdg_verify_report* report, int64_t* payoffs);
int cdg_best_response(const cdg_graph* g, const int32_t* profile, int32_t players,
                      int32_t player, int32_t* vertex, int64_t* payoff);

typedef struct {
    int32_t threads; /* 0 = hardware concurrency */
    uint64_t budget; /* multiset ceiling; 0 = library default */
    int force;       /* run even above the ceiling */
} cdg_search_options;

/* Exhaustive search over strategy multisets. The example (when it exists) is
 * the lexicographically first equilibrium, independent of thread count. */
int cdg_find_nash(const cdg_graph* g, int32_t players, const cdg_search_options* opts,
                  int* exists, int32_t* example, uint64_t* examined);
int cdg_count_nash(const cdg_graph* g, int32_t players, const cdg_search_options* opts,
                   uint64_t* count, uint64_t* examined);
int cdg_multiset_count(int32_t n, int32_t players, uint64_t* count);

/* --- constructions ----------------------------------------------------------
 * Path and cycle positions are 1-based indices, matching the figures.
 */

int cdg_path_profile(int32_t n, int32_t players, int32_t* positions);
int cdg_cycle_profile(int32_t n, int32_t players, int32_t* positions);
int cdg_hypercube_profile(int32_t d, uint32_t x, uint32_t y, uint32_t* profile4);
int cdg_hypercube_equilibrium_payoff(int32_t d, uint64_t* payoff);
int cdg_v_region_count(int32_t d, uint32_t x, uint32_t y, uint64_t* count);
int cdg_v_region_bound(int32_t d, uint64_t* bound);

typedef struct {
    int32_t player;     /* index into the input profile */
    int32_t to_x, to_y; /* 1-based target position */
    char tag[24];       /* case label */
} cdg_grid_move;

/* xs/ys: three 1-based coordinates each; rows, cols >= 5 */
int cdg_grid_improving_move(int32_t rows, int32_t cols, const int32_t* xs, const int32_t* ys,
                            cdg_grid_move* move);

/* --- enumeration ------------------------------------------------------------ */

/* One representative per isomorphism class, newline-separated graph6 lines.
 * n <= 7, or 8 with allow_large. */
int cdg_enumerate_graphs(int32_t n, int allow_large, char** graph6_lines, uint64_t* count);

/* --- suites ------------------------------------------------------------------ */

typedef struct {
    int32_t k_max, n_max, d_max;
    int32_t tree_k_lo, tree_k_hi;
    int32_t survey_n_max, players;
    const char* grid_sizes;  /* "5x5,5x6,6x6" when NULL */
    const char* graph6_path; /* optional survey corpus */
    int32_t rows, cols;      /* grid4-conjecture cell */
    int32_t threads;
    uint64_t budget;
    int force;
    int timings; /* include wall_ms in the JSONL (breaks byte-identity) */
} cdg_suite_options;

void cdg_suite_options_init(cdg_suite_options* opts);

/* name: paths | cycles | grids | hypercubes | trees | small-graphs |
 *       grid4-conjecture. jsonl/summary may be NULL. *all_ok = 1 iff every
 * asserted expectation held. */
int cdg_run_suite(const char* name, const cdg_suite_options* opts, char** jsonl, char** summary,
                  int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* CDIFFUSION_H */
