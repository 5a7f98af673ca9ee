#ifndef ISSPACK_ISSPACK_H
#define ISSPACK_ISSPACK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ISSPACK_BUILDING)
#    define ISSPACK_API __declspec(dllexport)
#  else
#    define ISSPACK_API __declspec(dllimport)
#  endif
#else
#  define ISSPACK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isspack_status
{
    ISSPACK_OK = 0,
    ISSPACK_E_ARGUMENT = 1,
    ISSPACK_E_RANGE = 2,
    ISSPACK_E_BUDGET = 3,
    ISSPACK_E_PARSE = 4,
    ISSPACK_E_IO = 5,
    ISSPACK_E_SOUNDNESS = 6,
    ISSPACK_E_WITNESS_NOT_FOUND = 7,
    ISSPACK_E_EQUIVALENCE = 8,
    ISSPACK_E_INTERNAL = 9
} isspack_status;

typedef enum isspack_mode
{
    ISSPACK_MODE_PAPER = 0,
    ISSPACK_MODE_TIGHT = 1
} isspack_mode;

typedef enum isspack_kind
{
    ISSPACK_KIND_PSP = 0,
    ISSPACK_KIND_XCOVER = 1,
    ISSPACK_KIND_VECSUM = 2,
    ISSPACK_KIND_SUBISO = 3
} isspack_kind;

typedef struct isspack_budget
{
    size_t max_universe_for_dp;
    uint64_t max_subsets_enumerated;
    /* 0 means no wall-clock limit. */
    uint64_t time_limit_ms;
    size_t max_vecsum_r;
    int max_subiso_pattern;
    int max_subiso_host;
} isspack_budget;

typedef struct isspack_solve_result
{
    /* 1 if the decision answer is yes. */
    int found;
    /* Maximum packing size (dp), minimum cover size (bfs), else witness size. */
    uint64_t value;
    uint64_t nodes;
    /* {"indices": [...]} with 0-indexed sets, or {"map": [...]} for subiso;
       NULL when nothing was found. Release with isspack_string_free. */
    char * witness_json;
} isspack_solve_result;

typedef struct isspack_iss isspack_iss;
typedef struct isspack_graph isspack_graph;
typedef struct isspack_instance isspack_instance;

/* Message of the last failed call on this thread, "" if none. */
ISSPACK_API const char * isspack_last_error(void);
/* Reproduction bundle of the last equivalence failure on this thread. */
ISSPACK_API const char * isspack_last_error_detail(void);
ISSPACK_API const char * isspack_status_name(isspack_status status);
ISSPACK_API void isspack_string_free(char * s);

ISSPACK_API const char * isspack_version(void);
/* Human-readable description of both gadget-size formulas. */
ISSPACK_API const char * isspack_gadget_formulas(void);
ISSPACK_API isspack_status isspack_gadget_size(int n, isspack_mode mode, size_t * out);
ISSPACK_API isspack_status isspack_parse_mode(const char * name, isspack_mode * out);

ISSPACK_API void isspack_budget_default(isspack_budget * out);

/* Intersecting set systems. */
ISSPACK_API isspack_status isspack_iss_build(size_t n_elems, isspack_iss ** out);
ISSPACK_API size_t isspack_iss_m_sets(const isspack_iss * iss);
ISSPACK_API isspack_status isspack_iss_to_json(const isspack_iss * iss, char ** out);
/* Writes 1 to all_passed when every property holds; report lists each check. */
ISSPACK_API isspack_status isspack_iss_check(const isspack_iss * iss, int * all_passed, char ** report_json);
ISSPACK_API void isspack_iss_free(isspack_iss * iss);

/* Graphs. */
ISSPACK_API isspack_status isspack_graph_from_json(const char * text, isspack_graph ** out);
/* edge, p3, k3, c4, paw. */
ISSPACK_API isspack_status isspack_graph_pattern(const char * name, isspack_graph ** out);
ISSPACK_API isspack_status isspack_graph_random(int n, double p, uint64_t seed, isspack_graph ** out);
ISSPACK_API int isspack_graph_n(const isspack_graph * g);
ISSPACK_API size_t isspack_graph_edge_count(const isspack_graph * g);
ISSPACK_API isspack_status isspack_graph_to_json(const isspack_graph * g, char ** out);
ISSPACK_API void isspack_graph_free(isspack_graph * g);

/* Instances. A document carrying a "reduction" block is rebuilt and checked,
   and keeps enough provenance to lift witnesses. */
ISSPACK_API isspack_status isspack_instance_from_json(isspack_kind kind, const char * text, isspack_instance ** out);
ISSPACK_API isspack_status isspack_instance_random_psp(size_t universe_size, size_t set_count, double density,
        uint64_t seed, size_t r, isspack_instance ** out);
ISSPACK_API isspack_kind isspack_instance_kind(const isspack_instance * inst);
ISSPACK_API isspack_status isspack_instance_set_r(isspack_instance * inst, size_t r);
ISSPACK_API isspack_status isspack_instance_to_json(const isspack_instance * inst, char ** out);
/* Sizes and compactness ratio of a reduced instance. */
ISSPACK_API isspack_status isspack_instance_stats_json(const isspack_instance * inst, char ** out);
ISSPACK_API void isspack_instance_free(isspack_instance * inst);

/* Reduction from subgraph isomorphism, one instance per pattern ordering. */
ISSPACK_API isspack_status isspack_ordering_count(const isspack_graph * h, uint64_t * out);
ISSPACK_API isspack_status isspack_reduce(const isspack_graph * g, const isspack_graph * h, isspack_kind target,
        isspack_mode mode, uint64_t ordering, isspack_instance ** out);
ISSPACK_API isspack_status isspack_subiso_instance(const isspack_graph * g, const isspack_graph * h, isspack_instance ** out);

/* algo is one of dp, bfs, bnb, enum; which ones apply depends on the kind. */
ISSPACK_API isspack_status isspack_solve(const isspack_instance * inst, const char * algo, const isspack_budget * budget,
        isspack_solve_result * out);
ISSPACK_API void isspack_solve_result_clear(isspack_solve_result * result);
/* Maps a witness of a reduced instance back to a pattern embedding:
   {"map": [...]} with map[v-1] the host vertex of pattern vertex v. */
ISSPACK_API isspack_status isspack_lift(const isspack_instance * inst, const size_t * indices, size_t count, char ** out);

/* Equivalence harness. Sweeps every labelled graph on n vertices for each n
   up to n_max, writing the count of disagreements (monotonicity breaches
   included) and a JSON report. */
ISSPACK_API isspack_status isspack_verify_sweep(int n_max, const isspack_graph * h, isspack_mode mode, int full,
        unsigned jobs, const isspack_budget * budget, uint64_t seed, size_t * disagreements, char ** report_json);
ISSPACK_API isspack_status isspack_verify_pair(const isspack_graph * g, const isspack_graph * h, isspack_mode mode, int full,
        const isspack_budget * budget, int * agreed, char ** report_json);
ISSPACK_API isspack_status isspack_compactness_sweep(const int * n_values, size_t count, const isspack_graph * h,
        isspack_mode mode, char ** out_json);

typedef struct isspack_bench_config
{
    const size_t * universes;
    size_t universe_count;
    const size_t * set_counts;
    size_t set_count_count;
    size_t r;
    double density;
    uint64_t seed;
} isspack_bench_config;

/* Fills the config with the default grid; the arrays point at static data. */
ISSPACK_API void isspack_bench_config_default(isspack_bench_config * out);
ISSPACK_API isspack_status isspack_bench(const isspack_bench_config * config, const isspack_budget * budget,
        size_t * disagreements, char ** csv);

#ifdef __cplusplus
}
#endif

#endif
