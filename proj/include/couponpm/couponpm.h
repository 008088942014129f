/*
 * couponpm C API.
 *
 * Every object is an opaque handle released by its matching *_free
 * function. Functions that can fail return a cpm_status; on failure the
 * message is available from cpm_last_error() on the calling thread until
 * the next failing call. Node ids are the dense 0-based ids of the network
 * (after pruning); external labels are reached through *_label functions.
 */
#ifndef COUPONPM_COUPONPM_H
#define COUPONPM_COUPONPM_H

#include <stddef.h>
#include <stdint.h>

#if defined(COUPONPM_BUILDING_LIBRARY)
#define COUPONPM_API __attribute__((visibility("default")))
#else
#define COUPONPM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpm_status {
  CPM_OK = 0,
  CPM_ERR_INVALID_ARGUMENT = 1,
  CPM_ERR_PARSE = 2,
  CPM_ERR_IO = 3,
  CPM_ERR_EMPTY_NETWORK = 4,
  CPM_ERR_TOO_LARGE = 5,
  CPM_ERR_SOLVER = 6,
  CPM_ERR_RESOURCE = 7,
  CPM_ERR_INTERNAL = 8
} cpm_status;

typedef enum cpm_model { CPM_MODEL_IC_CP = 0, CPM_MODEL_IC_WC = 1, CPM_MODEL_LT = 2 } cpm_model;

typedef enum cpm_algorithm {
  CPM_ALG_SPM = 0,
  CPM_ALG_RPM = 1,
  CPM_ALG_RA_T = 2,
  CPM_ALG_RA_S = 3,
  CPM_ALG_MAXINF = 4,
  CPM_ALG_HIGHDEGREE = 5
} cpm_algorithm;

typedef enum cpm_estimator {
  CPM_EST_SIMULATION = 0,
  CPM_EST_REALIZATION = 1,
  CPM_EST_RA_SET = 2,
  CPM_EST_EXACT = 3
} cpm_estimator;

typedef struct cpm_graph cpm_graph;
typedef struct cpm_network cpm_network;
typedef struct cpm_selection cpm_selection;

COUPONPM_API const char* cpm_version(void);
COUPONPM_API const char* cpm_last_error(void);
/* 1-based input line of the last parse error, 0 if none */
COUPONPM_API size_t cpm_last_error_line(void);
COUPONPM_API const char* cpm_status_string(cpm_status status);

/* Seed of an independent random stream derived from (base, stream). Every
 * library routine already derives its own streams from the seed it is
 * given; use this to pick seeds for separate calls that must not overlap. */
COUPONPM_API uint64_t cpm_derive_seed(uint64_t base, uint64_t stream);

/* ---- graphs ---------------------------------------------------------- */

COUPONPM_API cpm_status cpm_graph_load(const char* path, int undirected, cpm_graph** out);
COUPONPM_API cpm_status cpm_graph_parse(const char* text, size_t length, int undirected,
                                        cpm_graph** out);
COUPONPM_API void cpm_graph_free(cpm_graph* graph);
COUPONPM_API size_t cpm_graph_node_count(const cpm_graph* graph);
COUPONPM_API size_t cpm_graph_edge_count(const cpm_graph* graph);
COUPONPM_API cpm_status cpm_graph_label(const cpm_graph* graph, uint32_t node, int64_t* label);

/* ---- intrinsic values ------------------------------------------------ */

/* Writes node_count draws, uniform on [price - coupon, 1], to out. */
COUPONPM_API cpm_status cpm_generate_intrinsics(size_t node_count, double price, double coupon,
                                                uint64_t seed, double* out);
/* Reads one value per line. Pass out = NULL to query *count; otherwise
 * capacity must be at least the number of values. */
COUPONPM_API cpm_status cpm_intrinsics_load(const char* path, double* out, size_t capacity,
                                            size_t* count);

/* ---- network configuration file ------------------------------------- */

#define CPM_CONFIG_HAS_PRICE 1u
#define CPM_CONFIG_HAS_COUPON_FRACTION 2u
#define CPM_CONFIG_HAS_RNG_SEED 4u
#define CPM_CONFIG_HAS_MODEL 8u
#define CPM_CONFIG_HAS_IC_PROBABILITY 16u

typedef struct cpm_network_config {
  cpm_model model;
  double ic_probability;
  double price;
  double coupon_fraction;
  uint64_t rng_seed;
  unsigned present; /* CPM_CONFIG_HAS_* bits for keys found in the file */
} cpm_network_config;

COUPONPM_API cpm_status cpm_network_config_load(const char* path, cpm_network_config* out);

/* ---- networks -------------------------------------------------------- */

typedef struct cpm_network_params {
  cpm_model model;
  double ic_probability; /* IC constant-probability setting only */
  double price;
  double coupon;
} cpm_network_params;

/* Builds the network, removing nodes with price > intrinsic + coupon.
 * intrinsics has one value per graph node. */
COUPONPM_API cpm_status cpm_network_build(const cpm_graph* graph, const cpm_network_params* params,
                                          const double* intrinsics, size_t count,
                                          cpm_network** out);
COUPONPM_API void cpm_network_free(cpm_network* network);
COUPONPM_API size_t cpm_network_node_count(const cpm_network* network);
COUPONPM_API size_t cpm_network_edge_count(const cpm_network* network);
/* nodes removed by pruning */
COUPONPM_API size_t cpm_network_pruned_count(const cpm_network* network);
COUPONPM_API double cpm_network_price(const cpm_network* network);
COUPONPM_API double cpm_network_coupon(const cpm_network* network);
COUPONPM_API double cpm_network_discount_ratio(const cpm_network* network);
COUPONPM_API cpm_model cpm_network_model(const cpm_network* network);
COUPONPM_API cpm_status cpm_network_label(const cpm_network* network, uint32_t node, int64_t* label);
COUPONPM_API cpm_status cpm_network_find_label(const cpm_network* network, int64_t label,
                                               uint32_t* node);

/* ---- seed selection -------------------------------------------------- */

typedef struct cpm_run_options {
  cpm_algorithm algorithm;
  double eps;
  double big_n;              /* 0: use n */
  int k;                     /* RA-S */
  double eps3;               /* RA-S */
  double plateau_pct;        /* RA-S, fraction (0.02 = 2%) */
  uint64_t max_ra;           /* 0: no cap */
  uint64_t l_override;       /* SPM/RPM, 0: use the bound */
  uint64_t seed;
  uint32_t threads;          /* 0: hardware concurrency */
  uint64_t memory_budget_bytes; /* RPM, 0: default */
  uint64_t sweep_points;     /* MaxInf */
  uint64_t trials;           /* HighDegree */
  uint64_t eval_simulations; /* baselines' internal scoring */
  uint64_t fixed_size;       /* MaxInf, 0: sweep */
} cpm_run_options;

typedef struct cpm_sample_counts {
  uint64_t simulations;
  uint64_t realizations;
  uint64_t ra_sets;
} cpm_sample_counts;

typedef struct cpm_profit_estimate {
  double mean_profit;
  double mean_adopters;
  double adopters_std_error;
  uint64_t sample_count;
  cpm_estimator kind;
} cpm_profit_estimate;

/* Fills the defaults: eps 0.4, k 5, eps3 0.1, plateau 0.02, sweep 50,
 * trials 100, eval_simulations 10000, everything else 0. */
COUPONPM_API void cpm_run_options_init(cpm_run_options* options);

COUPONPM_API cpm_status cpm_run(const cpm_network* network, const cpm_run_options* options,
                                cpm_selection** out);
COUPONPM_API void cpm_selection_free(cpm_selection* selection);
COUPONPM_API size_t cpm_selection_size(const cpm_selection* selection);
/* ascending node ids; valid until the selection is freed */
COUPONPM_API const uint32_t* cpm_selection_nodes(const cpm_selection* selection);
COUPONPM_API const char* cpm_selection_algorithm(const cpm_selection* selection);
COUPONPM_API const char* cpm_selection_termination(const cpm_selection* selection);
COUPONPM_API void cpm_selection_sample_counts(const cpm_selection* selection,
                                              cpm_sample_counts* out);
/* 1 and fills *out when the algorithm scored its own output */
COUPONPM_API int cpm_selection_estimate(const cpm_selection* selection, cpm_profit_estimate* out);
COUPONPM_API size_t cpm_selection_detail_count(const cpm_selection* selection);
COUPONPM_API cpm_status cpm_selection_detail(const cpm_selection* selection, size_t index,
                                             const char** key, double* value);
/* RA collection size per iteration; returns the count */
COUPONPM_API size_t cpm_selection_collection_sizes(const cpm_selection* selection,
                                                   const uint64_t** sizes);

/* ---- estimation ------------------------------------------------------ */

COUPONPM_API cpm_status cpm_estimate_profit(const cpm_network* network, const uint32_t* seeds,
                                            size_t seed_count, uint64_t simulations, uint64_t seed,
                                            uint32_t threads, cpm_profit_estimate* out);
/* Exact f(S) and pi(S) by enumeration; CPM_ERR_TOO_LARGE when refused. */
COUPONPM_API cpm_status cpm_exact_profit(const cpm_network* network, const uint32_t* seeds,
                                         size_t seed_count, double* profit, double* adopters);
/* Exhaustive maximiser of f. */
COUPONPM_API cpm_status cpm_exact_optimum(const cpm_network* network, cpm_selection** out,
                                          double* profit);

/* ---- sample-count bounds -------------------------------------------- */

typedef struct cpm_threshold_inputs {
  double n;
  double big_n;
  double eps;
  double r;
  int k;
  double eps3;
  double step;     /* RA-T grid step, 0: 0.01 */
  double rat_eps1; /* pins the RA-T split instead of searching, 0: search */
} cpm_threshold_inputs;

typedef struct cpm_threshold_table {
  double delta0;
  double rat_eps1;
  double rat_eps2;
  double delta1;
  double delta2;
  double ras_eps1;
  double ras_eps2;
  double delta1_star;
  double delta2_star;
  double delta3;
} cpm_threshold_table;

/* On CPM_ERR_SOLVER the delta0 and RA-T fields are still filled and the
 * RA-S fields are NaN. */
COUPONPM_API cpm_status cpm_thresholds(const cpm_threshold_inputs* inputs,
                                       cpm_threshold_table* out);

#ifdef __cplusplus
}
#endif

#endif /* COUPONPM_COUPONPM_H */
