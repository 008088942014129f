/* The public header must compile as plain C. */
#include <stdio.h>
#include <string.h>

#include "couponpm/couponpm.h"

int main(void) {
  const char* text = "1 2\n2 3\n";
  cpm_graph* g = NULL;
  cpm_network* net = NULL;
  cpm_selection* sel = NULL;
  cpm_run_options opt;
  cpm_network_params params = {CPM_MODEL_IC_CP, 1.0, 0.5, 0.25};
  double intr[3] = {0.9, 0.9, 0.9};
  double profit = 0;

  if (cpm_graph_parse(text, strlen(text), 0, &g) != CPM_OK) return 1;
  if (cpm_network_build(g, &params, intr, 3, &net) != CPM_OK) return 2;
  cpm_run_options_init(&opt);
  opt.algorithm = CPM_ALG_RA_T;
  opt.seed = 1;
  if (cpm_run(net, &opt, &sel) != CPM_OK) return 3;
  if (cpm_exact_profit(net, cpm_selection_nodes(sel), cpm_selection_size(sel), &profit, NULL) !=
      CPM_OK)
    return 4;
  printf("%s selected %zu nodes, exact profit %.4f\n", cpm_selection_algorithm(sel),
         cpm_selection_size(sel), profit);
  cpm_selection_free(sel);
  cpm_network_free(net);
  cpm_graph_free(g);
  return profit >= 0 ? 0 : 5;
}
