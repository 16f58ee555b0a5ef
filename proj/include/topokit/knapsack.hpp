#pragma once

#include <vector>

#include "topokit/design.hpp"

namespace topokit {

// Exact knapsack solve for same-size elements: the optimum keeps the k
// elements with the largest values. Ties break toward the lower element
// index (stable descending sort) so runs are reproducible.
DesignField select_top_k(const std::vector<double>& values, int k);

// Volume budget at outer iteration k (1-based):
//   V_k = round(n * max(volfrac, mu^k))
// i.e. the allowed volume shrinks by the factor mu each iteration until it
// reaches the target fraction, where it stays. Rounding is half away from
// zero. mu^k is accumulated by repeated multiplication so the schedule is
// bit-identical to the incremental loop form.
int volume_budget(int n_elements, double volfrac, double mu, int iteration);

}  // namespace topokit
