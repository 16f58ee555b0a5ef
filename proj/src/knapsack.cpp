#include "topokit/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace topokit {

DesignField select_top_k(const std::vector<double>& values, int k) {
  const int n = static_cast<int>(values.size());
  if (k < 0 || k > n)
    throw std::invalid_argument("select_top_k: k=" + std::to_string(k) +
                                " outside [0, " + std::to_string(n) + "]");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  DesignField d(n, false);
  for (int i = 0; i < k; ++i) d.set(idx[i], true);
  return d;
}

int volume_budget(int n_elements, double volfrac, double mu, int iteration) {
  if (n_elements < 0) throw std::invalid_argument("volume_budget: negative element count");
  if (!(volfrac > 0.0) || !(volfrac <= 1.0))
    throw std::invalid_argument("volume_budget: volfrac must be in (0, 1]");
  if (!(mu > 0.0) || !(mu < 1.0))
    throw std::invalid_argument("volume_budget: mu must be in (0, 1)");
  if (iteration < 1) throw std::invalid_argument("volume_budget: iteration must be >= 1");
  double v = 1.0;
  for (int i = 0; i < iteration && v > volfrac; ++i) v *= mu;
  return static_cast<int>(std::llround(n_elements * std::max(volfrac, v)));
}

}  // namespace topokit
