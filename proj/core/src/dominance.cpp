#include "fw/dominance.hpp"

#include <algorithm>
#include <cmath>

#include "fw/chain.hpp"

namespace fw {

double root_condition_value(int m, long t) {
  if (t < 1) throw dominance_error("root_condition_value: t must be positive");
  if (m < 1) throw dominance_error("root_condition_value: m must be positive");
  const double h = M_PI / (2.0 * static_cast<double>(t));
  return 2.0 * std::sin(m * h) * std::sin((m + 1) * h) / std::sin(h) - 1.0;
}

long upper_bound(int k) {
  if (k < 3 || k % 2 == 0)
    throw dominance_error("upper_bound: k must be odd and >= 3");
  const long m = (k - 1) / 2;
  return static_cast<long>(
      std::ceil(M_PI * static_cast<double>(m) * static_cast<double>(m + 1) +
                1.0));
}

ThresholdResult compute_threshold(int k) {
  if (k % 2 == 0)
    throw dominance_error(
        "compute_threshold: N(k) is undefined (infinite) for even k");
  if (k < 3) throw dominance_error("compute_threshold: k must be >= 3");
  const int m = (k - 1) / 2;

  // root_condition_value(m, t) decreases in t for t >= 2m; find the first
  // t with a non-positive value
  long lo = std::max<long>(k, 2L * m);
  long hi = upper_bound(k);
  if (root_condition_value(m, lo) <= 0.0) {
    hi = lo;
  } else {
    while (lo + 1 < hi) {
      const long mid = lo + (hi - lo) / 2;
      if (root_condition_value(m, mid) <= 0.0)
        hi = mid;
      else
        lo = mid;
    }
  }
  return {k, hi, root_condition_value(m, hi - 1),
          root_condition_value(m, hi)};
}

bool verify_threshold_by_solver(int k, int n) {
  return minimize_on_axis(build_chain(n, k)).at_root;
}

}  // namespace fw
