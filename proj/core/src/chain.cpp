#include "fw/chain.hpp"

#include <cmath>

namespace fw {

namespace {
constexpr double kBisectWidth = 1e-12;

void check_x(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw chain_error("axis coordinate outside [0, 1]");
}

// cosine of the central angle of the i-th symmetric vertex pair
double pair_cosine(const RegularChain& chain, int i) {
  if (chain.odd()) return std::cos(2.0 * i * M_PI / chain.n);
  return std::cos((2.0 * i - 1.0) * M_PI / chain.n);
}
}  // namespace

RegularChain build_chain(int n, int k) {
  if (n < 3) throw chain_error("build_chain: n must be at least 3");
  if (k < 1 || k > n) throw chain_error("build_chain: k must satisfy 1 <= k <= n");
  RegularChain chain;
  chain.n = n;
  chain.k = k;
  chain.vertices.reserve(static_cast<std::size_t>(k));
  const int m = k / 2;
  if (k % 2 != 0) {
    for (int i = -m; i <= m; ++i) {
      const double a = 2.0 * i * M_PI / n;
      chain.vertices.push_back({std::cos(a), std::sin(a)});
    }
  } else {
    for (int i = -m; i < m; ++i) {
      const double a = (2.0 * i + 1.0) * M_PI / n;
      chain.vertices.push_back({std::cos(a), std::sin(a)});
    }
  }
  return chain;
}

double objective(const RegularChain& chain, double x) {
  check_x(x);
  const int m = chain.half_count();
  double sum = chain.odd() ? 1.0 - x : 0.0;
  for (int i = 1; i <= m; ++i) {
    const double c = pair_cosine(chain, i);
    sum += 2.0 * std::sqrt(x * x - 2.0 * c * x + 1.0);
  }
  return sum;
}

double objective_derivative(const RegularChain& chain, double x) {
  check_x(x);
  const int m = chain.half_count();
  double sum = chain.odd() ? -1.0 : 0.0;
  for (int i = 1; i <= m; ++i) {
    const double c = pair_cosine(chain, i);
    sum += 2.0 * (x - c) / std::sqrt(x * x - 2.0 * c * x + 1.0);
  }
  return sum;
}

AxisSolveResult minimize_on_axis(const RegularChain& chain) {
  if (chain.k == 1) return {1.0, 0.0, true};

  // endpoint checks make the boundary cases exact
  if (objective_derivative(chain, 1.0) <= 0.0)
    return {1.0, objective(chain, 1.0), chain.odd()};
  if (objective_derivative(chain, 0.0) >= 0.0)
    return {0.0, objective(chain, 0.0), false};

  double lo = 0.0, hi = 1.0;  // psi' < 0 at lo, > 0 at hi
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (objective_derivative(chain, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double x = 0.5 * (lo + hi);
  return {x, objective(chain, x), false};
}

Point2 weber_point_chain(const RegularChain& chain) {
  return {minimize_on_axis(chain).x_star, 0.0};
}

}  // namespace fw
