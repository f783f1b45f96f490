#pragma once

#include <stdexcept>

namespace fw {

class dominance_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest polygon order n at which the Weber point of the odd chain
/// C_n(k) reaches the root vertex, together with the two sign certificates
/// bracketing the threshold.
struct ThresholdResult {
  int k{0};
  long n_threshold{0};
  double certificate_low{0.0};   // value at n_threshold - 1, must be > 0
  double certificate_high{0.0};  // value at n_threshold, must be <= 0
};

/// 2 * sum_{i=1..m} sin(i*pi/t) - 1, the root-vertex optimality value for an
/// odd (2m+1)-chain of a regular t-gon. Evaluated through the closed product
/// form 2 sin(m*pi/2t) sin((m+1)*pi/2t) / sin(pi/2t) - 1. Strictly decreasing
/// in t for t >= 2m. Requires t >= 1.
double root_condition_value(int m, long t);

/// ceil(pi*m*(m+1) + 1), a certified upper bound for the threshold of
/// k = 2m+1. Requires odd k >= 3.
long upper_bound(int k);

/// First-true binary search for the threshold of odd k >= 3 over
/// [k, upper_bound(k)]. Even k has no threshold (the Weber point of an even
/// chain never reaches the boundary of the chain) and raises dominance_error.
ThresholdResult compute_threshold(int k);

/// Independent cross-check through the axis minimizer of the chain module:
/// true iff the Weber point of C_n(k) sits at the root vertex.
bool verify_threshold_by_solver(int k, int n);

}  // namespace fw
