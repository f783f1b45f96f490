#pragma once

#include <vector>

#include "fw/geometry.hpp"

namespace fw {

/// k consecutive vertices of a regular n-gon on the unit circle, placed in
/// the canonical frame: circumcenter at the origin, line of symmetry along
/// the positive x-axis. Odd k puts the root vertex at (1, 0); even k
/// straddles the axis with vertices at angles +-(2i-1)*pi/n.
struct RegularChain {
  int n{0};
  int k{0};
  std::vector<Point2> vertices;  // counterclockwise, lowermost vertex first

  bool odd() const { return k % 2 != 0; }
  /// m in the k = 2m (even) or k = 2m+1 (odd) decomposition.
  int half_count() const { return k / 2; }
};

class chain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimizer of the chain objective on the symmetry axis segment [0, 1].
struct AxisSolveResult {
  double x_star{0.0};   // distance of the Weber point from the circumcenter
  double psi_star{0.0}; // objective value at x_star
  bool at_root{false};  // minimizer is the root vertex (odd chains only)
};

/// Requires n >= 3 and 1 <= k <= n.
RegularChain build_chain(int n, int k);

/// Sum of distances from the axis point (x, 0) to all chain vertices,
/// evaluated in closed form. Requires 0 <= x <= 1.
double objective(const RegularChain& chain, double x);

/// d/dx of objective. Requires 0 <= x <= 1.
double objective_derivative(const RegularChain& chain, double x);

/// Unique minimizer of the strictly convex objective over [0, 1], found by
/// bisecting the sign change of the derivative to interval width 1e-12.
/// Endpoint optima are detected exactly from the derivative sign, so the
/// root-vertex case reports x_star == 1 with no rounding slack.
///
/// Degenerate chains: k == 1 returns the lone vertex (x_star = 1,
/// at_root = true); for k == 2 every point of the segment between the two
/// vertices is optimal and the midpoint (the axis crossing) is returned.
AxisSolveResult minimize_on_axis(const RegularChain& chain);

/// Weber point in the canonical frame: (x_star, 0).
Point2 weber_point_chain(const RegularChain& chain);

}  // namespace fw
