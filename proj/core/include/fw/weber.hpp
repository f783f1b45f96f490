#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fw/geometry.hpp"

namespace fw {

class weber_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveConfig {
  double tolerance{1e-12};          // per-iteration movement threshold
  long max_iterations{1'000'000};
  double vertex_snap_radius{1e-9};  // proximity at which anchors are probed
};

struct WeberSolution {
  Point2 location;
  double objective{0.0};  // sum of distances at `location`
  long iterations{0};
  bool converged{false};
  // set when the minimizer coincides with an input point
  std::optional<std::size_t> at_fixed_point_index;
};

/// Resultant test at a data point: returns the norm of the sum of unit
/// vectors from points[anchor] toward every other point, minus 1. The anchor
/// is the Fermat-Weber point iff the value is <= 0. Exact duplicates of the
/// anchor contribute nothing.
double descent_test_at_anchor(const std::vector<Point2>& points,
                              std::size_t anchor);

/// Weiszfeld iteration with anchor handling: whenever the resultant test
/// certifies an input point as optimal the solve terminates exactly there;
/// an iterate trapped at a non-optimal input point is displaced along the
/// descent direction (Vardi-Zhang step) and iteration continues.
///
/// Collinear inputs have no unique minimizer; the 1-D weighted median is
/// returned (midpoint of the optimal segment for even counts).
WeberSolution solve_weber(const std::vector<Point2>& points,
                          const SolveConfig& config = {});

}  // namespace fw
