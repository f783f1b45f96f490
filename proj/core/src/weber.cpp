#include "fw/weber.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fw {

namespace {

double objective_at(const std::vector<Point2>& points, const Point2& p) {
  double sum = 0.0;
  for (const Point2& q : points) sum += distance(p, q);
  return sum;
}

// resultant of unit vectors from points[anchor] toward the other points
Vec2 anchor_resultant(const std::vector<Point2>& points, std::size_t anchor) {
  Vec2 r{0.0, 0.0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i == anchor) continue;
    const double d = distance(points[i], points[anchor]);
    if (d == 0.0) continue;  // exact duplicate of the anchor
    r = r + (1.0 / d) * (points[i] - points[anchor]);
  }
  return r;
}

std::size_t nearest_index(const std::vector<Point2>& points, const Point2& p) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = distance(p, points[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

bool collinear(const std::vector<Point2>& points, Vec2* dir_out) {
  // take the two most distant of the lexicographic extremes as the axis
  const auto [lo, hi] = std::minmax_element(
      points.begin(), points.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
      });
  const double extent = distance(*lo, *hi);
  if (extent == 0.0) {
    *dir_out = {1.0, 0.0};
    return true;  // all points coincide
  }
  const Vec2 dir = (1.0 / extent) * (*hi - *lo);
  for (const Point2& p : points)
    if (std::abs(cross(dir, p - *lo)) > 1e-12 * std::max(1.0, extent))
      return false;
  *dir_out = dir;
  return true;
}

WeberSolution solve_collinear(const std::vector<Point2>& points,
                              const Vec2& dir) {
  // 1-D problem along dir: the (unweighted) median minimizes the sum
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  const Point2 base = points.front();
  auto coord = [&](std::size_t i) { return dot(points[i] - base, dir); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return coord(a) < coord(b); });

  WeberSolution sol;
  sol.converged = true;
  const std::size_t n = order.size();
  if (n % 2 != 0) {
    const std::size_t mid = order[n / 2];
    sol.location = points[mid];
    sol.at_fixed_point_index = mid;
  } else {
    const Point2 a = points[order[n / 2 - 1]];
    const Point2 b = points[order[n / 2]];
    sol.location = {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    if (distance(a, b) == 0.0) sol.at_fixed_point_index = order[n / 2 - 1];
  }
  sol.objective = objective_at(points, sol.location);
  return sol;
}

}  // namespace

double descent_test_at_anchor(const std::vector<Point2>& points,
                              std::size_t anchor) {
  if (anchor >= points.size())
    throw weber_error("descent_test_at_anchor: index out of range");
  return anchor_resultant(points, anchor).norm() - 1.0;
}

WeberSolution solve_weber(const std::vector<Point2>& points,
                          const SolveConfig& config) {
  if (points.empty()) throw weber_error("solve_weber: empty point set");
  if (points.size() == 1)
    return {points.front(), 0.0, 0, true, std::size_t{0}};

  Vec2 line_dir;
  if (collinear(points, &line_dir)) return solve_collinear(points, line_dir);

  // centroid start
  Point2 y{0.0, 0.0};
  for (const Point2& p : points) {
    y.x += p.x;
    y.y += p.y;
  }
  y.x /= static_cast<double>(points.size());
  y.y /= static_cast<double>(points.size());

  WeberSolution sol;
  for (long it = 1; it <= config.max_iterations; ++it) {
    sol.iterations = it;

    // the resultant test is a global optimality certificate, so probing the
    // nearest data point each round terminates vertex-optimal instances
    // exactly instead of creeping up on them
    const std::size_t j = nearest_index(points, y);
    const Vec2 resultant = anchor_resultant(points, j);
    const double excess = resultant.norm() - 1.0;
    if (excess <= 0.0) {
      sol.location = points[j];
      sol.objective = objective_at(points, sol.location);
      sol.converged = true;
      sol.at_fixed_point_index = j;
      return sol;
    }
    if (distance(y, points[j]) < config.vertex_snap_radius) {
      // Vardi-Zhang: step off the non-optimal data point along the descent
      // direction
      double inv_sum = 0.0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const double d = distance(points[i], points[j]);
        if (d > 0.0) inv_sum += 1.0 / d;
      }
      const double step = excess / inv_sum;
      if (step < config.tolerance) {
        sol.converged = true;  // optimum indistinguishable from the anchor
        break;
      }
      y = points[j] + step * resultant.normalized();
      continue;
    }

    // Weiszfeld update
    double wx = 0.0, wy = 0.0, wsum = 0.0;
    for (const Point2& p : points) {
      const double w = 1.0 / distance(y, p);
      wx += w * p.x;
      wy += w * p.y;
      wsum += w;
    }
    const Point2 next{wx / wsum, wy / wsum};
    const double step = distance(y, next);
    y = next;
    if (step < config.tolerance) {
      sol.converged = true;
      break;
    }
  }

  sol.location = y;
  sol.objective = objective_at(points, y);
  return sol;
}

}  // namespace fw
