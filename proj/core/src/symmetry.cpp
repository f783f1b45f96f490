#include "fw/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fw {

namespace {

constexpr double kBisectorTol = 1e-9;   // radians between pair bisectors
constexpr double kRadialTieTol = 1e-12; // radians; collinear-with-pivot guard
constexpr double kUnitTol = 1e-12;

void validate_spec(const SymmetricSpec& spec) {
  if (spec.half_angles.empty())
    throw symmetry_error("SymmetricSpec: at least one mirrored pair required");
  if (std::abs(distance(spec.pivot, spec.center) - 1.0) > kUnitTol)
    throw symmetry_error("SymmetricSpec: pivot must lie on the unit circle");
  double prev = 0.0;
  for (double a : spec.half_angles) {
    if (!(a > prev && a < M_PI))
      throw symmetry_error(
          "SymmetricSpec: half-angles must be strictly increasing in (0, pi)");
    prev = a;
  }
}

double angle_between(const Vec2& a, const Vec2& b) {
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

struct Candidate {
  std::size_t index;
  Vec2 axis;
  std::vector<Point2> base_set;
  SymmetricSpec spec;
  double condition;
};

// Attempts to interpret points[pivot_index] as the pivot of a reflection
// symmetric base set. Returns nullopt when the mirror-pair bisectors fail to
// coincide or the construction degenerates.
std::optional<Candidate> try_pivot(const std::vector<Point2>& points,
                                   std::size_t pivot_index) {
  const Point2 pivot = points[pivot_index];
  const std::size_t m = (points.size() - 1) / 2;

  struct Polar {
    double angle;
    Point2 p;
  };
  std::vector<Polar> others;
  others.reserve(points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i == pivot_index) continue;
    const Vec2 v = points[i] - pivot;
    double a = std::atan2(v.y, v.x);
    if (a < 0.0) a += 2.0 * M_PI;
    others.push_back({a, points[i]});
  }
  std::sort(others.begin(), others.end(),
            [](const Polar& a, const Polar& b) { return a.angle < b.angle; });

  // two points collinear with the pivot make the pairing ambiguous
  for (std::size_t i = 1; i < others.size(); ++i)
    if (others[i].angle - others[i - 1].angle < kRadialTieTol)
      return std::nullopt;

  // rotate the circular order to start after the widest angular gap so the
  // wedge seen from the pivot is contiguous
  std::size_t start = 0;
  double widest = others.front().angle + 2.0 * M_PI - others.back().angle;
  for (std::size_t i = 1; i < others.size(); ++i) {
    const double gap = others[i].angle - others[i - 1].angle;
    if (gap > widest) {
      widest = gap;
      start = i;
    }
  }
  std::rotate(others.begin(), others.begin() + static_cast<long>(start),
              others.end());

  // reflection reverses the radial order: position i pairs with the i-th
  // position from the other end
  std::vector<Vec2> bisectors;
  bisectors.reserve(m);
  try {
    for (std::size_t i = 0; i < m; ++i)
      bisectors.push_back(bisector_direction(pivot, others[i].p,
                                             others[others.size() - 1 - i].p));
  } catch (const geometry_error&) {
    return std::nullopt;
  }
  for (const Vec2& b : bisectors)
    if (angle_between(b, bisectors.front()) > kBisectorTol)
      return std::nullopt;

  Vec2 axis{0.0, 0.0};
  for (const Vec2& b : bisectors) axis = axis + b;
  axis = axis.normalized();
  const Point2 center = pivot + axis;
  const Vec2 to_pivot = (pivot - center).normalized();

  // project each point along its ray toward the pivot onto the circle; the
  // intersection past the pivot is the base point it was slid from
  Candidate cand;
  cand.index = pivot_index;
  cand.axis = axis;
  cand.base_set.push_back(pivot);
  cand.spec.pivot = pivot;
  cand.spec.center = center;
  try {
    for (std::size_t i = 0; i < m; ++i) {
      double theta_sum = 0.0;
      for (const Polar& side :
           {others[i], others[others.size() - 1 - i]}) {
        const Ray ray{pivot, (side.p - pivot).normalized()};
        const Point2 u = ray_circle_intersection(ray, center, 1.0);
        cand.base_set.push_back(u);
        const double c =
            std::clamp(dot((u - center).normalized(), to_pivot), -1.0, 1.0);
        theta_sum += std::acos(c);
      }
      const double theta = 0.5 * theta_sum;
      if (theta < 1e-9 || theta > M_PI - 1e-9) return std::nullopt;
      cand.spec.half_angles.push_back(theta);
    }
  } catch (const geometry_error&) {
    return std::nullopt;
  }
  std::sort(cand.spec.half_angles.begin(), cand.spec.half_angles.end());
  cand.condition = condition_a(cand.spec);
  return cand;
}

}  // namespace

std::vector<Point2> materialize(const SymmetricSpec& spec) {
  validate_spec(spec);
  const Vec2 ux = (spec.pivot - spec.center).normalized();
  const Vec2 uy{-ux.y, ux.x};
  std::vector<Point2> out;
  out.reserve(2 * spec.half_angles.size() + 1);
  out.push_back(spec.pivot);
  for (double theta : spec.half_angles) {
    const double c = std::cos(theta), s = std::sin(theta);
    out.push_back(spec.center + (c * ux + s * uy));
    out.push_back(spec.center + (c * ux + (-s) * uy));
  }
  return out;
}

double condition_a(const SymmetricSpec& spec) {
  double sum = 0.0;
  for (double theta : spec.half_angles) sum += std::sin(0.5 * theta);
  return 2.0 * sum - 1.0;
}

std::vector<std::size_t> pivot_candidates(const std::vector<Point2>& points) {
  const std::vector<Point2> hull = convex_hull(points);
  // hull order is CCW; start from the lowest, then leftmost vertex
  std::size_t start = 0;
  for (std::size_t i = 1; i < hull.size(); ++i)
    if (hull[i].y < hull[start].y ||
        (hull[i].y == hull[start].y && hull[i].x < hull[start].x))
      start = i;
  std::vector<std::size_t> indices;
  indices.reserve(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2& v = hull[(start + i) % hull.size()];
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] == v) {
        indices.push_back(j);
        break;
      }
  }
  return indices;
}

DetectionReport detect_extension(const std::vector<Point2>& points) {
  if (points.size() < 3 || points.size() % 2 == 0)
    throw symmetry_error(
        "detect_extension: point count must be odd and at least 3");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (distance(points[i], points[j]) == 0.0)
        throw symmetry_error("detect_extension: duplicate points");

  std::vector<Candidate> accepted;
  for (std::size_t idx : pivot_candidates(points))
    if (auto cand = try_pivot(points, idx)) accepted.push_back(std::move(*cand));

  DetectionReport report;
  if (accepted.empty()) return report;

  // Equally spaced cocircular sets decompose around every vertex, so several
  // pivots can qualify. The Condition A value at a pivot is the descent
  // excess of the Weber objective there; the pivot with the smallest excess
  // is the canonical one, and it is the unique carrier of the Weber point
  // whenever any value is <= 0.
  const Candidate* chosen = &accepted.front();
  for (const Candidate& c : accepted)
    if (c.condition < chosen->condition) chosen = &c;

  report.is_extension_member = true;
  report.pivot = points[chosen->index];
  report.axis_direction = chosen->axis;
  report.base_set = chosen->base_set;
  report.base_spec = chosen->spec;
  report.condition_a_value = chosen->condition;
  report.weber_at_pivot = chosen->condition <= 0.0;
  return report;
}

bool weber_at_pivot(const std::vector<Point2>& points) {
  const DetectionReport report = detect_extension(points);
  if (!report.is_extension_member)
    throw symmetry_error("weber_at_pivot: not an extension-family member");
  return *report.weber_at_pivot;
}

}  // namespace fw
