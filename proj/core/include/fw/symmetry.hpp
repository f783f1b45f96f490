#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fw/geometry.hpp"

namespace fw {

class symmetry_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reflection-symmetric point set on a unit circle, given as the pivot
/// point, the circle center, and the half-angles of the m mirrored pairs.
/// The full set has 2m+1 points. Half-angles are strictly increasing and lie
/// in the open interval (0, pi).
struct SymmetricSpec {
  Point2 pivot;
  Point2 center;
  std::vector<double> half_angles;
};

/// Outcome of extension-family membership detection.
struct DetectionReport {
  bool is_extension_member{false};
  std::optional<Point2> pivot;
  std::optional<Vec2> axis_direction;  // unit vector from pivot toward center
  std::optional<std::vector<Point2>> base_set;  // pivot first, then pairs
  std::optional<SymmetricSpec> base_spec;
  std::optional<double> condition_a_value;  // 2*sum sin(theta_i/2) - 1
  std::optional<bool> weber_at_pivot;       // condition_a_value <= 0
};

/// Expands a spec into its 2m+1 concrete points: the pivot followed by the
/// mirrored pairs (upper then lower point of each pair, ascending angle).
std::vector<Point2> materialize(const SymmetricSpec& spec);

/// 2 * sum_{i=1..m} sin(theta_i/2) - 1. The Weber point of the materialized
/// set coincides with the pivot iff this is <= 0.
double condition_a(const SymmetricSpec& spec);

/// Indices of the convex hull vertices of `points`, in counterclockwise hull
/// order starting from the lowest (then leftmost) vertex. Only these are
/// eligible pivots.
std::vector<std::size_t> pivot_candidates(const std::vector<Point2>& points);

/// Decides whether `points` (odd cardinality, no duplicates) belongs to the
/// extension family of some reflection-symmetric set: some hull vertex must
/// see the remaining points in mirror pairs whose angle bisectors coincide.
/// On success the base set is rebuilt by projecting each point onto the unit
/// circle through the pivot along its ray toward the pivot.
///
/// When several hull vertices qualify (equally spaced cocircular sets
/// decompose around every vertex), the pivot with the smallest Condition A
/// value is reported; it is the unique carrier of the Weber point whenever
/// any value is <= 0. Ties fall back to hull order.
DetectionReport detect_extension(const std::vector<Point2>& points);

/// Theorem-4 verdict for a member set: true iff the Weber point of `points`
/// coincides with the detected pivot. Throws symmetry_error for non-members.
bool weber_at_pivot(const std::vector<Point2>& points);

}  // namespace fw
