#pragma once

#include <stdexcept>
#include <vector>

namespace fw {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  double norm() const;
  Vec2 normalized() const;
};

double dot(const Vec2& a, const Vec2& b);
double cross(const Vec2& a, const Vec2& b);

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(double s, const Vec2& v);

/// Planar point at unit-circle scale. Coordinates must be finite.
struct Point2 {
  double x{0.0};
  double y{0.0};
};

bool operator==(const Point2& a, const Point2& b);
Vec2 operator-(const Point2& a, const Point2& b);
Point2 operator+(const Point2& p, const Vec2& v);

/// Half-line from `origin` in unit `direction` (norm 1 within 1e-12).
struct Ray {
  Point2 origin;
  Vec2 direction;
};

class geometry_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double distance(const Point2& a, const Point2& b);

/// Convex hull in counterclockwise order (Andrew's monotone chain).
/// Collinear hull points are dropped (cross-product tolerance 1e-12).
/// Degenerate inputs yield a single point or the two extreme endpoints.
std::vector<Point2> convex_hull(std::vector<Point2> points);

/// Sorts points by counterclockwise angle about `pivot`, angles taken in
/// [0, 2pi). Points at equal angle are ordered by increasing distance from
/// the pivot. Throws geometry_error if any point coincides with the pivot.
std::vector<Point2> radial_sort(const Point2& pivot,
                                std::vector<Point2> points);

/// Internal bisector direction of the angle a-pivot-b, i.e. the normalized
/// sum of the unit vectors from pivot toward a and b. Throws if either point
/// coincides with the pivot or if a, pivot, b are collinear with the pivot
/// strictly between (bisector undefined).
Vec2 bisector_direction(const Point2& pivot, const Point2& a,
                        const Point2& b);

/// First intersection of the ray with the circle in the forward direction.
/// When the ray origin lies inside (or on) the circle the single forward
/// intersection is returned; when it lies outside, the nearer of the two
/// forward intersections. Throws geometry_error if the ray misses the circle
/// or only meets it behind the origin.
Point2 ray_circle_intersection(const Ray& ray, const Point2& center,
                               double radius);

}  // namespace fw
