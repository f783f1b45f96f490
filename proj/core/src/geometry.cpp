#include "fw/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fw {

namespace {
constexpr double kCollinearTol = 1e-12;
constexpr double kAngleTieTol = 1e-12;
constexpr double kForwardTol = 1e-9;

double angle_in_turn(const Vec2& v) {
  double a = std::atan2(v.y, v.x);
  if (a < 0.0) a += 2.0 * M_PI;
  return a;
}
}  // namespace

double Vec2::norm() const { return std::hypot(x, y); }

Vec2 Vec2::normalized() const {
  const double n = norm();
  if (n == 0.0) throw geometry_error("cannot normalize zero vector");
  return {x / n, y / n};
}

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

bool operator==(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}
Vec2 operator-(const Point2& a, const Point2& b) {
  return {a.x - b.x, a.y - b.y};
}
Point2 operator+(const Point2& p, const Vec2& v) {
  return {p.x + v.x, p.y + v.y};
}

double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  if (points.empty()) throw geometry_error("convex_hull: empty input");
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  std::vector<Point2> hull(2 * n);
  std::size_t h = 0;
  // lower hull
  for (std::size_t i = 0; i < n; ++i) {
    while (h >= 2 &&
           cross(hull[h - 1] - hull[h - 2], points[i] - hull[h - 2]) <=
               kCollinearTol)
      --h;
    hull[h++] = points[i];
  }
  // upper hull
  for (std::size_t i = n - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower &&
           cross(hull[h - 1] - hull[h - 2], points[i] - hull[h - 2]) <=
               kCollinearTol)
      --h;
    hull[h++] = points[i];
  }
  hull.resize(h - 1);
  return hull;
}

std::vector<Point2> radial_sort(const Point2& pivot,
                                std::vector<Point2> points) {
  struct Keyed {
    double angle;
    double dist;
    Point2 p;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(points.size());
  for (const Point2& p : points) {
    const double d = distance(pivot, p);
    if (d == 0.0)
      throw geometry_error("radial_sort: point coincides with pivot");
    keyed.push_back({angle_in_turn(p - pivot), d, p});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.angle < b.angle || (a.angle == b.angle && a.dist < b.dist);
  });
  // points whose angles agree within tolerance count as ties: order by distance
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i + 1;
    while (j < keyed.size() && keyed[j].angle - keyed[i].angle <= kAngleTieTol)
      ++j;
    std::sort(keyed.begin() + i, keyed.begin() + j,
              [](const Keyed& a, const Keyed& b) { return a.dist < b.dist; });
    i = j;
  }
  std::vector<Point2> out;
  out.reserve(keyed.size());
  for (const Keyed& k : keyed) out.push_back(k.p);
  return out;
}

Vec2 bisector_direction(const Point2& pivot, const Point2& a,
                        const Point2& b) {
  if (distance(pivot, a) == 0.0 || distance(pivot, b) == 0.0)
    throw geometry_error("bisector_direction: arm coincides with pivot");
  const Vec2 u = (a - pivot).normalized();
  const Vec2 v = (b - pivot).normalized();
  const Vec2 s = u + v;
  if (s.norm() < kCollinearTol)
    throw geometry_error(
        "bisector_direction: pivot lies between a and b, bisector undefined");
  return s.normalized();
}

Point2 ray_circle_intersection(const Ray& ray, const Point2& center,
                               double radius) {
  const Vec2 oc = ray.origin - center;
  // |oc + t d|^2 = r^2 with |d| = 1
  const double b = dot(ray.direction, oc);
  const double c = dot(oc, oc) - radius * radius;
  const double disc = b * b - c;
  if (disc < 0.0)
    throw geometry_error("ray_circle_intersection: ray misses circle");
  const double sq = std::sqrt(disc);
  const double t1 = -b - sq;
  const double t2 = -b + sq;
  if (t2 < kForwardTol)
    throw geometry_error("ray_circle_intersection: no forward intersection");
  const double t = (t1 >= kForwardTol) ? t1 : t2;
  return ray.origin + t * ray.direction;
}

}  // namespace fw
