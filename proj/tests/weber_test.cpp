#include <doctest.h>

#include <cmath>
#include <random>

#include "fw/chain.hpp"
#include "fw/dominance.hpp"
#include "fw/weber.hpp"
#include "test_support.hpp"

using namespace fw;

TEST_CASE("equilateral triangle solves to the centroid") {
  std::vector<Point2> pts;
  for (int i = 0; i < 3; ++i) {
    const double a = 2.0 * M_PI * i / 3.0;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  const auto sol = solve_weber(pts);
  CHECK(sol.converged);
  CHECK(distance(sol.location, {0, 0}) < 1e-9);
  CHECK(sol.objective == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("obtuse triangles solve to the obtuse vertex") {
  std::mt19937 rng(53);
  for (int t = 0; t < 50; ++t) {
    const auto tri = fwtest::random_obtuse_triangle(rng);
    const auto sol = solve_weber(tri);
    REQUIRE(sol.converged);
    REQUIRE(sol.at_fixed_point_index.has_value());
    CHECK(*sol.at_fixed_point_index == 0);
    CHECK(distance(sol.location, tri[0]) == 0.0);
  }
}

TEST_CASE("convex quadrilaterals solve to the diagonal intersection") {
  std::mt19937 rng(59);
  for (int t = 0; t < 50; ++t) {
    const auto quad = fwtest::random_convex_quad(rng);
    const Point2 expected =
        fwtest::line_intersection(quad[0], quad[2], quad[1], quad[3]);
    const auto sol = solve_weber(quad);
    CHECK(sol.converged);
    CHECK(distance(sol.location, expected) < 1e-9);
  }
}

TEST_CASE("descent test at chain root vertices") {
  // the resultant test at the root vertex is the root condition value
  for (int k : {3, 5, 7, 9}) {
    const int m = k / 2;
    for (int n = k; n <= 45; ++n) {
      const auto chain = build_chain(n, k);
      const std::size_t root = static_cast<std::size_t>(m);
      CHECK(std::abs(descent_test_at_anchor(chain.vertices, root) -
                     root_condition_value(m, n)) < 1e-12);
    }
  }
  const auto c19 = build_chain(19, 5);
  CHECK(descent_test_at_anchor(c19.vertices, 2) <= 0.0);
  const auto c18 = build_chain(18, 5);
  CHECK(descent_test_at_anchor(c18.vertices, 2) > 0.0);
}

TEST_CASE("duplicates of the anchor contribute nothing") {
  const std::vector<Point2> pts{{0, 0}, {0, 0}, {1, 0}, {-1, 0}, {0, 1}};
  const std::vector<Point2> without_dup{{0, 0}, {1, 0}, {-1, 0}, {0, 1}};
  CHECK(descent_test_at_anchor(pts, 0) ==
        doctest::Approx(descent_test_at_anchor(without_dup, 0))
            .epsilon(1e-15));
  CHECK_THROWS_AS(descent_test_at_anchor(pts, 10), weber_error);
}

TEST_CASE("solver agrees with the axis minimizer on chains") {
  for (int k : {4, 5}) {
    for (int n = k; n <= (k == 4 ? 18 : 19); ++n) {
      const auto chain = build_chain(n, k);
      const auto sol = solve_weber(chain.vertices);
      const auto axis = minimize_on_axis(chain);
      REQUIRE(sol.converged);
      CHECK(distance(sol.location, {axis.x_star, 0.0}) < 1e-7);
    }
  }
}

TEST_CASE("solver lands exactly on the root vertex past the threshold") {
  const auto chain = build_chain(19, 5);
  const auto sol = solve_weber(chain.vertices);
  REQUIRE(sol.at_fixed_point_index.has_value());
  CHECK(*sol.at_fixed_point_index == 2);
  CHECK(sol.location == chain.vertices[2]);
}

TEST_CASE("objective never increases across iterations") {
  // re-run the fixed-point map by hand and watch the objective
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<Point2> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({u(rng), u(rng)});
    auto objective_at = [&](const Point2& p) {
      double s = 0.0;
      for (const Point2& q : pts) s += distance(p, q);
      return s;
    };
    Point2 y{0.0, 0.0};
    for (const Point2& p : pts) {
      y.x += p.x / pts.size();
      y.y += p.y / pts.size();
    }
    double prev = objective_at(y);
    for (int it = 0; it < 200; ++it) {
      double wx = 0, wy = 0, ws = 0;
      bool at_vertex = false;
      for (const Point2& p : pts) {
        const double d = distance(y, p);
        if (d < 1e-13) {
          at_vertex = true;
          break;
        }
        wx += p.x / d;
        wy += p.y / d;
        ws += 1.0 / d;
      }
      if (at_vertex) break;
      y = {wx / ws, wy / ws};
      const double cur = objective_at(y);
      CHECK(cur <= prev + 1e-14);
      prev = cur;
    }
  }
}

TEST_CASE("rigid motion equivariance") {
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  for (int t = 0; t < 20; ++t) {
    std::vector<Point2> pts;
    for (int i = 0; i < 7; ++i) pts.push_back({u(rng), u(rng)});
    const double a = ang(rng);
    const Vec2 shift{u(rng) * 3.0, u(rng) * 3.0};
    std::vector<Point2> moved;
    for (const Point2& p : pts)
      moved.push_back(Point2{p.x * std::cos(a) - p.y * std::sin(a),
                             p.x * std::sin(a) + p.y * std::cos(a)} +
                      shift);
    const auto base = solve_weber(pts);
    const auto transformed = solve_weber(moved);
    const Point2 expected =
        Point2{base.location.x * std::cos(a) - base.location.y * std::sin(a),
               base.location.x * std::sin(a) + base.location.y * std::cos(a)} +
        shift;
    CHECK(distance(transformed.location, expected) < 1e-9);
  }
}

TEST_CASE("scale invariance of the argmin") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double s : {0.25, 3.0, 17.5}) {
    std::vector<Point2> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({u(rng), u(rng)});
    std::vector<Point2> scaled;
    for (const Point2& p : pts) scaled.push_back({s * p.x, s * p.y});
    const auto base = solve_weber(pts);
    const auto big = solve_weber(scaled);
    CHECK(distance(big.location, {s * base.location.x, s * base.location.y}) <
          1e-8 * s);
    CHECK(big.objective == doctest::Approx(s * base.objective).epsilon(1e-8));
  }
}

TEST_CASE("collinear input returns the 1-D median") {
  const std::vector<Point2> odd{{0, 0}, {4, 4}, {1, 1}, {3, 3}, {2, 2}};
  const auto sol = solve_weber(odd);
  CHECK(sol.converged);
  CHECK(sol.location == Point2{2, 2});
  REQUIRE(sol.at_fixed_point_index.has_value());
  CHECK(*sol.at_fixed_point_index == 4);

  const std::vector<Point2> even{{0, 0}, {1, 0}, {3, 0}, {10, 0}};
  const auto mid = solve_weber(even);
  CHECK(mid.location == Point2{2, 0});

  CHECK_THROWS_AS(solve_weber({}), weber_error);
  const auto single = solve_weber({{2, 5}});
  CHECK(single.location == Point2{2, 5});
}
