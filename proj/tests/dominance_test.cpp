#include <doctest.h>

#include <cmath>
#include <random>

#include "fw/dominance.hpp"

using namespace fw;

namespace {
double direct_sum(int m, long t) {
  double s = 0.0;
  for (int i = 1; i <= m; ++i) s += std::sin(i * M_PI / static_cast<double>(t));
  return 2.0 * s - 1.0;
}
}  // namespace

TEST_CASE("root condition value agrees with the direct sum") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> m_dist(1, 200);
  for (int t = 0; t < 2000; ++t) {
    const int m = m_dist(rng);
    const long lo = 2L * m;
    const long n =
        std::uniform_int_distribution<long>(lo, 1'000'000L)(rng);
    CHECK(std::abs(root_condition_value(m, n) - direct_sum(m, n)) < 1e-10);
  }
  CHECK_THROWS_AS(root_condition_value(1, 0), dominance_error);
}

TEST_CASE("root condition boundary values") {
  // equality at the 3-chain threshold: 2 sin(pi/6) - 1 = 0
  CHECK(std::abs(root_condition_value(1, 6)) < 1e-14);
  CHECK(root_condition_value(2, 19) <= 0.0);
  CHECK(root_condition_value(2, 18) > 0.0);
  // small-angle regime: value approaches 2*pi*m(m+1)/2/t - 1
  const double approx = 2.0 * M_PI * (1 + 2 + 3) / 1000.0 - 1.0;
  CHECK(root_condition_value(3, 1000) ==
        doctest::Approx(approx).epsilon(1e-3));
  CHECK(root_condition_value(3, 1000) < 0.0);
}

TEST_CASE("root condition decreases in t on the certified range") {
  for (int m : {1, 2, 5, 17, 60}) {
    double prev = root_condition_value(m, 2L * m);
    for (long t = 2L * m + 1; t < 2L * m + 500; ++t) {
      const double cur = root_condition_value(m, t);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("upper bound values") {
  CHECK(upper_bound(3) == 8);
  CHECK(upper_bound(5) == 20);
  CHECK(upper_bound(101) >= 8011);
  CHECK_THROWS_AS(upper_bound(4), dominance_error);
}

TEST_CASE("threshold reference values") {
  const int ks[] = {3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25,
                    51, 101, 151, 199};
  const long expected[] = {6,   19,  38,  63,   94,   132,  176,  226,
                           283, 346, 415, 490, 2042, 8011, 17907, 31102};
  for (std::size_t i = 0; i < std::size(ks); ++i) {
    const auto r = compute_threshold(ks[i]);
    CHECK(r.n_threshold == expected[i]);
    CHECK(r.certificate_low > 0.0);
    CHECK(r.certificate_high <= 0.0);
    CHECK(r.n_threshold <= upper_bound(ks[i]));
  }
  CHECK_THROWS_AS(compute_threshold(4), dominance_error);
  CHECK_THROWS_AS(compute_threshold(1), dominance_error);
}

TEST_CASE("threshold stays below the quadratic bound") {
  for (int k = 3; k <= 499; k += 2)
    CHECK(compute_threshold(k).n_threshold <= upper_bound(k));
}

TEST_CASE("quadratic growth band") {
  for (int k : {51, 101, 151, 199}) {
    const double ratio =
        static_cast<double>(compute_threshold(k).n_threshold) /
        (static_cast<double>(k) * k);
    CHECK(ratio > 0.5);
    CHECK(ratio < M_PI / 4.0 + 0.1);
  }
}

TEST_CASE("solver cross-check at the threshold") {
  CHECK(verify_threshold_by_solver(5, 19));
  CHECK_FALSE(verify_threshold_by_solver(5, 18));
  CHECK(verify_threshold_by_solver(3, 6));
  for (int k = 3; k <= 25; k += 2) {
    const long nk = compute_threshold(k).n_threshold;
    CHECK(verify_threshold_by_solver(k, static_cast<int>(nk)));
    CHECK_FALSE(verify_threshold_by_solver(k, static_cast<int>(nk) - 1));
  }
}
