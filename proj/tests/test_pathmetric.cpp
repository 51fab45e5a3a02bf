#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "stripperc/experiment.hpp"
#include "stripperc/pathmetric.hpp"

using namespace stripperc;

namespace {

Polyline random_integer_polyline(std::mt19937& rng, int points) {
  std::uniform_int_distribution<int> coord(-5, 5);
  Polyline out;
  for (int i = 0; i < points; ++i) out.push_back({double(coord(rng)), double(coord(rng))});
  return out;
}

Polyline random_real_polyline(std::mt19937& rng, int points) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  Polyline out;
  for (int i = 0; i < points; ++i) out.push_back({coord(rng), coord(rng)});
  return out;
}

}  // namespace

TEST_CASE("simplify") {
  SUBCASE("eps = 0 keeps every point of a path with distinct neighbors") {
    const Polyline a{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
    CHECK(simplify(a, 0.0) == a);
  }
  SUBCASE("collinear points at 0.01 spacing with eps = 0.03") {
    const Polyline a{{0, 0}, {0.01, 0}, {0.02, 0}, {0.03, 0}, {0.04, 0}, {0.05, 0}};
    const Polyline expected{{0, 0}, {0.04, 0}, {0.05, 0}};
    CHECK(simplify(a, 0.03) == expected);
  }
  SUBCASE("single point stays") {
    const Polyline a{{0.5, -0.25}};
    CHECK(simplify(a, 0.03) == a);
  }
  SUBCASE("empty input and negative eps are rejected") {
    CHECK_THROWS_AS(simplify(Polyline{}, 0.03), std::invalid_argument);
    CHECK_THROWS_AS(simplify(Polyline{{0, 0}}, -1.0), std::invalid_argument);
  }
  SUBCASE("every omitted point is within eps of the kept point governing it") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
      Polyline walk{{0, 0}};
      std::normal_distribution<double> step(0.0, 0.01);
      for (int i = 0; i < 400; ++i) walk.push_back({walk.back().x + step(rng), walk.back().y + step(rng)});
      const double eps = 0.005 * (1 + rep % 10);
      const Polyline kept = simplify(walk, eps);
      REQUIRE(kept.front() == walk.front());
      REQUIRE(kept.back() == walk.back());
      std::size_t next_kept = 1;
      Point2D anchor = walk.front();
      for (std::size_t l = 1; l + 1 < walk.size(); ++l) {
        if (next_kept < kept.size() - 1 && walk[l] == kept[next_kept]) {
          REQUIRE(distance(anchor, walk[l]) > eps);
          anchor = walk[l];
          ++next_kept;
        } else {
          REQUIRE(distance(anchor, walk[l]) <= eps);
        }
      }
      REQUIRE(next_kept == kept.size() - 1);
    }
  }
}

TEST_CASE("dp_distance worked examples agree with the brute-force oracle") {
  SUBCASE("single points") {
    const Polyline a{{0, 0}};
    const Polyline b{{3, 4}};
    CHECK(dp_distance(a, b) == 5.0);
    CHECK(brute_distance(a, b) == 5.0);
    CHECK(brute_distance(a, a) == 0.0);
  }
  SUBCASE("d(a, a) = 1 for a two-point segment of length 1") {
    const Polyline a{{0, 0}, {1, 0}};
    CHECK(dp_distance(a, a) == 1.0);
    CHECK(brute_distance(a, a) == 1.0);
  }
  SUBCASE("parallel segments at unit offset give sqrt 2") {
    const Polyline a{{0, 0}, {1, 0}, {2, 0}};
    const Polyline b{{0, 1}, {1, 1}, {2, 1}};
    CHECK(brute_distance(a, b) == std::sqrt(2.0));
    CHECK(dp_distance(a, b) == std::sqrt(2.0));
  }
  SUBCASE("empty inputs are rejected") {
    const Polyline a{{0, 0}};
    CHECK_THROWS_AS(dp_distance(a, Polyline{}), std::invalid_argument);
    CHECK_THROWS_AS(brute_distance(Polyline{}, a), std::invalid_argument);
    CHECK_THROWS_AS(path_distance(Polyline{}, a, 0.03), std::invalid_argument);
  }
  SUBCASE("brute force refuses M + N > 22") {
    const Polyline a(12, Point2D{0, 0});
    const Polyline b(13, Point2D{1, 0});
    CHECK_THROWS_AS(brute_distance(a, b), std::invalid_argument);
    const Polyline c(12, Point2D{1, 0});
    CHECK(brute_distance(a, c) == 1.0);
  }
}

TEST_CASE("dp_distance equals brute_distance exactly on random inputs") {
  std::mt19937 rng(1234);
  for (int rep = 0; rep < 200; ++rep) {
    const Polyline a = random_integer_polyline(rng, 1 + rng() % 7);
    const Polyline b = random_integer_polyline(rng, 1 + rng() % 7);
    REQUIRE(dp_distance(a, b) == brute_distance(a, b));
  }
  for (int rep = 0; rep < 200; ++rep) {
    const Polyline a = random_real_polyline(rng, 1 + rng() % 9);
    const Polyline b = random_real_polyline(rng, 1 + rng() % 9);
    REQUIRE(dp_distance(a, b) == brute_distance(a, b));
  }
}

TEST_CASE("dp_distance properties") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const Polyline a = random_real_polyline(rng, 1 + rng() % 40);
    const Polyline b = random_real_polyline(rng, 1 + rng() % 40);
    const double d = dp_distance(a, b);
    REQUIRE(d == dp_distance(b, a));
    REQUIRE(d >= distance(a.front(), b.front()));
    REQUIRE(d >= distance(a.back(), b.back()));
    // A valid coupling for M = N: alternate advancing a then b.
    if (a.size() == b.size()) {
      double staircase = distance(a[0], b[0]);
      for (std::size_t i = 1; i < a.size(); ++i) {
        staircase = std::max({staircase, distance(a[i], b[i - 1]), distance(a[i], b[i])});
      }
      REQUIRE(d <= staircase);
    }
  }
}

TEST_CASE("dp_distance matches the naive squared-root formula") {
  std::mt19937 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const Polyline a = random_real_polyline(rng, 2 + rng() % 60);
    const Polyline b = random_real_polyline(rng, 2 + rng() % 60);
    // Full (M+1) x (N+1) table over hypot distances.
    std::vector<std::vector<double>> table(a.size(), std::vector<double>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double here = std::hypot(a[i].x - b[j].x, a[i].y - b[j].y);
        double prior = 0.0;
        if (i && j) prior = std::min(table[i - 1][j], table[i][j - 1]);
        else if (i) prior = table[i - 1][j];
        else if (j) prior = table[i][j - 1];
        table[i][j] = std::max(prior, here);
      }
    }
    const double expected = table.back().back();
    REQUIRE(std::abs(dp_distance(a, b) - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("path_distance") {
  std::mt19937 rng(8);
  const Polyline a = random_real_polyline(rng, 30);
  const Polyline b = random_real_polyline(rng, 25);
  CHECK(path_distance(a, b, 0.0) == dp_distance(a, b));

  SUBCASE("traced paths: simplification moves the distance by at most eps and 2 eps") {
    for (int trial = 1; trial <= 10; ++trial) {
      const TrialDetail t = simulate_trial(32, 2, trial);
      const Domain& d = t.first.domain();
      const Polyline p1 = to_polyline(d, t.first_path);
      const Polyline p2 = to_polyline(d, t.second_path);
      CHECK(dp_distance(p1, simplify(p1, 0.03)) <= 0.03);
      CHECK(std::abs(path_distance(p1, p2, 0.03) - dp_distance(p1, p2)) <= 0.06);
      CHECK(std::abs(path_distance(p1, p2, 0.1) - dp_distance(p1, p2)) <= 0.2);
    }
  }
  SUBCASE("n=16: edges longer than eps, so simplify is the identity and d(a, a) is one edge") {
    const TrialDetail t = simulate_trial(16, 1, 5);
    const Domain& d = t.first.domain();
    REQUIRE(d.edge_length() > 0.03);
    const Polyline p1 = to_polyline(d, t.first_path);
    CHECK(simplify(p1, 0.03) == p1);
    CHECK(dp_distance(p1, p1) == doctest::Approx(d.edge_length()).epsilon(1e-12));
  }
}
