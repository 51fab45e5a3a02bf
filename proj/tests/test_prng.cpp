#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <tuple>

#include "stripperc/prng.hpp"

using namespace stripperc;

namespace {

void check_boundary(const Coloring& c) {
  const Domain& d = c.domain();
  for (int r = 0; r < d.row_count(); ++r) {
    REQUIRE(c.at({r, 0}) == Color::White);
    REQUIRE(c.at({r, d.row_size(r) - 1}) == Color::Black);
  }
}

int consumed(WHState from, WHState to) {
  int steps = 0;
  while (from != to) {
    from = wh_next(from).state;
    REQUIRE(++steps < 1000000);
  }
  return steps;
}

}  // namespace

TEST_CASE("wh_next from (1, 1, 1)") {
  const WHStep step = wh_next({1, 1, 1});
  CHECK(step.state == WHState{171, 172, 170});
  // 171/30269 + 172/30307 + 170/30323, summed by hand.
  CHECK(step.u == doctest::Approx(0.0169309062).epsilon(1e-9));
  CHECK(step.state != wh_next(step.state).state);
}

TEST_CASE("wh_next stays in range over 10^6 steps") {
  WHState s{1, 2, 3};
  for (int i = 0; i < 1000000; ++i) {
    const WHStep step = wh_next(s);
    REQUIRE(step.u >= 0.0);
    REQUIRE(step.u < 1.0);
    REQUIRE(step.state.valid());
    s = step.state;
  }
}

TEST_CASE("stream from (1, 2, 3) matches the AS 183 golden file") {
  std::ifstream golden(STRIPPERC_TEST_DATA_DIR "/wh_as183_golden.txt");
  REQUIRE(golden);
  WichmannHill rng({1, 2, 3});
  std::string line;
  int count = 0;
  while (std::getline(golden, line)) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.15g", rng.next());
    REQUIRE_MESSAGE(line == buffer, "value #" << count + 1);
    ++count;
  }
  CHECK(count == 1000);
}

TEST_CASE("WichmannHill rejects out-of-range states") {
  CHECK_THROWS_AS(WichmannHill({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(WichmannHill({1, 30307, 1}), std::invalid_argument);
  CHECK_THROWS_AS(WichmannHill({1, 1, 30323}), std::invalid_argument);
}

TEST_CASE("seed_for_trial") {
  CHECK(seed_for_trial(16, 1, 1) == WHState{5, 1, 1});
  CHECK(seed_for_trial(1024, 32, 250) == WHState{11, 6, 250});
  CHECK(seed_for_trial(16, 1, 1) != seed_for_trial(32, 1, 1));

  SUBCASE("non powers of two and bad trials are rejected") {
    CHECK_THROWS_AS(seed_for_trial(24, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(seed_for_trial(16, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(seed_for_trial(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(seed_for_trial(16, 1, 0), std::invalid_argument);
  }
  SUBCASE("injective and in range over the whole grid") {
    std::set<std::tuple<int, int, int>> seen;
    std::size_t expected = 0;
    for (int log2n = 0; log2n <= 14; ++log2n) {
      for (int log2k = 0; log2k <= 14; ++log2k) {
        for (int trial : {1, 2, 21, 250, 1000, 30321, 30322}) {
          const WHState s = seed_for_trial(std::int64_t{1} << log2n, std::int64_t{1} << log2k, trial);
          REQUIRE(s.valid());
          seen.insert({s.s1, s.s2, s.s3});
          ++expected;
        }
      }
    }
    CHECK(seen.size() == expected);
    // Third component is a bijection of 1..30322.
    std::set<int> thirds;
    for (int t = 1; t <= 30322; ++t) thirds.insert(seed_for_trial(1, 1, t).s3);
    CHECK(thirds.size() == 30322);
  }
}

TEST_CASE("draw_coloring") {
  SUBCASE("n=1 consumes exactly one uniform") {
    const Domain d(1);
    const WHState start{5, 1, 1};
    const auto [coloring, after] = draw_coloring(d, start);
    CHECK(after == wh_next(start).state);
    check_boundary(coloring);
    const Color expected = wh_next(start).u < 0.5 ? Color::White : Color::Black;
    CHECK(coloring.at({1, 1}) == expected);
  }
  SUBCASE("interior cells follow the stream in row-major order") {
    const Domain d(4);
    const WHState start{3, 4, 5};
    const auto draw = draw_coloring(d, start);
    WichmannHill rng(start);
    for (int r = 0; r < d.row_count(); ++r) {
      for (int i = 1; i + 1 < d.row_size(r); ++i) {
        REQUIRE(draw.coloring.at({r, i}) == (rng.next() < 0.5 ? Color::White : Color::Black));
      }
    }
    CHECK(draw.state == rng.state());
  }
  SUBCASE("interior black fraction is near one half") {
    const Domain d(100);  // 10,000 interior cells
    REQUIRE(d.interior_count() == 10000);
    const auto draw = draw_coloring(d, {7, 11, 13});
    int black = 0;
    for (int id = 0; id < d.cell_count(); ++id) {
      if (!d.is_boundary(d.coord_of(id))) black += draw.coloring.at_id(id) == Color::Black;
    }
    const double fraction = black / 10000.0;
    CHECK(fraction >= 0.48);
    CHECK(fraction <= 0.52);
  }
  SUBCASE("deterministic") {
    const Domain d(32);
    const auto a = draw_coloring(d, {9, 9, 9});
    const auto b = draw_coloring(d, {9, 9, 9});
    CHECK(a.coloring == b.coloring);
    CHECK(a.state == b.state);
  }
}

TEST_CASE("redraw_rows") {
  const Domain d(8);
  const auto first = draw_coloring(d, seed_for_trial(8, 2, 3));

  SUBCASE("n=8, k=2 consumes 15 uniforms and leaves other rows alone") {
    const RowSet rows = resample_rows(8, 2);
    const auto second = redraw_rows(first.coloring, rows, first.state);
    CHECK(consumed(first.state, second.state) == 15);
    check_boundary(second.coloring);
    for (int id = 0; id < d.cell_count(); ++id) {
      const HexCoord c = d.coord_of(id);
      if (!rows.contains(c.row)) REQUIRE(second.coloring.at(c) == first.coloring.at(c));
    }
  }
  SUBCASE("redrawing every row is a fresh draw from the same state") {
    const auto all = redraw_rows(first.coloring, resample_rows(8, 17), first.state);
    const auto fresh = draw_coloring(d, first.state);
    CHECK(all.coloring == fresh.coloring);
    CHECK(all.state == fresh.state);
  }
  SUBCASE("rows outside the domain are rejected") {
    CHECK_THROWS_AS(redraw_rows(first.coloring, RowSet{10, 17}, first.state),
                    std::invalid_argument);
  }
  SUBCASE("boundary colors survive repeated redraws") {
    Coloring c = first.coloring;
    WHState s = first.state;
    for (int k = 1; k <= 17; ++k) {
      auto next = redraw_rows(c, resample_rows(8, k), s);
      check_boundary(next.coloring);
      c = next.coloring;
      s = next.state;
    }
  }
}

TEST_CASE("set_interior refuses boundary cells") {
  Coloring c(Domain(3), Color::Black);
  CHECK_THROWS_AS(c.set_interior({0, 0}, Color::Black), std::invalid_argument);
  CHECK_THROWS_AS(c.set_interior({3, 4}, Color::White), std::invalid_argument);
  c.set_interior({3, 2}, Color::White);
  CHECK(c.at({3, 2}) == Color::White);
}
