#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stripperc/lattice.hpp"

namespace stripperc {

/// Wichmann-Hill (AS 183) state: three small LCG seeds.
struct WHState {
  std::int32_t s1 = 1;  // [1, 30268]
  std::int32_t s2 = 1;  // [1, 30306]
  std::int32_t s3 = 1;  // [1, 30322]

  bool valid() const;

  friend bool operator==(const WHState&, const WHState&) = default;
};

struct WHStep {
  double u;
  WHState state;
};

/// One AS 183 step: advances the three congruences and returns the
/// fractional part of s1/30269 + s2/30307 + s3/30323 in [0, 1).
WHStep wh_next(WHState state);

/// Stateful convenience wrapper over wh_next.
class WichmannHill {
 public:
  explicit WichmannHill(WHState state);

  double next() {
    const WHStep step = wh_next(state_);
    state_ = step.state;
    return step.u;
  }
  double operator()() { return next(); }

  const WHState& state() const { return state_; }

 private:
  WHState state_;
};

/// Per-trial seed: (1 + log2 n, 1 + log2 k, 1 + (trial - 1) mod 30322).
/// Injective for log2 n, log2 k <= 14 and up to 30322 trials.
/// Throws std::invalid_argument unless n and k are powers of two and trial >= 1.
WHState seed_for_trial(std::int64_t n, std::int64_t k, std::int64_t trial);

/// Black/white assignment over every cell of a domain. Boundary cells always
/// carry their fixed colors (left white, right black).
class Coloring {
 public:
  /// All interior cells set to `interior`.
  Coloring(Domain domain, Color interior);

  const Domain& domain() const { return domain_; }
  Color at(HexCoord c) const { return colors_[domain_.cell_id(c)]; }
  Color at_id(int id) const { return colors_[id]; }
  std::span<const Color> colors() const { return colors_; }

  /// Throws if c is a boundary cell.
  void set_interior(HexCoord c, Color color);

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.domain_.n() == b.domain_.n() && a.colors_ == b.colors_;
  }

 private:
  Domain domain_;
  std::vector<Color> colors_;
};

struct ColoringDraw {
  Coloring coloring;
  WHState state;
};

/// Fresh critical coloring: interior cells visited row-major from the bottom
/// row, left to right; each consumes one uniform u, WHITE when u < 0.5.
ColoringDraw draw_coloring(const Domain& domain, WHState state);

/// Redraws the interior cells of `rows` in the same canonical order. Cells
/// outside `rows` and all boundary cells are left untouched.
ColoringDraw redraw_rows(const Coloring& coloring, RowSet rows, WHState state);

}  // namespace stripperc
