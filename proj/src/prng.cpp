#include "stripperc/prng.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stripperc {

namespace {

constexpr std::int32_t kM1 = 30269;
constexpr std::int32_t kM2 = 30307;
constexpr std::int32_t kM3 = 30323;

int exact_log2(std::int64_t v, const char* what) {
  if (v < 1 || !std::has_single_bit(static_cast<std::uint64_t>(v))) {
    throw std::invalid_argument(std::string(what) + " must be a power of two, got " +
                                std::to_string(v));
  }
  return std::countr_zero(static_cast<std::uint64_t>(v));
}

Color color_for(double u) { return u < 0.5 ? Color::White : Color::Black; }

}  // namespace

bool WHState::valid() const {
  return s1 >= 1 && s1 < kM1 && s2 >= 1 && s2 < kM2 && s3 >= 1 && s3 < kM3;
}

WHStep wh_next(WHState state) {
  state.s1 = (171 * state.s1) % kM1;
  state.s2 = (172 * state.s2) % kM2;
  state.s3 = (170 * state.s3) % kM3;
  const double sum = static_cast<double>(state.s1) / kM1 + static_cast<double>(state.s2) / kM2 +
                     static_cast<double>(state.s3) / kM3;
  return {std::fmod(sum, 1.0), state};
}

WichmannHill::WichmannHill(WHState state) : state_(state) {
  if (!state.valid()) {
    throw std::invalid_argument("Wichmann-Hill state out of range");
  }
}

WHState seed_for_trial(std::int64_t n, std::int64_t k, std::int64_t trial) {
  const int log2n = exact_log2(n, "n");
  const int log2k = exact_log2(k, "k");
  if (trial < 1) {
    throw std::invalid_argument("trial numbers start at 1, got " + std::to_string(trial));
  }
  return {1 + log2n, 1 + log2k, static_cast<std::int32_t>(1 + (trial - 1) % (kM3 - 1))};
}

Coloring::Coloring(Domain domain, Color interior)
    : domain_(std::move(domain)), colors_(domain_.cell_count(), interior) {
  for (int r = 0; r < domain_.row_count(); ++r) {
    colors_[domain_.cell_id({r, 0})] = Color::White;
    colors_[domain_.cell_id({r, domain_.row_size(r) - 1})] = Color::Black;
  }
}

void Coloring::set_interior(HexCoord c, Color color) {
  if (domain_.is_boundary(c)) {
    throw std::invalid_argument("boundary cells have fixed colors");
  }
  colors_[domain_.cell_id(c)] = color;
}

ColoringDraw draw_coloring(const Domain& domain, WHState state) {
  Coloring fresh(domain, Color::White);
  return redraw_rows(fresh, RowSet{0, domain.row_count() - 1}, state);
}

ColoringDraw redraw_rows(const Coloring& coloring, RowSet rows, WHState state) {
  const Domain& domain = coloring.domain();
  if (rows.size() < 1 || rows.first < 0 || rows.last >= domain.row_count()) {
    throw std::invalid_argument("row set outside domain");
  }
  WichmannHill rng(state);
  Coloring out = coloring;
  for (int r = rows.first; r <= rows.last; ++r) {
    const int last = domain.row_size(r) - 1;
    for (int i = 1; i < last; ++i) {
      out.set_interior({r, i}, color_for(rng.next()));
    }
  }
  return {std::move(out), rng.state()};
}

}  // namespace stripperc
