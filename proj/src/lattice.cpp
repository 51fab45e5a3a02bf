#include "stripperc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stripperc {

namespace {

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

Domain::Domain(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("domain size n must be >= 1, got " + std::to_string(n));
  }
  // 2n row gaps of scale*sqrt(3)/2 plus half an edge at each apex span height 2.
  scale_ = 2.0 * kSqrt3 / (3.0 * n + 1.0);
  row_offset_.reserve(row_count() + 1);
  int total = 0;
  for (int r = 0; r < row_count(); ++r) {
    row_offset_.push_back(total);
    total += row_size(r);
  }
  row_offset_.push_back(total);
}

int Domain::row_size(int row) const {
  if (row < 0 || row > 2 * n_) {
    throw std::out_of_range("row " + std::to_string(row) + " outside domain");
  }
  return std::min(row, 2 * n_ - row) + 2;
}

double Domain::edge_length() const { return scale_ / kSqrt3; }

bool Domain::contains(HexCoord c) const {
  return c.row >= 0 && c.row <= 2 * n_ && c.index >= 0 && c.index < row_size(c.row);
}

BoundarySide Domain::side(HexCoord c) const {
  if (!contains(c)) {
    throw std::out_of_range("cell (" + std::to_string(c.row) + ", " + std::to_string(c.index) +
                            ") outside domain");
  }
  if (c.index == 0) return BoundarySide::Left;
  if (c.index == row_size(c.row) - 1) return BoundarySide::Right;
  return BoundarySide::Interior;
}

int Domain::cell_id(HexCoord c) const {
  if (!contains(c)) {
    throw std::out_of_range("cell (" + std::to_string(c.row) + ", " + std::to_string(c.index) +
                            ") outside domain");
  }
  return row_offset_[c.row] + c.index;
}

HexCoord Domain::coord_of(int id) const {
  if (id < 0 || id >= cell_count()) {
    throw std::out_of_range("cell id " + std::to_string(id) + " outside domain");
  }
  const auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(), id);
  const int row = static_cast<int>(it - row_offset_.begin()) - 1;
  return {row, id - row_offset_[row]};
}

LatticeVertex Domain::lattice_center(HexCoord c) const {
  const int size = row_size(c.row);
  if (c.index < 0 || c.index >= size) {
    throw std::out_of_range("cell index " + std::to_string(c.index) + " outside row " +
                            std::to_string(c.row));
  }
  return {2 * c.index - (size - 1), 3 * c.row};
}

std::optional<HexCoord> Domain::cell_at(LatticeVertex p) const {
  if (p.y < 0 || p.y % 3 != 0) return std::nullopt;
  const int row = p.y / 3;
  if (row > 2 * n_) return std::nullopt;
  const int twice_index = p.x + row_size(row) - 1;
  if (twice_index < 0 || twice_index % 2 != 0) return std::nullopt;
  const HexCoord c{row, twice_index / 2};
  if (!contains(c)) return std::nullopt;
  return c;
}

Point2D Domain::position(LatticeVertex v) const {
  const double quarter_edge = edge_length() / 2.0;
  return {v.x * (scale_ / 2.0), -1.0 + (v.y + 1) * quarter_edge};
}

Point2D Domain::hex_center(HexCoord c) const { return position(lattice_center(c)); }

HexCoord Domain::mirror(HexCoord c) const {
  return {c.row, row_size(c.row) - 1 - c.index};
}

Domain build_domain(int n) { return Domain(n); }

Point2D hex_center(const Domain& domain, HexCoord c) { return domain.hex_center(c); }

RowSet resample_rows(int n, int k) {
  if (n < 1) {
    throw std::invalid_argument("domain size n must be >= 1, got " + std::to_string(n));
  }
  if (k < 1 || k > 2 * n + 1) {
    throw std::invalid_argument("k must lie in [1, 2n+1], got k=" + std::to_string(k) +
                                " for n=" + std::to_string(n));
  }
  return {n - (k - 1) / 2, n + k / 2};
}

}  // namespace stripperc
