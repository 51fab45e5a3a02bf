#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stripperc/geometry.hpp"

namespace stripperc {

enum class Color : std::uint8_t { White = 0, Black = 1 };

enum class BoundarySide : std::uint8_t { Interior, Left, Right };

/// A hexagon in the rhombic domain. Row 0 is the bottom row, index 0 the
/// leftmost cell of its row.
struct HexCoord {
  int row = 0;
  int index = 0;

  friend bool operator==(const HexCoord&, const HexCoord&) = default;
  friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

/// Integer address of a hexagon-lattice point (cell center or corner).
///
/// The horizontal unit is half the center spacing and the vertical unit is a
/// quarter of the hexagon edge length, so cell centers sit at (X, 3*row) with
/// X + row odd, and the six corners of a cell are (X, Y +- 2), (X +- 1, Y +- 1).
struct LatticeVertex {
  int x = 0;
  int y = 0;

  friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
  friend auto operator<=>(const LatticeVertex&, const LatticeVertex&) = default;
};

/// Contiguous interval [first, last] of row indices.
struct RowSet {
  int first = 0;
  int last = -1;

  int size() const { return last - first + 1; }
  bool contains(int row) const { return row >= first && row <= last; }

  friend bool operator==(const RowSet&, const RowSet&) = default;
};

/// The discrete rhombus: two equilateral triangles of hexagons glued along
/// the equator (row n). It has 2n+1 horizontal rows; row r holds
/// min(r, 2n-r) + 2 cells. The first cell of every row is on the white (left)
/// boundary, the last on the black (right) boundary.
///
/// Geometry: centers form a triangular lattice with horizontal rows. The
/// bottom and top apexes (the lower end of the edge shared by the two bottom
/// cells and the upper end of the edge shared by the two top cells) sit at
/// (0, -1) and (0, +1), so the domain diameter is exactly 2. The sides of the
/// rhombus of diameter 2 cut through the boundary hexagons.
class Domain {
 public:
  explicit Domain(int n);

  int n() const { return n_; }
  int row_count() const { return 2 * n_ + 1; }
  int row_size(int row) const;
  int cell_count() const { return static_cast<int>(row_offset_.back()); }
  int interior_count() const { return cell_count() - boundary_count(); }
  int boundary_count() const { return 2 * row_count(); }

  /// Center-to-center spacing of adjacent cells.
  double scale() const { return scale_; }
  /// Hexagon edge length (center-to-corner distance), scale / sqrt(3).
  double edge_length() const;

  bool contains(HexCoord c) const;
  BoundarySide side(HexCoord c) const;
  bool is_boundary(HexCoord c) const { return side(c) != BoundarySide::Interior; }

  /// Dense index in row-major order, bottom row first. Throws on invalid c.
  int cell_id(HexCoord c) const;
  HexCoord coord_of(int id) const;

  LatticeVertex lattice_center(HexCoord c) const;
  /// Cell whose center is the lattice point p, if it belongs to the domain.
  std::optional<HexCoord> cell_at(LatticeVertex p) const;

  Point2D hex_center(HexCoord c) const;
  Point2D position(LatticeVertex v) const;

  LatticeVertex bottom_apex() const { return {0, -1}; }
  LatticeVertex top_apex() const { return {0, 6 * n_ + 1}; }

  /// The mirror image of c under x -> -x.
  HexCoord mirror(HexCoord c) const;

 private:
  int n_;
  double scale_;
  std::vector<int> row_offset_;  // row_offset_[r] = id of (r, 0); back() = total
};

Domain build_domain(int n);

Point2D hex_center(const Domain& domain, HexCoord c);

/// The k rows redrawn in a trial: centered on the equator, with the extra row
/// above it when k is even.
RowSet resample_rows(int n, int k);

}  // namespace stripperc
