#pragma once

#include <stdexcept>
#include <vector>

#include "stripperc/geometry.hpp"
#include "stripperc/lattice.hpp"
#include "stripperc/prng.hpp"

namespace stripperc {

/// Raised when the exploration walk leaves the domain or fails to terminate.
/// Either one means a broken lattice/walk implementation, not bad input.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The two cells on either side of a directed lattice edge.
struct EdgeCells {
  LatticeVertex left;
  LatticeVertex right;
};

/// Lattice points of the cells left and right of the edge from -> to.
/// Throws std::invalid_argument if from and to are not adjacent corners.
EdgeCells edge_cells(LatticeVertex from, LatticeVertex to);

/// Walks the white/black interface from the bottom apex to the top apex,
/// keeping white cells on the left and black cells on the right. At each
/// corner the cell straight ahead decides the turn: white turns right,
/// black turns left.
std::vector<LatticeVertex> trace_vertices(const Coloring& coloring);

/// trace_vertices materialized as points (diameter-2 units).
Polyline trace(const Coloring& coloring);

Polyline to_polyline(const Domain& domain, const std::vector<LatticeVertex>& vertices);

/// Every domain cell touching at least one edge of the path, sorted by
/// (row, index).
std::vector<HexCoord> cells_along(const Domain& domain, const std::vector<LatticeVertex>& path);

}  // namespace stripperc
