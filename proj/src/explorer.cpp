#include "stripperc/explorer.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace stripperc {

namespace {

// Corner-to-corner steps, counterclockwise from 30 degrees. A left turn is
// +1, a right turn -1 (mod 6). From a corner u heading in direction d, the
// cell centers flanking the edge are u + kStep[d+1] (left) and
// u + kStep[d-1] (right); the cell ahead of the head corner v is v + kStep[d].
constexpr std::array<LatticeVertex, 6> kStep{{
    {1, 1}, {0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1},
}};

constexpr int turn_left(int d) { return (d + 1) % 6; }
constexpr int turn_right(int d) { return (d + 5) % 6; }

LatticeVertex operator+(LatticeVertex a, LatticeVertex b) { return {a.x + b.x, a.y + b.y}; }

int direction_of(LatticeVertex from, LatticeVertex to) {
  const LatticeVertex delta{to.x - from.x, to.y - from.y};
  const auto it = std::find(kStep.begin(), kStep.end(), delta);
  if (it == kStep.end()) {
    throw std::invalid_argument("vertices are not joined by a lattice edge");
  }
  return static_cast<int>(it - kStep.begin());
}

}  // namespace

EdgeCells edge_cells(LatticeVertex from, LatticeVertex to) {
  const int d = direction_of(from, to);
  return {from + kStep[turn_left(d)], from + kStep[turn_right(d)]};
}

std::vector<LatticeVertex> trace_vertices(const Coloring& coloring) {
  const Domain& domain = coloring.domain();
  const LatticeVertex goal = domain.top_apex();
  const std::size_t max_steps = 3 * static_cast<std::size_t>(domain.cell_count());

  std::vector<LatticeVertex> path;
  path.reserve(std::min<std::size_t>(max_steps, 1u << 16));
  LatticeVertex at = domain.bottom_apex();
  int dir = 1;  // straight up between the two bottom cells
  path.push_back(at);
  at = at + kStep[dir];
  path.push_back(at);

  while (at != goal) {
    if (path.size() > max_steps) {
      throw StructuralError("exploration path exceeded " + std::to_string(max_steps) + " steps");
    }
    const LatticeVertex front_center = at + kStep[dir];
    const auto front = domain.cell_at(front_center);
    if (!front) {
      throw StructuralError("exploration path left the domain at corner (" +
                            std::to_string(at.x) + ", " + std::to_string(at.y) + ")");
    }
    dir = coloring.at(*front) == Color::White ? turn_right(dir) : turn_left(dir);
    at = at + kStep[dir];
    path.push_back(at);
  }
  return path;
}

Polyline to_polyline(const Domain& domain, const std::vector<LatticeVertex>& vertices) {
  Polyline out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(domain.position(v));
  return out;
}

Polyline trace(const Coloring& coloring) {
  return to_polyline(coloring.domain(), trace_vertices(coloring));
}

std::vector<HexCoord> cells_along(const Domain& domain, const std::vector<LatticeVertex>& path) {
  std::vector<HexCoord> cells;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const EdgeCells flank = edge_cells(path[i - 1], path[i]);
    for (const LatticeVertex& center : {flank.left, flank.right}) {
      if (const auto c = domain.cell_at(center)) cells.push_back(*c);
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

}  // namespace stripperc
