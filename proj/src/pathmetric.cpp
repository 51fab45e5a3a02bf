#include "stripperc/pathmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace stripperc {

namespace {

// Stands in for +infinity at out-of-range DP entries.
constexpr double kUnreachable = std::numeric_limits<double>::max();

void require_nonempty(std::span<const Point2D> a, std::span<const Point2D> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("path distance needs two nonempty point sequences");
  }
}

// Minimal running max over couplings, in squared units. `outer` may be the
// longer sequence; the kept row spans `inner`.
double dp_squared(std::span<const Point2D> outer, std::span<const Point2D> inner) {
  std::vector<double> row(inner.size());
  // First outer point: only the inner index can advance.
  double running = 0.0;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    running = std::max(running, squared_distance(outer[0], inner[j]));
    row[j] = running;
  }
  for (std::size_t i = 1; i < outer.size(); ++i) {
    const Point2D p = outer[i];
    row[0] = std::max(row[0], squared_distance(p, inner[0]));
    for (std::size_t j = 1; j < inner.size(); ++j) {
      const double best_prior = std::min(row[j], row[j - 1]);
      row[j] = std::max(best_prior, squared_distance(p, inner[j]));
    }
  }
  return row.back();
}

struct BruteSearch {
  std::span<const Point2D> a;
  std::span<const Point2D> b;
  double best = kUnreachable;

  void walk(std::size_t i, std::size_t j, double running) {
    running = std::max(running, distance(a[i], b[j]));
    if (i + 1 == a.size() && j + 1 == b.size()) {
      best = std::min(best, running);
      return;
    }
    if (i + 1 < a.size()) walk(i + 1, j, running);
    if (j + 1 < b.size()) walk(i, j + 1, running);
  }
};

}  // namespace

Polyline simplify(std::span<const Point2D> a, double eps) {
  if (a.empty()) throw std::invalid_argument("cannot simplify an empty polyline");
  if (!(eps >= 0.0)) throw std::invalid_argument("simplification tolerance must be >= 0");

  Polyline kept;
  kept.push_back(a.front());
  std::size_t anchor = 0;
  for (std::size_t l = 1; l + 1 < a.size(); ++l) {
    if (distance(a[anchor], a[l]) > eps) {
      kept.push_back(a[l]);
      anchor = l;
    }
  }
  if (a.size() > 1) kept.push_back(a.back());
  return kept;
}

double dp_distance(std::span<const Point2D> a, std::span<const Point2D> b) {
  require_nonempty(a, b);
  const double squared = a.size() >= b.size() ? dp_squared(a, b) : dp_squared(b, a);
  return std::sqrt(squared);
}

double brute_distance(std::span<const Point2D> a, std::span<const Point2D> b) {
  require_nonempty(a, b);
  const std::size_t steps = (a.size() - 1) + (b.size() - 1);
  if (steps > static_cast<std::size_t>(kBruteForceMaxSteps)) {
    throw std::invalid_argument("brute_distance limited to M+N <= " +
                                std::to_string(kBruteForceMaxSteps) + ", got " +
                                std::to_string(steps));
  }
  BruteSearch search{a, b};
  search.walk(0, 0, 0.0);
  return search.best;
}

double path_distance(std::span<const Point2D> a, std::span<const Point2D> b, double eps) {
  require_nonempty(a, b);
  return dp_distance(simplify(a, eps), simplify(b, eps));
}

}  // namespace stripperc
