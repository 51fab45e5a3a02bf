#pragma once

#include <span>

#include "stripperc/geometry.hpp"

namespace stripperc {

/// Default simplification tolerance for trial distances.
inline constexpr double kDefaultEps = 0.03;

/// Largest M + N that brute_distance accepts.
inline constexpr int kBruteForceMaxSteps = 22;

/// Greedy subsequence: keeps the first point, then from each kept point
/// skips every following point within `eps` of it and keeps the first one
/// farther away. The last point is always kept.
Polyline simplify(std::span<const Point2D> a, double eps);

/// Discrete coupling distance
///
///   d(a, b) = min over (mu, nu) of max_k |a[mu_k] - b[nu_k]|
///
/// where (mu, nu) runs over monotone walks from (0, 0) to (M, N) that advance
/// exactly one of the two indices per step. Note d(a, a) != 0 in general.
/// Rolling-row dynamic program: O(M*N) time, O(min(M, N)) memory.
double dp_distance(std::span<const Point2D> a, std::span<const Point2D> b);

/// Same quantity by exhaustive enumeration of all C(M+N, M) couplings.
/// Test oracle; throws std::invalid_argument when M + N > kBruteForceMaxSteps.
double brute_distance(std::span<const Point2D> a, std::span<const Point2D> b);

/// dp_distance(simplify(a, eps), simplify(b, eps)).
double path_distance(std::span<const Point2D> a, std::span<const Point2D> b,
                     double eps = kDefaultEps);

}  // namespace stripperc
