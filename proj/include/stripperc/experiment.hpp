#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "stripperc/explorer.hpp"
#include "stripperc/lattice.hpp"
#include "stripperc/pathmetric.hpp"
#include "stripperc/prng.hpp"

namespace stripperc {

/// One trial: a fresh coloring, its exploration path, the same coloring with
/// the k equatorial rows redrawn, and the second path.
struct TrialResult {
  int n = 0;
  int k = 0;
  int trial = 0;
  double distance = 0.0;  // diameter-2 units
  int first_path_len = 0;  // vertex counts
  int second_path_len = 0;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// Everything a trial produces, for rendering and inspection.
struct TrialDetail {
  Coloring first;
  Coloring second;
  std::vector<LatticeVertex> first_path;
  std::vector<LatticeVertex> second_path;
  TrialResult result;
};

struct SampleStats {
  int n = 0;
  int k = 0;
  int trials = 0;
  double median = 0.0;
  double msd = 0.0;  // bootstrap standard deviation of the median
  double epsilon_strip = 0.0;  // k / n

  friend bool operator==(const SampleStats&, const SampleStats&) = default;
};

struct GridConfig {
  std::vector<int> n_list;
  std::vector<int> k_list;
  int trials = 250;
  double eps = kDefaultEps;
  /// Pairs with k/n above this are skipped. 1/16 yields the 27-sample
  /// lower-triangular layout on n = 16..1024, k = 1..32.
  double max_strip = 1.0 / 16.0;
  int threads = 1;
};

inline constexpr int kBootstrapResamples = 1000;

/// Checks a (n, k) pair against the seeding grid: powers of two, k <= 2n+1.
void validate_pair(int n, int k);

TrialDetail simulate_trial(int n, int k, int trial, double eps = kDefaultEps);

/// Pure function of (n, k, trial, eps).
TrialResult run_trial(int n, int k, int trial, double eps = kDefaultEps);

/// Runs trials 1..trials; results are ordered by trial number regardless of
/// `threads`.
std::vector<TrialResult> run_trials(int n, int k, int trials, double eps = kDefaultEps,
                                    int threads = 1);

/// Sorts; odd count -> middle element, even count -> mean of the two middle
/// elements. Throws std::invalid_argument on empty input.
double median(std::span<const double> values);

/// Standard deviation of the median over `resamples` bootstrap resamples.
/// Deterministic for a given seed.
double bootstrap_msd(std::span<const double> values, std::uint64_t seed,
                     int resamples = kBootstrapResamples);

SampleStats summarize(int n, int k, std::span<const TrialResult> results);

SampleStats run_sample(int n, int k, int trials, double eps = kDefaultEps, int threads = 1);

/// Every (n, k) pair of the lists with k <= 2n+1 and k/n <= max_strip,
/// sorted by (k, n). Output is identical for any thread count.
std::vector<SampleStats> run_grid(const GridConfig& config);

/// Lists (n, k) pairs run_grid would evaluate, in output order.
std::vector<std::pair<int, int>> grid_pairs(const GridConfig& config);

class DegenerateFit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// median ~ prefactor * (k/n)^alpha, fitted by ordinary least squares in
/// log-log space.
struct PowerLawFit {
  double alpha = 0.0;
  double prefactor = 0.0;
  double r2 = 0.0;
};

/// Throws DegenerateFit with fewer than 3 points, a constant regressor, or
/// nonpositive values.
PowerLawFit fit_power_law(std::span<const double> strip, std::span<const double> medians);
PowerLawFit fit_power_law(std::span<const SampleStats> stats);

}  // namespace stripperc
