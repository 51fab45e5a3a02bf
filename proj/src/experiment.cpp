#include "stripperc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace stripperc {

namespace {

// Runs task(0..count-1) on up to `threads` workers. Tasks write to disjoint
// slots, so the outcome does not depend on scheduling. The first exception
// thrown by any task is rethrown on the calling thread.
template <typename Task>
void parallel_for(std::size_t count, int threads, Task&& task) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double median_of_sorted(std::span<const double> sorted) {
  const std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[mid];
  return (sorted[mid - 1] + sorted[mid]) / 2.0;
}

std::uint64_t bootstrap_seed(int n, int k) {
  return (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(k);
}

}  // namespace

void validate_pair(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  if (k < 1 || k > 2 * n + 1) {
    throw std::invalid_argument("k must lie in [1, 2n+1], got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  // Rejects non-powers of two.
  (void)seed_for_trial(n, k, 1);
}

TrialDetail simulate_trial(int n, int k, int trial, double eps) {
  validate_pair(n, k);
  const Domain domain(n);
  auto [first, state] = draw_coloring(domain, seed_for_trial(n, k, trial));
  auto first_path = trace_vertices(first);
  auto second = redraw_rows(first, resample_rows(n, k), state).coloring;
  auto second_path = trace_vertices(second);

  TrialResult result;
  result.n = n;
  result.k = k;
  result.trial = trial;
  result.distance =
      path_distance(to_polyline(domain, first_path), to_polyline(domain, second_path), eps);
  result.first_path_len = static_cast<int>(first_path.size());
  result.second_path_len = static_cast<int>(second_path.size());
  return {std::move(first), std::move(second), std::move(first_path), std::move(second_path),
          result};
}

TrialResult run_trial(int n, int k, int trial, double eps) {
  return simulate_trial(n, k, trial, eps).result;
}

std::vector<TrialResult> run_trials(int n, int k, int trials, double eps, int threads) {
  validate_pair(n, k);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<TrialResult> results(trials);
  parallel_for(results.size(), threads, [&](std::size_t i) {
    results[i] = run_trial(n, k, static_cast<int>(i) + 1, eps);
  });
  return results;
}

double median(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return median_of_sorted(sorted);
}

double bootstrap_msd(std::span<const double> values, std::uint64_t seed, int resamples) {
  if (values.empty()) throw std::invalid_argument("bootstrap of an empty sample");
  if (resamples < 2) throw std::invalid_argument("bootstrap needs at least 2 resamples");
  std::mt19937_64 rng(seed);
  const std::uint64_t size = values.size();
  std::vector<double> draw(values.size());
  std::vector<double> medians;
  medians.reserve(resamples);
  for (int b = 0; b < resamples; ++b) {
    for (double& v : draw) v = values[rng() % size];
    std::sort(draw.begin(), draw.end());
    medians.push_back(median_of_sorted(draw));
  }
  // Welford; exactly zero when every resampled median is the same.
  double mean = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < medians.size(); ++i) {
    const double delta = medians[i] - mean;
    mean += delta / static_cast<double>(i + 1);
    sum_sq += delta * (medians[i] - mean);
  }
  return std::sqrt(sum_sq / resamples);
}

SampleStats summarize(int n, int k, std::span<const TrialResult> results) {
  std::vector<double> distances;
  distances.reserve(results.size());
  for (const auto& r : results) distances.push_back(r.distance);

  SampleStats stats;
  stats.n = n;
  stats.k = k;
  stats.trials = static_cast<int>(results.size());
  stats.median = median(distances);
  stats.msd = distances.size() > 1 ? bootstrap_msd(distances, bootstrap_seed(n, k)) : 0.0;
  stats.epsilon_strip = static_cast<double>(k) / n;
  return stats;
}

SampleStats run_sample(int n, int k, int trials, double eps, int threads) {
  const auto results = run_trials(n, k, trials, eps, threads);
  return summarize(n, k, results);
}

std::vector<std::pair<int, int>> grid_pairs(const GridConfig& config) {
  std::vector<std::pair<int, int>> pairs;  // (k, n) for sorting
  for (int k : config.k_list) {
    for (int n : config.n_list) {
      if (n < 1 || k < 1 || k > 2 * n + 1) continue;
      if (static_cast<double>(k) / n > config.max_strip) continue;
      pairs.emplace_back(k, n);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto& [k, n] : pairs) std::swap(k, n);
  return pairs;
}

std::vector<SampleStats> run_grid(const GridConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto pairs = grid_pairs(config);
  for (const auto& [n, k] : pairs) validate_pair(n, k);

  // One flat work list so small and large samples share the worker pool.
  const std::size_t per_pair = static_cast<std::size_t>(config.trials);
  std::vector<TrialResult> results(pairs.size() * per_pair);
  parallel_for(results.size(), config.threads, [&](std::size_t slot) {
    const auto& [n, k] = pairs[slot / per_pair];
    results[slot] = run_trial(n, k, static_cast<int>(slot % per_pair) + 1, config.eps);
  });

  std::vector<SampleStats> stats;
  stats.reserve(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::span<const TrialResult> sample(results.data() + p * per_pair, per_pair);
    stats.push_back(summarize(pairs[p].first, pairs[p].second, sample));
  }
  return stats;
}

PowerLawFit fit_power_law(std::span<const double> strip, std::span<const double> medians) {
  if (strip.size() != medians.size()) {
    throw std::invalid_argument("power-law fit needs matching strip and median lists");
  }
  const std::size_t count = strip.size();
  if (count < 3) {
    throw DegenerateFit("power-law fit needs at least 3 samples, got " + std::to_string(count));
  }
  std::vector<double> xs(count), ys(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(strip[i] > 0.0) || !(medians[i] > 0.0)) {
      throw DegenerateFit("power-law fit needs positive strip widths and medians");
    }
    xs[i] = std::log(strip[i]);
    ys[i] = std::log(medians[i]);
  }
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / count;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    syy += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw DegenerateFit("power-law fit: all strip widths are equal");

  PowerLawFit fit;
  fit.alpha = sxy / sxx;
  fit.prefactor = std::exp(mean_y - fit.alpha * mean_x);
  double sse = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double residual = ys[i] - (mean_y + fit.alpha * (xs[i] - mean_x));
    sse += residual * residual;
  }
  fit.r2 = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  return fit;
}

PowerLawFit fit_power_law(std::span<const SampleStats> stats) {
  std::vector<double> strip, medians;
  for (const auto& s : stats) {
    strip.push_back(s.epsilon_strip);
    medians.push_back(s.median);
  }
  return fit_power_law(strip, medians);
}

}  // namespace stripperc
