#include "stripperc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "stripperc/experiment.hpp"
#include "stripperc/svg.hpp"
#include "stripperc/table_io.hpp"

namespace stripperc {

namespace {

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableOptions {
  std::vector<int> n_list;
  std::vector<int> k_list;
  int trials = 250;
  double eps = kDefaultEps;
  double max_strip = 1.0 / 16.0;
  std::string out_path;
  std::string format = "csv";
  int threads = 1;
};

struct TrialOptions {
  int n = 16;
  int k = 1;
  int trial = 1;
  std::string pick;
  int trials = 250;
  double eps = kDefaultEps;
  int threads = 1;
  std::string render_path;
  std::string clip;
};

struct FitOptions {
  std::string input;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot open '" + path + "' for writing");
  file << content;
  file.close();
  if (!file) throw IoFailure("failed writing '" + path + "'");
}

ClipWindow parse_clip(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--clip", "expected y0:y1");
  try {
    std::size_t used0 = 0, used1 = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    ClipWindow window{std::stod(lo, &used0), std::stod(hi, &used1)};
    if (used0 != lo.size() || used1 != hi.size() || !(window.y_max > window.y_min)) {
      throw std::invalid_argument("clip");
    }
    return window;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--clip", "expected y0:y1 with y0 < y1, got '" + text + "'");
  }
}

std::string trial_line(const TrialResult& r) {
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "%d,%d,%d,%.6g,%d,%d", r.n, r.k, r.trial, r.distance,
                r.first_path_len, r.second_path_len);
  return buffer;
}

int cmd_table(const TableOptions& opt, std::ostream& out) {
  GridConfig config;
  config.n_list = opt.n_list;
  config.k_list = opt.k_list;
  config.trials = opt.trials;
  config.eps = opt.eps;
  config.max_strip = opt.max_strip;
  config.threads = opt.threads;
  for (const auto& [n, k] : grid_pairs(config)) validate_pair(n, k);

  const auto stats = run_grid(config);
  std::vector<TableRecord> records;
  for (const auto& s : stats) records.push_back(to_record(s));

  std::ostringstream text;
  if (opt.format == "markdown") {
    write_markdown(text, records);
  } else {
    write_csv(text, records);
  }
  if (opt.out_path.empty()) {
    out << text.str();
  } else {
    write_file(opt.out_path, text.str());
  }
  return kExitOk;
}

int cmd_trial(const TrialOptions& opt, std::ostream& out) {
  validate_pair(opt.n, opt.k);
  std::optional<ClipWindow> clip;
  if (!opt.clip.empty()) clip = parse_clip(opt.clip);

  int trial = opt.trial;
  if (opt.pick == "median") {
    auto results = run_trials(opt.n, opt.k, opt.trials, opt.eps, opt.threads);
    std::sort(results.begin(), results.end(), [](const TrialResult& a, const TrialResult& b) {
      return a.distance != b.distance ? a.distance < b.distance : a.trial < b.trial;
    });
    trial = results[(results.size() - 1) / 2].trial;
  } else if (trial < 1) {
    throw std::invalid_argument("--trial must be >= 1");
  }

  const TrialDetail detail = simulate_trial(opt.n, opt.k, trial, opt.eps);
  if (!opt.render_path.empty()) {
    RenderSpec spec;
    spec.clip = clip;
    write_file(opt.render_path, render_svg(detail, spec));
  }
  out << trial_line(detail.result) << '\n';
  return kExitOk;
}

int cmd_fit(const FitOptions& opt, std::ostream& out) {
  std::ifstream file(opt.input);
  if (!file) throw IoFailure("cannot open '" + opt.input + "'");
  std::vector<TableRecord> records;
  try {
    records = read_csv(file);
  } catch (const TableFormatError& e) {
    throw std::invalid_argument(opt.input + ": " + e.what());
  }
  std::vector<double> strip, medians;
  for (const auto& r : records) {
    strip.push_back(r.eps_strip);
    medians.push_back(r.median);
  }
  const PowerLawFit fit = fit_power_law(strip, medians);
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "%.9g,%.9g,%.9g", fit.alpha, fit.prefactor, fit.r2);
  out << "alpha,prefactor,r2\n" << buffer << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strip-stability experiment on critical site percolation", "stripperc"};
  app.require_subcommand(1);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Run a grid of samples and write the median table");
  table_cmd->add_option("--n-list", table.n_list, "Domain sizes n (powers of two)")
      ->delimiter(',')
      ->required();
  table_cmd->add_option("--k-list", table.k_list, "Strip widths k in rows (powers of two)")
      ->delimiter(',')
      ->required();
  table_cmd->add_option("--trials", table.trials, "Trials per sample")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--eps", table.eps, "Path simplification tolerance")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--max-strip", table.max_strip, "Skip pairs with k/n above this")
      ->capture_default_str();
  table_cmd->add_option("--out", table.out_path, "Output file (default: standard output)");
  table_cmd->add_option("--format", table.format, "csv or markdown")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "markdown"}));
  table_cmd->add_option("--threads", table.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  TrialOptions trial;
  auto* trial_cmd = app.add_subcommand("trial", "Run one trial, optionally rendering it as SVG");
  trial_cmd->add_option("--n", trial.n, "Domain size n")->required();
  trial_cmd->add_option("--k", trial.k, "Strip width k")->required();
  trial_cmd->add_option("--trial", trial.trial, "Trial number")->capture_default_str();
  trial_cmd->add_option("--pick", trial.pick, "Select the trial instead: 'median'")
      ->check(CLI::IsMember({"median"}));
  trial_cmd->add_option("--trials", trial.trials, "Sample size used by --pick")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  trial_cmd->add_option("--eps", trial.eps, "Path simplification tolerance")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  trial_cmd->add_option("--threads", trial.threads, "Worker threads for --pick")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  trial_cmd->add_option("--render", trial.render_path, "Write an SVG drawing to this file");
  trial_cmd->add_option("--clip", trial.clip, "Vertical band y0:y1 to draw");

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit median ~ (k/n)^alpha to a table CSV");
  fit_cmd->add_option("--input", fit.input, "Table CSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "stripperc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*trial_cmd) return cmd_trial(trial, out);
    return cmd_fit(fit, out);
  } catch (const IoFailure& e) {
    err << "stripperc: " << e.what() << '\n';
    return kExitIo;
  } catch (const DegenerateFit& e) {
    err << "stripperc: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const CLI::ParseError& e) {
    err << "stripperc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "stripperc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "stripperc: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace stripperc
