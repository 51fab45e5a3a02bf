#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stripperc/experiment.hpp"

namespace stripperc {

/// One CSV row: n,k,trials,median,msd,eps_strip.
struct TableRecord {
  int n = 0;
  int k = 0;
  int trials = 0;
  double median = 0.0;
  double msd = 0.0;
  double eps_strip = 0.0;

  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

inline constexpr const char* kTableHeader = "n,k,trials,median,msd,eps_strip";

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TableRecord to_record(const SampleStats& stats);

/// %.6g formatting used for every real in the CSV.
std::string format_real(double value);

void write_csv(std::ostream& out, std::span<const TableRecord> records);
std::vector<TableRecord> read_csv(std::istream& in);

/// k rows by n columns; blank where the pair is absent.
void write_markdown(std::ostream& out, std::span<const TableRecord> records);

}  // namespace stripperc
