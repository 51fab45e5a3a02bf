#include "stripperc/table_io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace stripperc {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_field(const std::string& text, int line_no) {
  std::istringstream stream(text);
  T value{};
  stream >> value;
  if (stream.fail() || !stream.eof()) {
    throw TableFormatError("line " + std::to_string(line_no) + ": bad field '" + text + "'");
  }
  return value;
}

}  // namespace

TableRecord to_record(const SampleStats& stats) {
  return {stats.n, stats.k, stats.trials, stats.median, stats.msd, stats.epsilon_strip};
}

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

void write_csv(std::ostream& out, std::span<const TableRecord> records) {
  out << kTableHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.k << ',' << r.trials << ',' << format_real(r.median) << ','
        << format_real(r.msd) << ',' << format_real(r.eps_strip) << '\n';
  }
}

std::vector<TableRecord> read_csv(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw TableFormatError("empty table");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTableHeader) {
    throw TableFormatError("expected header '" + std::string(kTableHeader) + "'");
  }
  std::vector<TableRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 6) {
      throw TableFormatError("line " + std::to_string(line_no) + ": expected 6 fields");
    }
    records.push_back({parse_field<int>(fields[0], line_no), parse_field<int>(fields[1], line_no),
                       parse_field<int>(fields[2], line_no),
                       parse_field<double>(fields[3], line_no),
                       parse_field<double>(fields[4], line_no),
                       parse_field<double>(fields[5], line_no)});
  }
  return records;
}

void write_markdown(std::ostream& out, std::span<const TableRecord> records) {
  std::set<int> ns, ks;
  std::map<std::pair<int, int>, double> cell;  // (k, n) -> median
  for (const auto& r : records) {
    ns.insert(r.n);
    ks.insert(r.k);
    cell[{r.k, r.n}] = r.median;
  }
  out << "| k \\ n |";
  for (int n : ns) out << ' ' << n << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < ns.size(); ++i) out << "---|";
  out << '\n';
  for (int k : ks) {
    out << "| " << k << " |";
    for (int n : ns) {
      const auto it = cell.find({k, n});
      if (it == cell.end()) {
        out << "  |";
      } else {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.2f", it->second);
        out << ' ' << buffer << " |";
      }
    }
    out << '\n';
  }
}

}  // namespace stripperc
