#include "netchor/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "netchor/error.hpp"

namespace netchor {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(field);
  }
  return fields;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line, const char* column) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw ParseError(line, std::string("bad ") + column + " value '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<FixtureRow> parse_fixture(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++line_no;
  const auto header = split_csv(line);
  const std::vector<std::string> expected = {"country", "code", "degree", "clustering",
                                             "closeness", "betweenness", "eigenvector"};
  if (header != expected) throw ParseError(line_no, "unexpected fixture header");

  std::vector<FixtureRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv(line);
    if (f.size() != expected.size()) {
      throw ParseError(line_no, "expected 7 columns, got " + std::to_string(f.size()));
    }
    FixtureRow row;
    row.country = f[0];
    row.code = f[1];
    row.degree = parse_number<std::size_t>(f[2], line_no, "degree");
    row.clustering = parse_number<double>(f[3], line_no, "clustering");
    row.closeness = parse_number<double>(f[4], line_no, "closeness");
    row.betweenness = parse_number<double>(f[5], line_no, "betweenness");
    row.eigenvector = parse_number<double>(f[6], line_no, "eigenvector");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FixtureRow> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixture '" + path + "'");
  return parse_fixture(in);
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ValidationReport validate_fixture(const std::vector<FixtureRow>& rows) {
  // Table values carry two decimals; 1.00 is matched exactly.
  constexpr double kExact = 1e-12;
  ValidationReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("row_count", rows.size() == EenReference::kNodes,
      std::to_string(rows.size()) + " rows, expected " + std::to_string(EenReference::kNodes));

  std::size_t degree_sum = 0;
  for (const auto& r : rows) degree_sum += r.degree;
  add("degree_sum", degree_sum == 2 * EenReference::kEdges,
      "sum of degrees " + std::to_string(degree_sum) + ", expected 2*" +
          std::to_string(EenReference::kEdges) + " = " + std::to_string(2 * EenReference::kEdges));

  std::set<std::string> codes;
  for (const auto& r : rows) codes.insert(r.code);
  add("unique_codes", codes.size() == rows.size(),
      std::to_string(codes.size()) + " distinct codes over " + std::to_string(rows.size()) + " rows");

  const bool eigen_in_range = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.eigenvector >= 0.0 && r.eigenvector <= 1.0;
  });
  add("eigenvector_range", eigen_in_range, "all eigenvector scores in [0, 1]");

  std::vector<std::string> maxima;
  for (const auto& r : rows) {
    if (std::abs(r.eigenvector - 1.0) <= kExact) maxima.push_back(r.code);
  }
  std::string max_detail = std::to_string(maxima.size()) + " row(s) at 1.00";
  if (!maxima.empty()) {
    max_detail += ":";
    for (const auto& c : maxima) max_detail += " " + c;
  }
  add("eigenvector_single_max", maxima.size() == 1, max_detail);

  const bool clustering_in_range = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.clustering >= 0.0 && r.clustering <= 1.0;
  });
  add("clustering_range", clustering_in_range, "all clustering values in [0, 1]");

  std::size_t leaves = 0;
  std::size_t leaves_bad = 0;
  for (const auto& r : rows) {
    if (r.degree == 1) {
      ++leaves;
      if (std::abs(r.clustering) > kExact) ++leaves_bad;
    }
  }
  add("degree_one_clustering", leaves_bad == 0,
      std::to_string(leaves) + " degree-1 row(s), " + std::to_string(leaves_bad) +
          " with nonzero clustering");

  return report;
}

}  // namespace netchor
