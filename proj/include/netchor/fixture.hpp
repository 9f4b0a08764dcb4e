#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace netchor {

/// One row of the EEN node-statistics table shipped in data/een_nodes.csv.
struct FixtureRow {
  std::string country;
  std::string code;
  std::size_t degree = 0;
  double clustering = 0.0;
  double closeness = 0.0;
  double betweenness = 0.0;
  double eigenvector = 0.0;
};

/// Reported EEN summary values. The edge list behind them is not available,
/// so none of these can be regenerated; they are reference metadata only.
struct EenReference {
  static constexpr std::size_t kNodes = 49;
  static constexpr std::size_t kEdges = 351;
  static constexpr std::size_t kRawAgreements = 2019;
  static constexpr double kAveragePathLength = 1.82;
  static constexpr double kClustering = 0.66;
  static constexpr double kGamma = 2.79;
  static constexpr double kLambda1 = 0.0;
  static constexpr double kLambda2 = -0.66;
};

/// CSV with header country,code,degree,clustering,closeness,betweenness,eigenvector.
std::vector<FixtureRow> parse_fixture(std::istream& in);
/// Throws IoError when the file cannot be opened.
std::vector<FixtureRow> load_fixture(const std::string& path);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
};

/// Internal-consistency checks: 49 rows, degree sum 702 = 2 * 351, scores in
/// range, a single eigenvector maximum of 1.00, and zero clustering on every
/// degree-1 row.
ValidationReport validate_fixture(const std::vector<FixtureRow>& rows);

}  // namespace netchor
