#pragma once
// Serialization of classification reports (JSON, CSV, plain table) and A/B verification.
#include <optional>
#include <string>
#include <vector>

#include "plumbtight/fullpath.hpp"
#include "plumbtight/oracle.hpp"

namespace plumbtight {

struct Verification {
  std::optional<bool> oracle;           // walker verdict == d3/d oracle for every presentation
  std::optional<bool> oracle_l_space;   // oracle's one-good-path-per-spin^c test agrees with l_space_test
  std::optional<bool> slopes;           // move closure == walker partition on tight presentations
  std::optional<bool> ot_implication;   // ot_check => overtwisted
  std::vector<std::string> mismatches;
};

/// Runs the requested cross-checks. Oracle capacity errors propagate.
Verification verify(const Manifold& m, const ClassificationReport& r, bool oracle, bool slopes,
                    const OracleOptions& options = {});

/// indent < 0 gives a single line. Wall time is only emitted when given.
std::string report_json(const ClassificationReport& r, const Verification* v = nullptr, int indent = 2,
                        std::optional<double> timing_ms = std::nullopt);
/// Header line of report_csv.
std::string report_csv_header();
/// One row per class.
std::string report_csv(const ClassificationReport& r, const Verification* v = nullptr);
std::string report_table(const ClassificationReport& r, const Verification* v = nullptr);

std::string verdict_name(VerdictKind k);

}  // namespace plumbtight
