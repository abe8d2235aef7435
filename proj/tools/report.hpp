#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqsym/sqsym.hpp"

namespace sqsym::report {

/// Which statistics an analysis computes.
enum class StatChoice { G2, Wald, Both };

enum class OutputFormat { Text, Json };

StatChoice stat_choice_from_name(const std::string& name);
std::string stat_choice_name(StatChoice choice);
OutputFormat format_from_name(const std::string& name);

/// Everything one analysis run is asked to do.
struct AnalysisConfig {
  /// Models to fit, any order, duplicates ignored; empty gives a
  /// header-only report.
  std::vector<Model> models;
  StatChoice stat = StatChoice::G2;
  /// Divergence families to report the DPS distance parameters under.
  std::vector<DivergenceFamily> families;
  /// Flat constant added to every cell before all fitting, if present.
  std::optional<double> smoothing;
  OutputFormat format = OutputFormat::Text;
  /// Partition residuals within tolerance * max(1, value(S)) count as
  /// verified.
  double tolerance = 1e-8;
};

/// One fitted model with its requested test statistics.
struct ModelReport {
  FittedModel fit;
  std::optional<TestResult> g2_test;
  std::optional<TestResult> wald_test;
};

/// The DPS distance parameters expressed on one divergence family's scale.
struct FamilyParameters {
  DivergenceFamily family;
  Eigen::VectorXd values;
};

/// The full outcome of one analysis run.  `table` is the table the
/// statistics were computed from, i.e. after any smoothing.
struct AnalysisResult {
  SquareTable table;
  std::optional<double> smoothing;
  StatChoice stat = StatChoice::G2;
  double tolerance = 1e-8;
  std::vector<ModelReport> models;
  std::optional<PartitionReport> partition_g2;
  std::optional<PartitionReport> partition_wald;
  std::vector<FamilyParameters> dps_parameters;
  /// Orchestration-level notes (per-fit warnings live on each model).
  std::vector<std::string> warnings;
};

/// Reads a square table from CSV: either r rows of r comma-separated
/// numbers, or a header row of labels followed by r rows each beginning
/// with a row label.  Blank lines are skipped; whitespace around fields
/// is trimmed.  Throws ParseError with 1-based coordinates on malformed
/// input; table-level validation errors propagate from the constructor.
SquareTable parse_csv(std::istream& in);
SquareTable parse_csv(const std::string& text);

/// Fits the requested models and computes the requested statistics.
/// Smoothing is applied before all fitting; the partition report is
/// produced whenever S, DPS and DGS are all requested; distance
/// parameters are reported per family whenever DPS is requested.
AnalysisResult run_analysis(const SquareTable& table,
                            const AnalysisConfig& config);

/// Plain-text report: goodness-of-fit table (statistics to 2 decimals,
/// p-values to 4, "<0.0001" below 1e-4), partition summary, distance
/// parameters, and per-model observed (fitted) tables to 2 decimals.
std::string render_text(const AnalysisResult& result);

/// JSON report with full-precision numbers and the documented stable
/// schema.  NaN serialises as null, infinities as "Infinity" strings.
std::string render_json(const AnalysisResult& result);

/// The JSON document behind render_json.
nlohmann::ordered_json to_json(const AnalysisResult& result);

/// Inverse of to_json; accepts anything render_json produced.
AnalysisResult from_json(const nlohmann::json& doc);

/// Process exit code for a failure: 2 input/parse, 3 degenerate fit,
/// 4 numerical or internal (0 is success and 5 bad flags, neither of
/// which reaches this function).
int exit_code_for(const std::exception& error);

}  // namespace sqsym::report
