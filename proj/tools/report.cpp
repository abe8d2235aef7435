#include "report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <sstream>
#include <utility>

namespace sqsym::report {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr Model kCanonicalOrder[] = {Model::S, Model::CS, Model::DPS,
                                     Model::DGS, Model::GS};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
}

/// Parses a whole trimmed field as a finite double.
bool parse_number(const std::string& field, double& out) {
  if (field.empty()) return false;
  char* end = nullptr;
  out = std::strtod(field.c_str(), &end);
  return end == field.c_str() + field.size() && std::isfinite(out);
}

// -----------------------------
// text rendering helpers
// -----------------------------

std::string fixed(double v, int places) {
  if (std::isnan(v)) return "undef";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string scientific(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string p_value_text(double p) {
  return p < 1e-4 ? "<0.0001" : fixed(p, 4);
}

/// Counts render without decimals when whole, else like fitted values.
std::string observed_text(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) return fixed(v, 0);
  return fixed(v, 2);
}

std::string display_name(Model model) {
  std::string name = model_name(model);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return name;
}

/// Renders rows as aligned columns with a two-space gutter.  Columns
/// listed in `right_align` are right-aligned; the rest flush left.
std::string render_grid(const std::vector<std::vector<std::string>>& rows,
                        const std::vector<bool>& right_align,
                        const std::string& indent) {
  std::vector<std::string::size_type> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool right = c < right_align.size() && right_align[c];
      const std::string pad(widths[c] - row[c].size(), ' ');
      line += right ? pad + row[c] : row[c] + pad;
      if (c + 1 < row.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

// -----------------------------
// JSON <-> number conventions
// -----------------------------

nlohmann::ordered_json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  return v;
}

double number_from_json(const nlohmann::json& v) {
  if (v.is_null()) return kNaN;
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "Infinity") return kInf;
    if (s == "-Infinity") return -kInf;
    throw ParseError("not a number encoding: \"" + s + "\"");
  }
  return v.get<double>();
}

nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json_number(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& rows) {
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  const auto ncols =
      nrows > 0 ? static_cast<Eigen::Index>(rows.at(0).size()) : 0;
  Eigen::MatrixXd m(nrows, ncols);
  for (Eigen::Index i = 0; i < nrows; ++i) {
    for (Eigen::Index j = 0; j < ncols; ++j) {
      m(i, j) = number_from_json(rows.at(i).at(j));
    }
  }
  return m;
}

nlohmann::ordered_json vector_to_json(const Eigen::VectorXd& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(json_number(v(i)));
  }
  return out;
}

Eigen::VectorXd vector_from_json(const nlohmann::json& arr) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = number_from_json(arr.at(i));
  }
  return v;
}

std::string family_kind_name(const DivergenceFamily& family) {
  switch (family.kind()) {
    case DivergenceFamily::Kind::KL:
      return "kl";
    case DivergenceFamily::Kind::ReverseKL:
      return "rkl";
    case DivergenceFamily::Kind::Pearson:
      return "pearson";
    case DivergenceFamily::Kind::Power:
      return "power";
  }
  throw DomainError("unknown divergence family tag");
}

nlohmann::ordered_json test_to_json(const TestResult& test) {
  nlohmann::ordered_json out;
  out["value"] = json_number(test.value);
  out["df"] = test.df;
  out["p_value"] = json_number(test.p_value);
  return out;
}

TestResult test_from_json(const nlohmann::json& doc, Model model,
                          StatKind kind) {
  TestResult out;
  out.model = model;
  out.kind = kind;
  out.value = number_from_json(doc.at("value"));
  out.df = doc.at("df").get<int>();
  out.p_value = number_from_json(doc.at("p_value"));
  return out;
}

bool partition_within_tolerance(const PartitionReport& part,
                                double tolerance) {
  return part.residual <= tolerance * std::max(1.0, part.s.value);
}

nlohmann::ordered_json partition_to_json(const PartitionReport& part,
                                         double tolerance) {
  nlohmann::ordered_json out;
  out["s"] = test_to_json(part.s);
  out["dps"] = test_to_json(part.dps);
  out["dgs"] = test_to_json(part.dgs);
  out["residual"] = json_number(part.residual);
  out["df_check"] = part.df_check;
  out["within_tolerance"] = partition_within_tolerance(part, tolerance);
  return out;
}

PartitionReport partition_from_json(const nlohmann::json& doc,
                                    StatKind kind) {
  PartitionReport out;
  out.s = test_from_json(doc.at("s"), Model::S, kind);
  out.dps = test_from_json(doc.at("dps"), Model::DPS, kind);
  out.dgs = test_from_json(doc.at("dgs"), Model::DGS, kind);
  out.residual = number_from_json(doc.at("residual"));
  out.df_check = doc.at("df_check").get<bool>();
  return out;
}

}  // namespace

StatChoice stat_choice_from_name(const std::string& name) {
  const std::string n = lower(name);
  if (n == "g2") return StatChoice::G2;
  if (n == "wald") return StatChoice::Wald;
  if (n == "both") return StatChoice::Both;
  throw DomainError("unknown statistic \"" + name +
                    "\" (expected g2, wald, or both)");
}

std::string stat_choice_name(StatChoice choice) {
  switch (choice) {
    case StatChoice::G2:
      return "g2";
    case StatChoice::Wald:
      return "wald";
    case StatChoice::Both:
      return "both";
  }
  throw DomainError("unknown statistic tag");
}

OutputFormat format_from_name(const std::string& name) {
  const std::string n = lower(name);
  if (n == "text") return OutputFormat::Text;
  if (n == "json") return OutputFormat::Json;
  throw DomainError("unknown format \"" + name +
                    "\" (expected text or json)");
}

SquareTable parse_csv(std::istream& in) {
  struct Row {
    int line;  // 1-based physical line number
    std::vector<std::string> fields;
  };
  std::vector<Row> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back({lineno, split(line, ',')});
  }
  if (rows.empty()) {
    throw ParseError("input contains no data");
  }

  // A first line made entirely of numbers means the bare-matrix form;
  // anything else is treated as a header row of category labels.
  bool headered = false;
  for (const auto& field : rows[0].fields) {
    double ignored;
    if (!parse_number(field, ignored)) {
      headered = true;
      break;
    }
  }

  const auto parse_cell = [](const Row& row, std::size_t col) {
    double value;
    if (!parse_number(row.fields[col], value)) {
      throw ParseError("row " + std::to_string(row.line) + ", column " +
                           std::to_string(col + 1) + ": \"" +
                           row.fields[col] + "\" is not a number",
                       row.line, static_cast<int>(col + 1));
    }
    if (value < 0.0) {
      throw ParseError("row " + std::to_string(row.line) + ", column " +
                           std::to_string(col + 1) + ": counts must be " +
                           "non-negative, got " + row.fields[col],
                       row.line, static_cast<int>(col + 1));
    }
    return value;
  };

  if (!headered) {
    const std::size_t width = rows[0].fields.size();
    Eigen::MatrixXd counts(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].fields.size() != width) {
        throw ParseError("row " + std::to_string(rows[i].line) + ": expected " +
                             std::to_string(rows[i].fields.size()) +
                             " fields, expected " + std::to_string(width),
                         rows[i].line, 0);
      }
      for (std::size_t j = 0; j < width; ++j) {
        counts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            parse_cell(rows[i], j);
      }
    }
    return SquareTable::from_counts(counts);
  }

  // Labeled form: a header row, then rows led by a row label.
  if (rows.size() < 2) {
    throw ParseError("no data rows after the header", rows[0].line, 0);
  }
  const std::size_t data_width = rows[1].fields.size();
  if (data_width < 2) {
    throw ParseError("row " + std::to_string(rows[1].line) +
                         " has no data cells after the row label",
                     rows[1].line, 0);
  }
  const std::size_t r = data_width - 1;

  std::vector<std::string> labels;
  if (rows[0].fields.size() == r + 1) {
    // The header includes a (possibly empty) corner cell over the row
    // labels; drop it.
    labels.assign(rows[0].fields.begin() + 1, rows[0].fields.end());
  } else if (rows[0].fields.size() == r) {
    labels = rows[0].fields;
  } else {
    throw ParseError("header has " + std::to_string(rows[0].fields.size()) +
                         " fields but data rows have " +
                         std::to_string(data_width),
                     rows[0].line, 0);
  }

  Eigen::MatrixXd counts(rows.size() - 1, r);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].fields.size() != data_width) {
      throw ParseError("row " + std::to_string(rows[i].line) + ": expected " +
                           std::to_string(rows[i].fields.size()) +
                           " fields, expected " + std::to_string(data_width),
                       rows[i].line, 0);
    }
    for (std::size_t j = 1; j < data_width; ++j) {
      counts(static_cast<Eigen::Index>(i - 1),
             static_cast<Eigen::Index>(j - 1)) = parse_cell(rows[i], j);
    }
  }
  return SquareTable::from_counts(counts, std::move(labels));
}

SquareTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

AnalysisResult run_analysis(const SquareTable& input,
                            const AnalysisConfig& config) {
  const SquareTable table =
      config.smoothing ? input.smoothed(*config.smoothing) : input;

  AnalysisResult result{.table = table,
                        .smoothing = config.smoothing,
                        .stat = config.stat,
                        .tolerance = config.tolerance};

  const bool want_g2 = config.stat != StatChoice::Wald;
  const bool want_wald = config.stat != StatChoice::G2;
  const auto requested = [&](Model m) {
    return std::find(config.models.begin(), config.models.end(), m) !=
           config.models.end();
  };

  std::optional<DesignMatrices> design;
  for (const Model model : kCanonicalOrder) {
    if (!requested(model)) continue;
    ModelReport entry{.fit = fit(model, table)};
    if (want_g2) {
      entry.g2_test = g2(table, entry.fit);
    }
    if (want_wald) {
      if (model == Model::CS || model == Model::GS) {
        result.warnings.push_back("the wald statistic is not defined for "
                                  "the " +
                                  model_name(model) + " model; skipped");
      } else {
        if (!design) design = build_design_matrices(table.size());
        entry.wald_test = wald(table, model, *design);
      }
    }
    result.models.push_back(std::move(entry));
  }

  if (requested(Model::S) && requested(Model::DPS) &&
      requested(Model::DGS)) {
    if (want_g2) result.partition_g2 = partition(table, StatKind::G2);
    if (want_wald) result.partition_wald = partition(table, StatKind::Wald);
  }

  if (requested(Model::DPS)) {
    const auto dps_entry =
        std::find_if(result.models.begin(), result.models.end(),
                     [](const ModelReport& entry) {
                       return entry.fit.model == Model::DPS;
                     });
    for (const DivergenceFamily& family : config.families) {
      result.dps_parameters.push_back(
          {family, dps_parameters(family, *dps_entry->fit.dps_odds)});
    }
  }
  return result;
}

std::string render_text(const AnalysisResult& result) {
  const int r = result.table.size();
  std::string out;

  out += "Square contingency table: " + std::to_string(r) +
         " categories, n = " + observed_text(result.table.total()) + "\n";
  out += "Categories: ";
  for (int i = 0; i < r; ++i) {
    if (i > 0) out += ", ";
    out += result.table.labels()[static_cast<std::size_t>(i)];
  }
  out += "\n";
  if (result.smoothing) {
    out += "Smoothing: " + compact(*result.smoothing) +
           " added to every cell\n";
  }

  const bool any_g2 = std::any_of(
      result.models.begin(), result.models.end(),
      [](const ModelReport& m) { return m.g2_test.has_value(); });
  const bool any_wald = std::any_of(
      result.models.begin(), result.models.end(),
      [](const ModelReport& m) { return m.wald_test.has_value(); });

  if (!result.models.empty()) {
    out += "\nGoodness of fit\n";
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header = {"Model", "df"};
    if (any_g2) {
      header.push_back("G2");
      header.push_back("p-value");
    }
    if (any_wald) {
      header.push_back("Wald");
      header.push_back("p-value");
    }
    grid.push_back(header);
    for (const ModelReport& entry : result.models) {
      std::vector<std::string> row = {display_name(entry.fit.model),
                                      std::to_string(entry.fit.df)};
      if (any_g2) {
        row.push_back(entry.g2_test ? fixed(entry.g2_test->value, 2) : "-");
        row.push_back(entry.g2_test ? p_value_text(entry.g2_test->p_value)
                                    : "-");
      }
      if (any_wald) {
        row.push_back(entry.wald_test ? fixed(entry.wald_test->value, 2)
                                      : "-");
        row.push_back(entry.wald_test
                          ? p_value_text(entry.wald_test->p_value)
                          : "-");
      }
      grid.push_back(std::move(row));
    }
    out += render_grid(grid, {false, true, true, true, true, true}, "  ");
  }

  const auto partition_line = [&](const char* tag,
                                  const PartitionReport& part) {
    const bool ok = partition_within_tolerance(part, result.tolerance);
    out += std::string("  ") + tag + fixed(part.s.value, 2) + " = " +
           fixed(part.dps.value, 2) + " + " + fixed(part.dgs.value, 2) +
           "  (residual " + scientific(part.residual) + ", " +
           (ok ? "within" : "EXCEEDS") + " tolerance " +
           compact(result.tolerance) + ")\n";
  };
  if (result.partition_g2 || result.partition_wald) {
    out += "\nPartition of the symmetry statistic: S = DPS + DGS\n";
    if (result.partition_g2) partition_line("G2:    ", *result.partition_g2);
    if (result.partition_wald) {
      partition_line("Wald:  ", *result.partition_wald);
    }
    const PartitionReport& any = result.partition_g2
                                     ? *result.partition_g2
                                     : *result.partition_wald;
    out += "  df:    " + std::to_string(any.s.df) + " = " +
           std::to_string(any.dps.df) + " + " + std::to_string(any.dgs.df) +
           (any.df_check ? "" : "  (MISMATCH)") + "\n";
  }

  const auto dps_entry = std::find_if(
      result.models.begin(), result.models.end(),
      [](const ModelReport& m) { return m.fit.model == Model::DPS; });
  if (dps_entry != result.models.end() && dps_entry->fit.dps_odds) {
    out += "\nDistance parameters (DPS)\n";
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header = {"band"};
    for (int k = 1; k < r; ++k) header.push_back(std::to_string(k));
    grid.push_back(std::move(header));
    const Eigen::VectorXd& odds = *dps_entry->fit.dps_odds;
    std::vector<std::string> odds_row = {"odds (kl)"};
    for (Eigen::Index k = 0; k < odds.size(); ++k) {
      odds_row.push_back(fixed(odds(k), 2));
    }
    grid.push_back(std::move(odds_row));
    for (const FamilyParameters& params : result.dps_parameters) {
      if (params.family.kind() == DivergenceFamily::Kind::KL) {
        continue;  // identical to the odds row above
      }
      std::vector<std::string> row = {params.family.name()};
      for (Eigen::Index k = 0; k < params.values.size(); ++k) {
        row.push_back(fixed(params.values(k), 2));
      }
      grid.push_back(std::move(row));
    }
    std::vector<bool> right(static_cast<std::size_t>(r), true);
    right[0] = false;
    out += render_grid(grid, right, "  ");
  }

  for (const ModelReport& entry : result.models) {
    out += "\nFitted values under " + display_name(entry.fit.model) +
           ": observed (fitted)\n";
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header = {""};
    for (const std::string& label : result.table.labels()) {
      header.push_back(label);
    }
    grid.push_back(std::move(header));
    for (int i = 0; i < r; ++i) {
      std::vector<std::string> row = {
          result.table.labels()[static_cast<std::size_t>(i)]};
      for (int j = 0; j < r; ++j) {
        row.push_back(observed_text(result.table(i, j)) + " (" +
                      fixed(entry.fit.fitted(i, j), 2) + ")");
      }
      grid.push_back(std::move(row));
    }
    out += render_grid(grid, {}, "  ");
    if (entry.fit.model == Model::CS && entry.fit.dps_odds) {
      out += "  common odds: " + fixed((*entry.fit.dps_odds)(0), 2) + "\n";
    }
  }

  std::vector<std::string> warnings;
  for (const ModelReport& entry : result.models) {
    for (const std::string& w : entry.fit.warnings) {
      warnings.push_back(model_name(entry.fit.model) + ": " + w);
    }
  }
  warnings.insert(warnings.end(), result.warnings.begin(),
                  result.warnings.end());
  if (!warnings.empty()) {
    out += "\nWarnings\n";
    for (const std::string& w : warnings) {
      out += "  - " + w + "\n";
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const AnalysisResult& result) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;

  nlohmann::ordered_json table;
  table["r"] = result.table.size();
  table["n"] = json_number(result.table.total());
  table["labels"] = result.table.labels();
  table["counts"] = matrix_to_json(result.table.counts());
  table["smoothing"] = result.smoothing
                           ? nlohmann::ordered_json(*result.smoothing)
                           : nlohmann::ordered_json(nullptr);
  doc["table"] = std::move(table);

  doc["statistics"] = stat_choice_name(result.stat);
  doc["tolerance"] = result.tolerance;

  nlohmann::ordered_json models = nlohmann::ordered_json::array();
  for (const ModelReport& entry : result.models) {
    nlohmann::ordered_json m;
    m["model"] = model_name(entry.fit.model);
    m["df"] = entry.fit.df;
    m["fitted"] = matrix_to_json(entry.fit.fitted);
    m["dps_odds"] = entry.fit.dps_odds
                        ? vector_to_json(*entry.fit.dps_odds)
                        : nlohmann::ordered_json(nullptr);
    m["warnings"] = entry.fit.warnings;
    m["g2"] = entry.g2_test ? test_to_json(*entry.g2_test)
                            : nlohmann::ordered_json(nullptr);
    m["wald"] = entry.wald_test ? test_to_json(*entry.wald_test)
                                : nlohmann::ordered_json(nullptr);
    models.push_back(std::move(m));
  }
  doc["models"] = std::move(models);

  if (result.partition_g2 || result.partition_wald) {
    nlohmann::ordered_json part;
    part["g2"] = result.partition_g2
                     ? partition_to_json(*result.partition_g2,
                                         result.tolerance)
                     : nlohmann::ordered_json(nullptr);
    part["wald"] = result.partition_wald
                       ? partition_to_json(*result.partition_wald,
                                           result.tolerance)
                       : nlohmann::ordered_json(nullptr);
    doc["partition"] = std::move(part);
  } else {
    doc["partition"] = nullptr;
  }

  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const FamilyParameters& entry : result.dps_parameters) {
    nlohmann::ordered_json p;
    p["family"] = family_kind_name(entry.family);
    p["lambda"] = entry.family.kind() == DivergenceFamily::Kind::Power
                      ? nlohmann::ordered_json(entry.family.lambda())
                      : nlohmann::ordered_json(nullptr);
    p["values"] = vector_to_json(entry.values);
    params.push_back(std::move(p));
  }
  doc["dps_parameters"] = std::move(params);

  doc["warnings"] = result.warnings;
  return doc;
}

std::string render_json(const AnalysisResult& result) {
  return to_json(result).dump(2) + "\n";
}

AnalysisResult from_json(const nlohmann::json& doc) {
  const auto& table = doc.at("table");
  SquareTable parsed = SquareTable::from_counts(
      matrix_from_json(table.at("counts")),
      table.at("labels").get<std::vector<std::string>>());

  AnalysisResult result{
      .table = std::move(parsed),
      .smoothing = table.at("smoothing").is_null()
                       ? std::nullopt
                       : std::optional<double>(
                             table.at("smoothing").get<double>()),
      .stat = stat_choice_from_name(doc.at("statistics").get<std::string>()),
      .tolerance = doc.at("tolerance").get<double>()};

  for (const auto& m : doc.at("models")) {
    ModelReport entry{
        .fit = {.model = model_from_name(m.at("model").get<std::string>()),
                .fitted = matrix_from_json(m.at("fitted")),
                .dps_odds = m.at("dps_odds").is_null()
                                ? std::nullopt
                                : std::optional<Eigen::VectorXd>(
                                      vector_from_json(m.at("dps_odds"))),
                .df = m.at("df").get<int>(),
                .warnings =
                    m.at("warnings").get<std::vector<std::string>>()}};
    if (!m.at("g2").is_null()) {
      entry.g2_test =
          test_from_json(m.at("g2"), entry.fit.model, StatKind::G2);
    }
    if (!m.at("wald").is_null()) {
      entry.wald_test =
          test_from_json(m.at("wald"), entry.fit.model, StatKind::Wald);
    }
    result.models.push_back(std::move(entry));
  }

  if (!doc.at("partition").is_null()) {
    const auto& part = doc.at("partition");
    if (!part.at("g2").is_null()) {
      result.partition_g2 = partition_from_json(part.at("g2"), StatKind::G2);
    }
    if (!part.at("wald").is_null()) {
      result.partition_wald =
          partition_from_json(part.at("wald"), StatKind::Wald);
    }
  }

  for (const auto& p : doc.at("dps_parameters")) {
    const std::string kind = p.at("family").get<std::string>();
    const DivergenceFamily family =
        kind == "power"
            ? DivergenceFamily::power(p.at("lambda").get<double>())
            : family_from_name(kind);
    result.dps_parameters.push_back(
        {family, vector_from_json(p.at("values"))});
  }

  result.warnings = doc.at("warnings").get<std::vector<std::string>>();
  return result;
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const ParseError*>(&error) != nullptr ||
      dynamic_cast<const TableError*>(&error) != nullptr) {
    return 2;
  }
  if (dynamic_cast<const DegenerateFitError*>(&error) != nullptr) {
    return 3;
  }
  return 4;  // NumericError and anything unexpected
}

}  // namespace sqsym::report
