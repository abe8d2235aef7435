#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"

namespace {

using sqsym::DivergenceFamily;
using sqsym::Model;
using sqsym::SquareTable;
using namespace sqsym::report;

std::vector<std::string> split_list(const std::string& arg) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (start <= arg.size()) {
    const auto pos = arg.find(',', start);
    const auto end = pos == std::string::npos ? arg.size() : pos;
    std::string token = arg.substr(start, end - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (!token.empty()) out.push_back(token);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Model> parse_models(const std::string& arg) {
  std::vector<Model> models;
  const auto add = [&](Model m) {
    if (std::find(models.begin(), models.end(), m) == models.end()) {
      models.push_back(m);
    }
  };
  for (const std::string& token : split_list(arg)) {
    std::string t = token;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (t == "all") {
      for (Model m : {Model::S, Model::CS, Model::DPS, Model::DGS,
                      Model::GS}) {
        add(m);
      }
    } else {
      add(sqsym::model_from_name(token));
    }
  }
  return models;
}

std::vector<DivergenceFamily> parse_families(
    const std::string& arg, const std::optional<double>& lambda) {
  std::vector<DivergenceFamily> families;
  bool power_requested = false;
  for (const std::string& token : split_list(arg)) {
    std::string t = token;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (t == "power") {
      power_requested = true;
      if (!lambda) {
        throw sqsym::DomainError(
            "--family power requires --lambda <real>");
      }
      const DivergenceFamily family = DivergenceFamily::power(*lambda);
      if (std::find(families.begin(), families.end(), family) ==
          families.end()) {
        families.push_back(family);
      }
      continue;
    }
    const DivergenceFamily family = sqsym::family_from_name(token);
    if (std::find(families.begin(), families.end(), family) ==
        families.end()) {
      families.push_back(family);
    }
  }
  if (lambda && !power_requested) {
    throw sqsym::DomainError(
        "--lambda is only meaningful with power among --family");
  }
  return families;
}

SquareTable load_table(const std::string& path) {
  if (path == "-") {
    return parse_csv(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw sqsym::ParseError("cannot open \"" + path + "\"");
  }
  return parse_csv(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fits symmetry-family models (S, CS, DPS, DGS, GS) to a square "
      "ordinal contingency table, reports likelihood-ratio and Wald "
      "goodness-of-fit statistics with their partition into "
      "distance-proportional and distance-global components, and "
      "expresses the fitted distance effects on several divergence "
      "scales."};
  app.get_formatter()->column_width(32);

  std::string table_arg;
  std::string models_arg = "all";
  std::string stat_arg = "g2";
  std::string family_arg = "kl";
  std::optional<double> lambda;
  std::optional<double> smooth;
  std::string format_arg = "text";
  double tolerance = 1e-8;

  app.add_option("table", table_arg,
                 "CSV file with the square table, or - for standard input")
      ->required();
  app.add_option("--models", models_arg,
                 "comma-separated subset of s,cs,dps,dgs,gs, or all")
      ->capture_default_str();
  app.add_option("--stat", stat_arg, "statistics to compute: g2, wald, both")
      ->capture_default_str();
  app.add_option("--family", family_arg,
                 "comma-separated divergence families for the distance "
                 "parameters: kl, rkl, pearson, power")
      ->capture_default_str();
  app.add_option("--lambda", lambda,
                 "power-divergence index (required with --family power; "
                 "0 and -1 are the kl and rkl limits)");
  app.add_option("--smooth", smooth,
                 "add a flat positive constant to every cell before "
                 "fitting (e.g. 0.5)");
  app.add_option("--format", format_arg, "output format: text or json")
      ->capture_default_str();
  app.add_option("--tolerance", tolerance,
                 "partition residual tolerance, relative to the symmetry "
                 "statistic")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 5;
  }

  AnalysisConfig config;
  try {
    config.models = parse_models(models_arg);
    config.stat = stat_choice_from_name(stat_arg);
    config.families = parse_families(family_arg, lambda);
    config.format = format_from_name(format_arg);
    if (smooth) {
      if (!std::isfinite(*smooth) || *smooth <= 0.0) {
        throw sqsym::DomainError("--smooth must be a positive constant");
      }
      config.smoothing = *smooth;
    }
    if (!std::isfinite(tolerance) || tolerance <= 0.0) {
      throw sqsym::DomainError("--tolerance must be a positive constant");
    }
    config.tolerance = tolerance;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }

  try {
    const SquareTable table = load_table(table_arg);
    const AnalysisResult result = run_analysis(table, config);
    std::cout << (config.format == OutputFormat::Json ? render_json(result)
                                                      : render_text(result));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
