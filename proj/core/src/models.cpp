#include "sqsym/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace sqsym {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

/// Splits pair totals between the two triangles at a fixed upper share
/// u / (u + l), writing fitted values for all cells with |j - i| = k
/// (k = 0 means every off-diagonal cell).  The lower cell is obtained by
/// subtraction so each pair sum is preserved to the last bit.
void split_pairs(const SquareTable& table, int k, double upper_share,
                 Eigen::MatrixXd& fitted) {
  const int r = table.size();
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (k > 0 && j - i != k) continue;
      const double pair = table(i, j) + table(j, i);
      fitted(i, j) = upper_share * pair;
      fitted(j, i) = pair - fitted(i, j);
    }
  }
}

}  // namespace

std::string model_name(Model model) {
  switch (model) {
    case Model::S:
      return "s";
    case Model::CS:
      return "cs";
    case Model::DPS:
      return "dps";
    case Model::DGS:
      return "dgs";
    case Model::GS:
      return "gs";
  }
  throw DomainError("unknown model tag");
}

Model model_from_name(const std::string& name) {
  const std::string n = lower(name);
  if (n == "s") return Model::S;
  if (n == "cs") return Model::CS;
  if (n == "dps") return Model::DPS;
  if (n == "dgs") return Model::DGS;
  if (n == "gs") return Model::GS;
  throw DomainError("unknown model \"" + name +
                    "\" (expected s, cs, dps, dgs, or gs)");
}

FittedModel fit_s(const SquareTable& table) {
  FittedModel out;
  out.model = Model::S;
  out.fitted = 0.5 * (table.counts() + table.counts().transpose());
  out.df = degrees_of_freedom(Model::S, table.size());
  return out;
}

FittedModel fit_cs(const SquareTable& table) {
  const BandSums bands = band_sums(table);
  const double upper = bands.upper.sum();
  const double lower = bands.lower.sum();
  const double both = upper + lower;

  FittedModel out;
  out.model = Model::CS;
  out.fitted = table.counts();
  double odds = kNaN;
  if (both == 0.0) {
    // No off-diagonal mass at all: the fitted table is the (diagonal)
    // observed table and the common odds carries no information.
    out.warnings.push_back(
        "no off-diagonal observations; common odds undefined");
  } else {
    split_pairs(table, 0, upper / both, out.fitted);
    if (lower > 0.0) {
      odds = upper / lower;
    } else {
      odds = kInf;
      out.warnings.push_back(
          "no lower-triangle observations; common odds infinite");
    }
  }
  out.dps_odds = Eigen::VectorXd::Constant(table.size() - 1, odds);
  out.df = degrees_of_freedom(Model::CS, table.size());
  return out;
}

FittedModel fit_dps(const SquareTable& table) {
  const int r = table.size();
  const BandSums bands = band_sums(table);

  FittedModel out;
  out.model = Model::DPS;
  out.fitted = table.counts();
  Eigen::VectorXd odds(r - 1);
  for (int k = 1; k < r; ++k) {
    const double upper = bands.upper(k - 1);
    const double lower = bands.lower(k - 1);
    const double both = upper + lower;
    if (both == 0.0) {
      // Every cell in the band is zero, so the fitted cells are zero too,
      // but the band's odds cannot be estimated.
      odds(k - 1) = kNaN;
      out.warnings.push_back("band " + std::to_string(k) +
                             " has no observations; odds undefined");
      split_pairs(table, k, 0.0, out.fitted);
      continue;
    }
    split_pairs(table, k, upper / both, out.fitted);
    if (lower > 0.0) {
      odds(k - 1) = upper / lower;
    } else {
      odds(k - 1) = kInf;
      out.warnings.push_back("band " + std::to_string(k) +
                             " has no lower-triangle observations; "
                             "odds infinite");
    }
  }
  out.dps_odds = std::move(odds);
  out.df = degrees_of_freedom(Model::DPS, r);
  return out;
}

FittedModel fit_dgs(const SquareTable& table) {
  const int r = table.size();
  const BandSums bands = band_sums(table);

  FittedModel out;
  out.model = Model::DGS;
  out.fitted = table.counts();
  for (int k = 1; k < r; ++k) {
    const double upper = bands.upper(k - 1);
    const double lower = bands.lower(k - 1);
    const double both = upper + lower;
    if (both == 0.0) continue;  // empty band: fitted stays all-zero
    if (upper == 0.0 || lower == 0.0) {
      throw DegenerateBandError(
          "band " + std::to_string(k) +
              " has observations on one side of the diagonal only; "
              "the band totals cannot be equalised",
          k);
    }
    // Scale each triangle so both halves of the band carry (upper+lower)/2
    // while the within-triangle proportions stay as observed.
    for (int i = 0; i + k < r; ++i) {
      out.fitted(i, i + k) = both * table(i, i + k) / (2.0 * upper);
      out.fitted(i + k, i) = both * table(i + k, i) / (2.0 * lower);
    }
  }
  out.df = degrees_of_freedom(Model::DGS, r);
  return out;
}

FittedModel fit_gs(const SquareTable& table) {
  const int r = table.size();
  const BandSums bands = band_sums(table);
  const double upper = bands.upper.sum();
  const double lower = bands.lower.sum();
  const double both = upper + lower;

  FittedModel out;
  out.model = Model::GS;
  out.fitted = table.counts();
  if (both > 0.0) {
    if (upper == 0.0 || lower == 0.0) {
      throw DegenerateTriangleError(
          "all off-diagonal observations lie in one triangle; the "
          "triangle totals cannot be equalised");
    }
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        out.fitted(i, j) = both * table(i, j) / (2.0 * upper);
        out.fitted(j, i) = both * table(j, i) / (2.0 * lower);
      }
    }
  }
  out.df = degrees_of_freedom(Model::GS, r);
  return out;
}

FittedModel fit(Model model, const SquareTable& table) {
  switch (model) {
    case Model::S:
      return fit_s(table);
    case Model::CS:
      return fit_cs(table);
    case Model::DPS:
      return fit_dps(table);
    case Model::DGS:
      return fit_dgs(table);
    case Model::GS:
      return fit_gs(table);
  }
  throw DomainError("unknown model tag");
}

int degrees_of_freedom(Model model, int r) {
  if (r < 2) {
    throw DomainError("table dimension must be at least 2, got " +
                      std::to_string(r));
  }
  switch (model) {
    case Model::S:
      return r * (r - 1) / 2;
    case Model::CS:
      return r * (r - 1) / 2 - 1;
    case Model::DPS:
      return (r - 1) * (r - 2) / 2;
    case Model::DGS:
      return r - 1;
    case Model::GS:
      return 1;
  }
  throw DomainError("unknown model tag");
}

}  // namespace sqsym
