#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "sqsym/table.hpp"

namespace sqsym {

/// The symmetry-family hypotheses this library fits.
enum class Model { S, CS, DPS, DGS, GS };

/// Canonical lower-case name: "s", "cs", "dps", "dgs", "gs".
std::string model_name(Model model);

/// Parses a case-insensitive model name; throws DomainError on others.
Model model_from_name(const std::string& name);

/// Maximum-likelihood fit of one model to one table.
struct FittedModel {
  Model model;
  /// Expected cell counts under the model, on the scale of the input table.
  Eigen::MatrixXd fitted;
  /// Estimated odds per band distance 1..r-1: set for DPS (one entry per
  /// band) and CS (the common odds replicated).  An entry is +infinity
  /// when its band has upper-triangle mass only and NaN when the band is
  /// empty on both sides; both cases also attach a warning.
  std::optional<Eigen::VectorXd> dps_odds;
  /// Residual degrees of freedom of the model.
  int df = 0;
  /// Non-fatal diagnostics (empty bands, one-sided odds).
  std::vector<std::string> warnings;
};

/// Complete-symmetry fit: fitted(i,j) = (n(i,j) + n(j,i)) / 2.
FittedModel fit_s(const SquareTable& table);

/// Conditional-symmetry fit: one common odds for all off-diagonal cells,
/// estimated by the pooled upper/lower triangle totals.  Boundary data
/// (an empty triangle) yields a boundary fit, not an error.
FittedModel fit_cs(const SquareTable& table);

/// Distance-proportional-symmetry fit: one odds parameter per band,
/// fitted(i,j) = upper_k / (upper_k + lower_k) * (n(i,j) + n(j,i)).
FittedModel fit_dps(const SquareTable& table);

/// Distance-global-symmetry fit: upper and lower band totals equalised,
/// within-band proportions preserved.  Throws DegenerateBandError for a
/// non-empty band with observations on one side of the diagonal only
/// (the likelihood has no maximiser there).
FittedModel fit_dgs(const SquareTable& table);

/// Global-symmetry fit: the two off-diagonal triangle totals equalised.
/// Throws DegenerateTriangleError when exactly one triangle is empty.
FittedModel fit_gs(const SquareTable& table);

FittedModel fit(Model model, const SquareTable& table);

/// Residual degrees of freedom of `model` for an r x r table:
/// S r(r-1)/2, CS r(r-1)/2 - 1, DPS (r-1)(r-2)/2, DGS r-1, GS 1.
/// Throws DomainError for r < 2.
int degrees_of_freedom(Model model, int r);

}  // namespace sqsym
