#pragma once

#include <Eigen/Dense>

#include "sqsym/models.hpp"
#include "sqsym/table.hpp"

namespace sqsym {

/// Which statistic a TestResult carries.
enum class StatKind { G2, Wald };

/// One goodness-of-fit test of one model.
struct TestResult {
  Model model;
  StatKind kind;
  double value = 0.0;
  int df = 0;
  double p_value = 1.0;
};

/// Upper tail P(X > x) of the chi-squared distribution with df degrees of
/// freedom, via the regularized incomplete gamma function.  df = 0
/// returns 1 by convention (a saturated hypothesis tests nothing).
/// Throws DomainError for df < 0 or x < 0.
double chi_square_sf(double x, int df);

/// Likelihood-ratio statistic G2 = 2 sum n(i,j) log(n(i,j) / m(i,j)) of a
/// fitted model, with zero observed cells contributing zero.  A positive
/// observed count over a zero fitted value is a model/data
/// incompatibility and throws UndefinedStatisticError.
TestResult g2(const SquareTable& table, const FittedModel& fit);

/// Design structure shared by the Wald statistics for an r x r table.
/// Cells are stacked row-major throughout.
struct DesignMatrices {
  int r = 0;
  /// r^2 x ((r-1) + r(r+1)/2) full-column-rank design of the log-linear
  /// distance-proportional model: one indicator column per band distance
  /// (upper-triangle cells only), then one per symmetric pair {i,j}.
  Eigen::MatrixXd design;
  /// r^2 x (r-1)(r-2)/2 orthonormal basis of the null space of design^T:
  /// log-scale constraints characterising distance proportionality.
  /// Empty for r = 2 (the model is saturated there).
  Eigen::MatrixXd null_basis;
  /// (r-1) x r^2 band contrasts (upper minus lower indicator per
  /// distance): the linear constraints of distance-global symmetry.
  Eigen::MatrixXd constraints;
};

/// Builds the shared design structure; throws DomainError for r < 2.
DesignMatrices build_design_matrices(int r);

/// Wald statistic W = n h(p)^t (H Sigma H^t)^{-1} h(p) for one of the
/// models S, DPS, DGS, with Sigma = diag(p) - p p^t and
///   DPS:  h = U^t log p,     H = U^t diag(p)^{-1}
///   DGS:  h = M p,           H = M
///   S:    both stacked.
/// The table must be strictly positive (ZeroCellError) because log cell
/// probabilities enter the constraints.  Throws DomainError for CS/GS
/// (no Wald form here) and SingularInformationError when the constraint
/// covariance is numerically singular.
TestResult wald(const SquareTable& table, Model model,
                const DesignMatrices& design);

/// Convenience overload building the design structure internally.
TestResult wald(const SquareTable& table, Model model);

/// The decomposition of a symmetry test into its distance-proportional
/// and distance-global components, for either statistic kind.
struct PartitionReport {
  TestResult s;
  TestResult dps;
  TestResult dgs;
  /// |value(S) - value(DPS) - value(DGS)|.
  double residual = 0.0;
  /// True when df(S) = df(DPS) + df(DGS) = r(r-1)/2.
  bool df_check = false;
};

/// Computes the three statistics of `kind` (fitting S, DPS and DGS
/// internally for G2) and their additivity residual.
PartitionReport partition(const SquareTable& table, StatKind kind);

}  // namespace sqsym
