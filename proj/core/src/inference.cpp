#include "sqsym/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sqsym {

namespace {

constexpr int kMaxIterations = 1000;
const double kEps = std::numeric_limits<double>::epsilon();
const double kFpMin = std::numeric_limits<double>::min() / kEps;

/// Lower regularized incomplete gamma P(a, x) by series expansion;
/// converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Upper regularized incomplete gamma Q(a, x) by modified-Lentz continued
/// fraction; converges quickly for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chi_square_sf(double x, int df) {
  if (df < 0) {
    throw DomainError("degrees of freedom must be non-negative, got " +
                      std::to_string(df));
  }
  if (!(x >= 0.0)) {
    throw DomainError("test statistic must be non-negative, got " +
                      std::to_string(x));
  }
  if (df == 0) return 1.0;  // saturated hypothesis: nothing to test
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  const double a = 0.5 * df;
  const double half = 0.5 * x;
  if (half < a + 1.0) {
    return 1.0 - gamma_p_series(a, half);
  }
  return gamma_q_fraction(a, half);
}

TestResult g2(const SquareTable& table, const FittedModel& fit) {
  const int r = table.size();
  if (fit.fitted.rows() != r || fit.fitted.cols() != r) {
    throw DimensionError("fitted table is " +
                         std::to_string(fit.fitted.rows()) + " x " +
                         std::to_string(fit.fitted.cols()) +
                         " against an observed table of dimension " +
                         std::to_string(r));
  }
  double sum = 0.0;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double observed = table(i, j);
      if (observed <= 0.0) continue;  // 0 log 0 = 0
      const double expected = fit.fitted(i, j);
      if (expected <= 0.0) {
        throw UndefinedStatisticError(
            "cell (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
            ") has observed count " + std::to_string(observed) +
            " but zero fitted value under the " + model_name(fit.model) +
            " model");
      }
      sum += observed * std::log(observed / expected);
    }
  }
  TestResult out;
  out.model = fit.model;
  out.kind = StatKind::G2;
  out.value = std::max(0.0, 2.0 * sum);  // clamp -0-scale rounding noise
  out.df = fit.df;
  out.p_value = chi_square_sf(out.value, out.df);
  return out;
}

DesignMatrices build_design_matrices(int r) {
  if (r < 2) {
    throw DomainError("table dimension must be at least 2, got " +
                      std::to_string(r));
  }
  const int cells = r * r;
  const int distance_cols = r - 1;
  const int pair_cols = r * (r + 1) / 2;

  DesignMatrices out;
  out.r = r;
  out.design = Eigen::MatrixXd::Zero(cells, distance_cols + pair_cols);
  // One indicator column per band distance, upper-triangle cells only.
  for (int l = 1; l < r; ++l) {
    for (int i = 0; i + l < r; ++i) {
      out.design(i * r + (i + l), l - 1) = 1.0;
    }
  }
  // One indicator column per symmetric pair {i, j}, i <= j.
  int col = distance_cols;
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j, ++col) {
      out.design(i * r + j, col) = 1.0;
      out.design(j * r + i, col) = 1.0;
    }
  }

  // The design has full column rank by construction (pair columns have
  // disjoint lower/diagonal support; distance columns then pin the upper
  // cells), so the trailing columns of a full QR factor span the null
  // space of design^T.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(out.design);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(cells, cells);
  out.null_basis = q.rightCols(cells - distance_cols - pair_cols);

  // Band contrasts: +1 on each upper cell, -1 on its mirror.
  out.constraints = Eigen::MatrixXd::Zero(r - 1, cells);
  for (int l = 1; l < r; ++l) {
    for (int i = 0; i + l < r; ++i) {
      out.constraints(l - 1, i * r + (i + l)) = 1.0;
      out.constraints(l - 1, (i + l) * r + i) = -1.0;
    }
  }
  return out;
}

TestResult wald(const SquareTable& table, Model model,
                const DesignMatrices& design) {
  const int r = table.size();
  if (design.r != r) {
    throw DimensionError("design matrices were built for dimension " +
                         std::to_string(design.r) +
                         " but the table has dimension " + std::to_string(r));
  }
  if (model != Model::S && model != Model::DPS && model != Model::DGS) {
    throw DomainError("the Wald statistic is defined for the s, dps and "
                      "dgs models only");
  }

  const double n = table.total();
  Eigen::VectorXd p(r * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double v = table(i, j);
      if (v <= 0.0) {
        throw ZeroCellError("cell (" + std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) +
                            ") is zero; the Wald statistic needs a strictly "
                            "positive table (consider smoothing)");
      }
      p(i * r + j) = v / n;
    }
  }

  // Constraint values h(p) and Jacobians H(p) for the requested model.
  const Eigen::MatrixXd& basis = design.null_basis;
  const Eigen::MatrixXd& bands = design.constraints;
  const Eigen::Index d1 = basis.cols();
  const Eigen::Index d2 = bands.rows();

  Eigen::VectorXd h;
  Eigen::MatrixXd jac;
  switch (model) {
    case Model::DPS:
      h = basis.transpose() * p.array().log().matrix();
      jac = basis.transpose() * p.cwiseInverse().asDiagonal();
      break;
    case Model::DGS:
      h = bands * p;
      jac = bands;
      break;
    default: {  // Model::S: both constraint sets stacked
      h.resize(d1 + d2);
      h.head(d1) = basis.transpose() * p.array().log().matrix();
      h.tail(d2) = bands * p;
      jac.resize(d1 + d2, r * r);
      jac.topRows(d1) = basis.transpose() * p.cwiseInverse().asDiagonal();
      jac.bottomRows(d2) = bands;
      break;
    }
  }

  TestResult out;
  out.model = model;
  out.kind = StatKind::Wald;
  out.df = degrees_of_freedom(model, r);
  if (h.size() == 0) {
    // r = 2 leaves the distance-proportional model saturated.
    out.value = 0.0;
    out.p_value = chi_square_sf(0.0, out.df);
    return out;
  }

  const Eigen::MatrixXd sigma =
      Eigen::MatrixXd(p.asDiagonal()) - p * p.transpose();
  const Eigen::MatrixXd inner = jac * sigma * jac.transpose();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(inner);
  if (lu.rcond() < 1e-12) {
    throw SingularInformationError(
        "the constraint covariance is numerically singular (reciprocal "
        "condition " +
        std::to_string(lu.rcond()) + ")");
  }
  out.value = std::max(0.0, n * h.dot(lu.solve(h)));
  out.p_value = chi_square_sf(out.value, out.df);
  return out;
}

TestResult wald(const SquareTable& table, Model model) {
  return wald(table, model, build_design_matrices(table.size()));
}

PartitionReport partition(const SquareTable& table, StatKind kind) {
  PartitionReport out;
  if (kind == StatKind::G2) {
    out.s = g2(table, fit_s(table));
    out.dps = g2(table, fit_dps(table));
    out.dgs = g2(table, fit_dgs(table));
  } else {
    const DesignMatrices design = build_design_matrices(table.size());
    out.s = wald(table, Model::S, design);
    out.dps = wald(table, Model::DPS, design);
    out.dgs = wald(table, Model::DGS, design);
  }
  out.residual = std::abs(out.s.value - out.dps.value - out.dgs.value);
  const int r = table.size();
  out.df_check = out.s.df == out.dps.df + out.dgs.df &&
                 out.s.df == r * (r - 1) / 2;
  return out;
}

}  // namespace sqsym
