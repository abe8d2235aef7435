#pragma once

#include <Eigen/Dense>
#include <string>

#include "sqsym/errors.hpp"
#include "sqsym/table.hpp"

namespace sqsym {

/// One member of the f-divergence family used to parameterise distance
/// effects: Kullback-Leibler, reverse Kullback-Leibler, Pearson, or the
/// power-divergence sub-family indexed by lambda.
class DivergenceFamily {
 public:
  enum class Kind { KL, ReverseKL, Pearson, Power };

  static DivergenceFamily kl() { return DivergenceFamily(Kind::KL, 0.0); }
  static DivergenceFamily reverse_kl() {
    return DivergenceFamily(Kind::ReverseKL, 0.0);
  }
  static DivergenceFamily pearson() {
    return DivergenceFamily(Kind::Pearson, 0.0);
  }
  /// Power divergence with index lambda.  lambda must be finite and away
  /// from 0 and -1 (those limits are the KL and reverse-KL members and
  /// must be requested as such); DomainError otherwise.
  static DivergenceFamily power(double lambda);

  Kind kind() const noexcept { return kind_; }
  /// Only meaningful for Kind::Power.
  double lambda() const noexcept { return lambda_; }

  /// "kl", "rkl", "pearson", or "power(<lambda>)".
  std::string name() const;

  friend bool operator==(const DivergenceFamily& a,
                         const DivergenceFamily& b) {
    return a.kind_ == b.kind_ && a.lambda_ == b.lambda_;
  }

 private:
  DivergenceFamily(Kind kind, double lambda) : kind_(kind), lambda_(lambda) {}

  Kind kind_;
  double lambda_;
};

/// Parses "kl", "rkl", "pearson" or "power" (case-insensitive); "power"
/// takes its index from `lambda`.  Throws DomainError on other names.
DivergenceFamily family_from_name(const std::string& name,
                                  double lambda = 2.0);

/// The generator f(t) for t >= 0, with f(1) = 0 for every family and
/// f(0) the one-sided limit (+infinity where f diverges).  Throws
/// DomainError for t < 0.
double f_eval(const DivergenceFamily& family, double t);

/// F(t) = f'(t) for t > 0; F(0) is the one-sided limit (may be
/// -infinity).  Throws DomainError for t < 0.
double big_f(const DivergenceFamily& family, double t);

/// Inverse of F.  Throws RangeError when y lies outside the invertible
/// range (reverse KL needs y < 0; the power family needs the implied
/// t^lambda to be positive).  The Pearson inverse 1 + y/2 is returned for
/// every real y; values <= 0 are the caller's to clamp.
double big_f_inv(const DivergenceFamily& family, double y);

/// G(d) = F(2d / (1 + d)) - F(2 / (1 + d)) for d > 0: the strictly
/// increasing map between a band's odds and its divergence-scale
/// contrast, with G(1) = 0.  Throws DomainError for d <= 0.
double g_transform(const DivergenceFamily& family, double d);

/// Inverse of g_transform: the unique d > 0 with G(d) = a, found by
/// geometric bisection.  Round-trips with g_transform to 1e-10.  Throws
/// RangeError when a lies outside the range of G.
double g_inverse(const DivergenceFamily& family, double a);

/// The scaled distance parameter reported for a fitted band odds d:
///   KL        d
///   ReverseKL (1 - d^2) / d
///   Pearson   (d - 1) / (1 + d)
///   Power     (d^lambda - 1) / (1 + d)^lambda
/// Defined for d in [0, +infinity], taking the limit value at either
/// endpoint; NaN propagates (an inestimable odds stays inestimable).
/// Throws DomainError for d < 0.
double dps_parameter(const DivergenceFamily& family, double d);

/// dps_parameter applied elementwise to a vector of band odds.
Eigen::VectorXd dps_parameters(const DivergenceFamily& family,
                               const Eigen::VectorXd& odds);

/// I(probs : reference) = sum reference(i,j) f(probs(i,j)/reference(i,j))
/// with the conventions 0 f(0/0) = 0 and 0 f(a/0) = a lim f(t)/t.
/// Infinite divergence (e.g. reverse KL against a vanishing cell) is
/// reported as +infinity, not an error.  Throws DimensionError when the
/// tables differ in size.
double f_divergence(const DivergenceFamily& family, const ProbTable& probs,
                    const ProbTable& reference);

/// Antisymmetric matrix of contrasts F(2 c(i,j)) - F(2 c(j,i)) of the
/// conditional probabilities c = conditional_symmetric(probs); zero on
/// the diagonal, NaN where the pair mass is zero.  Constant within each
/// band exactly when the odds probs(i,j)/probs(j,i) are.
Eigen::MatrixXd band_contrasts(const DivergenceFamily& family,
                               const ProbTable& probs);

}  // namespace sqsym
