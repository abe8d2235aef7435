#include "sqsym/divergence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
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

/// lim_{t -> infinity} f(t) / t: the per-unit cost of mass where the
/// reference distribution vanishes.
double slope_at_infinity(const DivergenceFamily& family) {
  switch (family.kind()) {
    case DivergenceFamily::Kind::KL:
      return kInf;  // log t grows without bound
    case DivergenceFamily::Kind::ReverseKL:
      return 0.0;  // -log(t)/t -> 0
    case DivergenceFamily::Kind::Pearson:
      return kInf;  // (1-t)^2/t -> infinity
    case DivergenceFamily::Kind::Power: {
      // (t^lambda - 1) / (lambda (lambda + 1)): infinite for lambda > 0,
      // otherwise the t^lambda term vanishes.
      const double lam = family.lambda();
      return lam > 0.0 ? kInf : -1.0 / (lam * (lam + 1.0));
    }
  }
  throw DomainError("unknown divergence family tag");
}

}  // namespace

DivergenceFamily DivergenceFamily::power(double lambda) {
  if (!std::isfinite(lambda) || lambda == 0.0 || lambda == -1.0) {
    throw DomainError(
        "power-divergence index must be finite and away from 0 and -1 "
        "(those limits are the kl and rkl families)");
  }
  return DivergenceFamily(Kind::Power, lambda);
}

std::string DivergenceFamily::name() const {
  switch (kind_) {
    case Kind::KL:
      return "kl";
    case Kind::ReverseKL:
      return "rkl";
    case Kind::Pearson:
      return "pearson";
    case Kind::Power: {
      std::ostringstream out;
      out.imbue(std::locale::classic());
      out << "power(" << lambda_ << ")";
      return out.str();
    }
  }
  throw DomainError("unknown divergence family tag");
}

DivergenceFamily family_from_name(const std::string& name, double lambda) {
  const std::string n = lower(name);
  if (n == "kl") return DivergenceFamily::kl();
  if (n == "rkl") return DivergenceFamily::reverse_kl();
  if (n == "pearson") return DivergenceFamily::pearson();
  if (n == "power") return DivergenceFamily::power(lambda);
  throw DomainError("unknown divergence family \"" + name +
                    "\" (expected kl, rkl, pearson, or power)");
}

double f_eval(const DivergenceFamily& family, double t) {
  if (t < 0.0) {
    throw DomainError("f is defined on [0, infinity), got " +
                      std::to_string(t));
  }
  switch (family.kind()) {
    case DivergenceFamily::Kind::KL:
      return t == 0.0 ? 0.0 : t * std::log(t);
    case DivergenceFamily::Kind::ReverseKL:
      return -std::log(t);  // +infinity at t = 0
    case DivergenceFamily::Kind::Pearson:
      return (1.0 - t) * (1.0 - t);
    case DivergenceFamily::Kind::Power: {
      const double lam = family.lambda();
      if (t == 0.0) {
        // t^(lambda+1) -> 0 above lambda = -1 and diverges below it.
        return lam > -1.0 ? 0.0 : kInf;
      }
      return (std::pow(t, lam + 1.0) - t) / (lam * (lam + 1.0));
    }
  }
  throw DomainError("unknown divergence family tag");
}

double big_f(const DivergenceFamily& family, double t) {
  if (t < 0.0) {
    throw DomainError("F is defined on [0, infinity), got " +
                      std::to_string(t));
  }
  // The t = 0 cases fall out of the formulas under IEEE semantics:
  // log 0 = -infinity, 1/0 = infinity, 0^lambda = 0 or infinity by sign.
  switch (family.kind()) {
    case DivergenceFamily::Kind::KL:
      return std::log(t) + 1.0;
    case DivergenceFamily::Kind::ReverseKL:
      return -1.0 / t;
    case DivergenceFamily::Kind::Pearson:
      return 2.0 * (t - 1.0);
    case DivergenceFamily::Kind::Power: {
      const double lam = family.lambda();
      return ((lam + 1.0) * std::pow(t, lam) - 1.0) / (lam * (lam + 1.0));
    }
  }
  throw DomainError("unknown divergence family tag");
}

double big_f_inv(const DivergenceFamily& family, double y) {
  switch (family.kind()) {
    case DivergenceFamily::Kind::KL:
      return std::exp(y - 1.0);
    case DivergenceFamily::Kind::ReverseKL:
      if (!(y < 0.0)) {
        throw RangeError(
            "the reverse-KL F maps onto (-infinity, 0); cannot invert " +
            std::to_string(y));
      }
      return -1.0 / y;
    case DivergenceFamily::Kind::Pearson:
      return 1.0 + 0.5 * y;  // non-positive results are the caller's call
    case DivergenceFamily::Kind::Power: {
      const double lam = family.lambda();
      const double powered = (lam * (lam + 1.0) * y + 1.0) / (lam + 1.0);
      if (!(powered > 0.0)) {
        throw RangeError(
            "value outside the range of the power-divergence F: " +
            std::to_string(y));
      }
      return std::pow(powered, 1.0 / lam);
    }
  }
  throw DomainError("unknown divergence family tag");
}

double g_transform(const DivergenceFamily& family, double d) {
  if (!(d > 0.0)) {
    throw DomainError("g_transform needs a positive odds, got " +
                      std::to_string(d));
  }
  if (std::isinf(d)) {
    return big_f(family, 2.0) - big_f(family, 0.0);  // the supremum of G
  }
  const double denom = 1.0 + d;
  return big_f(family, 2.0 * d / denom) - big_f(family, 2.0 / denom);
}

double g_inverse(const DivergenceFamily& family, double a) {
  if (std::isnan(a)) {
    throw RangeError("cannot invert G at NaN");
  }
  if (a == 0.0) return 1.0;  // G(1) = 0 exactly for every family

  // G is strictly increasing, so a geometrically grown bracket followed
  // by bisection in log d is globally convergent.
  double lo = 1e-12;
  double hi = 1e12;
  while (g_transform(family, lo) > a) {
    if (lo < 1e-250) {
      throw RangeError("value below the range of G: " + std::to_string(a));
    }
    lo *= 1e-12;
  }
  while (g_transform(family, hi) < a) {
    if (hi > 1e250) {
      throw RangeError("value above the range of G: " + std::to_string(a));
    }
    hi *= 1e12;
  }
  double log_lo = std::log(lo);
  double log_hi = std::log(hi);
  for (int iter = 0; iter < 300 && log_hi - log_lo > 1e-13; ++iter) {
    const double mid = 0.5 * (log_lo + log_hi);
    if (g_transform(family, std::exp(mid)) < a) {
      log_lo = mid;
    } else {
      log_hi = mid;
    }
  }
  return std::exp(0.5 * (log_lo + log_hi));
}

double dps_parameter(const DivergenceFamily& family, double d) {
  if (std::isnan(d)) return kNaN;  // inestimable odds stay inestimable
  if (d < 0.0) {
    throw DomainError("band odds must be non-negative, got " +
                      std::to_string(d));
  }
  // These algebraic forms give the correct limit values at d = 0 and
  // d = +infinity without special cases.
  switch (family.kind()) {
    case DivergenceFamily::Kind::KL:
      return d;
    case DivergenceFamily::Kind::ReverseKL:
      return 1.0 / d - d;  // (1 - d^2) / d
    case DivergenceFamily::Kind::Pearson:
      return 1.0 - 2.0 / (1.0 + d);  // (d - 1) / (1 + d)
    case DivergenceFamily::Kind::Power: {
      // (d^lambda - 1) / (1 + d)^lambda split into bounded factors.
      const double lam = family.lambda();
      const double inv = 1.0 / (1.0 + d);  // 1 / (1 + d)
      return std::pow(1.0 - inv, lam) - std::pow(inv, lam);
    }
  }
  throw DomainError("unknown divergence family tag");
}

Eigen::VectorXd dps_parameters(const DivergenceFamily& family,
                               const Eigen::VectorXd& odds) {
  Eigen::VectorXd out(odds.size());
  for (Eigen::Index k = 0; k < odds.size(); ++k) {
    out(k) = dps_parameter(family, odds(k));
  }
  return out;
}

double f_divergence(const DivergenceFamily& family, const ProbTable& probs,
                    const ProbTable& reference) {
  if (probs.size() != reference.size()) {
    throw DimensionError("cannot compare a " + std::to_string(probs.size()) +
                         "-category table against a " +
                         std::to_string(reference.size()) + "-category one");
  }
  const int r = probs.size();
  double total = 0.0;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double p = probs(i, j);
      const double q = reference(i, j);
      if (q > 0.0) {
        total += q * f_eval(family, p / q);
      } else if (p > 0.0) {
        total += p * slope_at_infinity(family);
      }
      // q = 0 and p = 0 contributes 0 f(0/0) = 0.
    }
  }
  return total;
}

Eigen::MatrixXd band_contrasts(const DivergenceFamily& family,
                               const ProbTable& probs) {
  const int r = probs.size();
  const Eigen::MatrixXd cond = conditional_symmetric(probs);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const double cij = cond(i, j);
      if (std::isnan(cij)) {
        out(i, j) = kNaN;  // zero pair mass: no conditional distribution
        continue;
      }
      out(i, j) = big_f(family, 2.0 * cij) - big_f(family, 2.0 * cond(j, i));
    }
  }
  return out;
}

}  // namespace sqsym
