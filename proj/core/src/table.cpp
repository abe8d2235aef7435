#include "sqsym/table.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace sqsym {

SquareTable SquareTable::from_counts(const Eigen::MatrixXd& counts,
                                     std::vector<std::string> labels) {
  if (counts.rows() != counts.cols()) {
    throw NonSquareError("table must be square, got " +
                         std::to_string(counts.rows()) + " x " +
                         std::to_string(counts.cols()));
  }
  if (counts.rows() < 2) {
    throw DimensionError("table must have at least 2 categories, got " +
                         std::to_string(counts.rows()));
  }
  for (Eigen::Index i = 0; i < counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < counts.cols(); ++j) {
      const double v = counts(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw NegativeEntryError(
            "cell (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
            ") must be a finite non-negative count, got " +
            std::to_string(v));
      }
    }
  }
  if (counts.sum() <= 0.0) {
    throw EmptyTableError("table has no observations");
  }
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(counts.rows()));
    for (Eigen::Index i = 0; i < counts.rows(); ++i) {
      labels.push_back(std::to_string(i + 1));
    }
  } else if (static_cast<Eigen::Index>(labels.size()) != counts.rows()) {
    throw DimensionError("got " + std::to_string(labels.size()) +
                         " labels for a table of dimension " +
                         std::to_string(counts.rows()));
  }
  return SquareTable(counts, std::move(labels));
}

SquareTable SquareTable::smoothed(double amount) const {
  if (!std::isfinite(amount) || amount < 0.0) {
    throw DomainError("smoothing amount must be finite and non-negative");
  }
  Eigen::MatrixXd shifted = counts_.array() + amount;
  return SquareTable(std::move(shifted), labels_);
}

ProbTable ProbTable::from_probs(const Eigen::MatrixXd& probs, double tol) {
  if (probs.rows() != probs.cols()) {
    throw NonSquareError("probability table must be square, got " +
                         std::to_string(probs.rows()) + " x " +
                         std::to_string(probs.cols()));
  }
  if (probs.rows() < 2) {
    throw DimensionError(
        "probability table must have at least 2 categories, got " +
        std::to_string(probs.rows()));
  }
  for (Eigen::Index i = 0; i < probs.rows(); ++i) {
    for (Eigen::Index j = 0; j < probs.cols(); ++j) {
      const double v = probs(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw NegativeEntryError("cell (" + std::to_string(i + 1) + ", " +
                                 std::to_string(j + 1) +
                                 ") must be a finite non-negative "
                                 "probability");
      }
    }
  }
  const double total = probs.sum();
  if (std::abs(total - 1.0) > tol) {
    throw DomainError("probabilities must sum to 1, got " +
                      std::to_string(total));
  }
  return ProbTable(probs);
}

BandSums band_sums(const SquareTable& table) {
  const int r = table.size();
  BandSums sums;
  sums.upper = Eigen::VectorXd::Zero(r - 1);
  sums.lower = Eigen::VectorXd::Zero(r - 1);
  for (int k = 1; k < r; ++k) {
    for (int i = 0; i + k < r; ++i) {
      sums.upper(k - 1) += table(i, i + k);
      sums.lower(k - 1) += table(i + k, i);
    }
  }
  return sums;
}

Eigen::MatrixXd pair_sums(const SquareTable& table) {
  return table.counts() + table.counts().transpose();
}

ProbTable to_probabilities(const SquareTable& table) {
  // Construction guarantees total() > 0, so the division is always defined.
  return ProbTable::from_probs(table.counts() / table.total());
}

Eigen::MatrixXd conditional_symmetric(const ProbTable& probs) {
  const int r = probs.size();
  Eigen::MatrixXd cond(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) {
        cond(i, j) = 0.5;
        continue;
      }
      const double pair = probs(i, j) + probs(j, i);
      cond(i, j) = pair > 0.0
                       ? probs(i, j) / pair
                       : std::numeric_limits<double>::quiet_NaN();
    }
  }
  return cond;
}

}  // namespace sqsym
