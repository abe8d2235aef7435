#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sqsym/errors.hpp"

namespace sqsym {

/// Square table of non-negative counts with optional category labels.
///
/// Rows index the first classification, columns the second; both share the
/// same ordered categories.  Entries are stored as doubles so smoothed
/// (non-integer) tables are first-class citizens.  Immutable once built.
class SquareTable {
 public:
  /// Validates and wraps a matrix of counts.  Throws NonSquareError,
  /// DimensionError (fewer than 2 categories), NegativeEntryError (a
  /// negative or non-finite cell), or EmptyTableError (all cells zero).
  /// Labels may be empty, in which case "1".."r" are generated; otherwise
  /// their number must match the dimension (DimensionError).
  static SquareTable from_counts(const Eigen::MatrixXd& counts,
                                 std::vector<std::string> labels = {});

  int size() const noexcept { return static_cast<int>(counts_.rows()); }
  double total() const noexcept { return counts_.sum(); }
  const Eigen::MatrixXd& counts() const noexcept { return counts_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  double operator()(int i, int j) const { return counts_(i, j); }

  /// Same table with `amount` added to every cell (flat smoothing).
  /// Throws DomainError for negative or non-finite amounts.
  SquareTable smoothed(double amount) const;

 private:
  SquareTable(Eigen::MatrixXd counts, std::vector<std::string> labels)
      : counts_(std::move(counts)), labels_(std::move(labels)) {}

  Eigen::MatrixXd counts_;
  std::vector<std::string> labels_;
};

/// Square matrix of cell probabilities: non-negative, summing to one.
class ProbTable {
 public:
  /// Validates a probability matrix.  Throws NonSquareError,
  /// DimensionError, NegativeEntryError, or DomainError when the entries
  /// do not sum to one within `tol`.
  static ProbTable from_probs(const Eigen::MatrixXd& probs,
                              double tol = 1e-12);

  int size() const noexcept { return static_cast<int>(probs_.rows()); }
  const Eigen::MatrixXd& probs() const noexcept { return probs_; }

  double operator()(int i, int j) const { return probs_(i, j); }

 private:
  explicit ProbTable(Eigen::MatrixXd probs) : probs_(std::move(probs)) {}

  Eigen::MatrixXd probs_;
};

/// Totals over the off-diagonal bands at each distance k = 1..r-1:
/// upper[k-1] sums cells (i, i+k), lower[k-1] sums cells (i+k, i).
struct BandSums {
  Eigen::VectorXd upper;
  Eigen::VectorXd lower;
};

BandSums band_sums(const SquareTable& table);

/// Symmetric matrix of pairwise totals t(i,j) = n(i,j) + n(j,i).
Eigen::MatrixXd pair_sums(const SquareTable& table);

/// Cell proportions n(i,j) / n.
ProbTable to_probabilities(const SquareTable& table);

/// Conditional probabilities c(i,j) = p(i,j) / (p(i,j) + p(j,i)).
/// Diagonal entries are 1/2 by convention.  An off-diagonal pair with
/// zero total mass has no conditional distribution; those entries are NaN
/// rather than an invented value.
Eigen::MatrixXd conditional_symmetric(const ProbTable& probs);

}  // namespace sqsym
