// Independent numerical oracles used by the test suites.
//
// Everything in this file is deliberately implemented without calling into
// the library under test (beyond constructing input tables), so that
// agreement between the two is meaningful evidence rather than tautology.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <vector>

#include "sqsym/divergence.hpp"
#include "sqsym/table.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

// r x r table of real-valued counts drawn uniformly from [lo, hi].  With the
// default bounds every cell is strictly positive, so all five models fit and
// the Wald statistics are defined.
Eigen::MatrixXd random_counts(std::mt19937& rng, int r, double lo = 1.0,
                              double hi = 200.0);

// Probability table with exact diagonals-parameter structure: a symmetric
// positive base psi_ij, scaled above the diagonal by a per-band factor d_k,
// then normalised.  Band odds of the result are d_k by construction.
// d_out, when non-null, receives the band factors that were used.
Eigen::MatrixXd random_dps_probs(std::mt19937& rng, int r,
                                 Eigen::VectorXd* d_out = nullptr);

// ---------------------------------------------------------------------------
// Scalar optimisation helpers
// ---------------------------------------------------------------------------

// Argmax of a unimodal function on [lo, hi] by ternary search.
double ternary_max(const std::function<double(double)>& f, double lo,
                   double hi, int iterations = 200);

// Root of a strictly increasing function on [lo, hi] by bisection.
// Requires f(lo) <= 0 <= f(hi).
double bisect_increasing(const std::function<double(double)>& f, double lo,
                         double hi, int iterations = 200);

// ---------------------------------------------------------------------------
// Divergence formulas, written independently from the library
// ---------------------------------------------------------------------------

// Kullback-Leibler divergence sum p log(p/q) with the usual conventions
// (0 log 0 = 0; positive p against zero q gives +infinity).
double kl_divergence(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q);

// Closed forms for the band-contrast transform G(d) = F(2d/(1+d)) - F(2/(1+d))
// worked out by hand for each family:
//   KL             log d
//   reverse KL     (d^2 - 1) / (2d)
//   Pearson        4(d - 1) / (1 + d)
//   power(lambda)  2^lambda (d^lambda - 1) / (lambda (1 + d)^lambda)
double closed_form_g(const sqsym::DivergenceFamily& family, double d);

// Solves F(2c) - F(2(1-c)) = a for the conditional share c in (0, 1).
// This is the inverse problem behind reading a band contrast back as a
// conditional probability; it is strictly increasing in c with value 0 at
// c = 1/2.
double conditional_share_for_contrast(const sqsym::DivergenceFamily& family,
                                      double a);

// ---------------------------------------------------------------------------
// Constrained optimisers
// ---------------------------------------------------------------------------

// Minimises `objective` over all non-negative tables pi that have the given
// pair sums (pi_ij + pi_ji = pair_sums_ij) and the given upper-triangle band
// sums (sum over j-i = k of pi_ij = upper_sums[k-1]).  Diagonal cells are
// pinned at half the pair sum.  The free coordinates are the upper-triangle
// cells of each band; mass is shuffled between same-band cells by repeated
// pairwise ternary searches, which converges to the global minimum for any
// convex objective because the pairwise directions span each band's
// constraint hyperplane.  The starting point spreads each band sum evenly
// (waterfilling against the pair-sum caps), so it does not presuppose the
// answer.
Eigen::MatrixXd minimize_on_band_polytope(
    const Eigen::MatrixXd& pair_sums, const Eigen::VectorXd& upper_sums,
    const std::function<double(const Eigen::MatrixXd&)>& objective,
    int sweeps = 400);

// Maximum-likelihood fits computed by cyclic coordinate ascent on the Poisson
// log likelihood sum(n log m - m), whose optimum automatically matches the
// sample total.  Parameters live on the log scale, every one-dimensional
// slice is unimodal, and each coordinate step is an exact ternary-search
// line maximisation, so no closed-form knowledge of the estimators leaks in.
Eigen::MatrixXd maximize_cs_likelihood(const sqsym::SquareTable& table);
Eigen::MatrixXd maximize_gs_likelihood(const sqsym::SquareTable& table);

// The objective both maximisers climb: sum over cells of n log m - m, with
// the convention 0 log 0 = 0.  Exposed so tests can compare candidate fits
// on the same scale the maximisers used.
double poisson_log_likelihood(const Eigen::MatrixXd& counts,
                              const Eigen::MatrixXd& fitted);

// ---------------------------------------------------------------------------
// Reference constants
// ---------------------------------------------------------------------------

// Textbook chi-square critical values: P(X^2_df > value) = tail.
struct CriticalValue {
  int df;
  double tail;
  double value;
};

// Ten entries covering df 1..30 at the 5% and 1% tails.
const std::vector<CriticalValue>& chi_square_critical_values();

// The running example used throughout the docs: a 4x4 survey
// cross-classification with n = 871.
Eigen::MatrixXd reference_table();

}  // namespace oracles
