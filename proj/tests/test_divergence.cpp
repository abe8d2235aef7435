#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sqsym/divergence.hpp"
#include "sqsym/models.hpp"
#include "sqsym/table.hpp"

using sqsym::DivergenceFamily;
using sqsym::ProbTable;
using sqsym::SquareTable;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<DivergenceFamily> all_families() {
  return {DivergenceFamily::kl(), DivergenceFamily::reverse_kl(),
          DivergenceFamily::pearson(), DivergenceFamily::power(-2.0),
          DivergenceFamily::power(0.5), DivergenceFamily::power(3.0)};
}

}  // namespace

TEST_SUITE("divergence") {

TEST_CASE("family construction and names") {
  CHECK(DivergenceFamily::kl().name() == "kl");
  CHECK(DivergenceFamily::reverse_kl().name() == "rkl");
  CHECK(DivergenceFamily::pearson().name() == "pearson");
  CHECK(DivergenceFamily::power(3.0).name() == "power(3)");
  CHECK(DivergenceFamily::power(0.5).name() == "power(0.5)");
  CHECK(DivergenceFamily::power(2.0).lambda() == 2.0);

  CHECK_THROWS_AS(DivergenceFamily::power(0.0), sqsym::DomainError);
  CHECK_THROWS_AS(DivergenceFamily::power(-1.0), sqsym::DomainError);
  CHECK_THROWS_AS(DivergenceFamily::power(kInf), sqsym::DomainError);
  CHECK_THROWS_AS(DivergenceFamily::power(kNaN), sqsym::DomainError);
}

TEST_CASE("family_from_name parses the documented spellings") {
  CHECK(sqsym::family_from_name("kl") == DivergenceFamily::kl());
  CHECK(sqsym::family_from_name("RKL") == DivergenceFamily::reverse_kl());
  CHECK(sqsym::family_from_name("Pearson") == DivergenceFamily::pearson());
  CHECK(sqsym::family_from_name("power", 3.0) == DivergenceFamily::power(3.0));
  CHECK_THROWS_AS(sqsym::family_from_name("hellinger"), sqsym::DomainError);
}

TEST_CASE("f_eval hand values and limits") {
  CHECK(sqsym::f_eval(DivergenceFamily::kl(), 2.0) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(sqsym::f_eval(DivergenceFamily::reverse_kl(), 2.0) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  CHECK(sqsym::f_eval(DivergenceFamily::pearson(), 3.0) == 4.0);
  CHECK(sqsym::f_eval(DivergenceFamily::power(3.0), 2.0) ==
        doctest::Approx(14.0 / 12.0).epsilon(1e-15));

  // f(1) = 0 pins the divergence's zero point for every member.
  for (const auto& family : all_families())
    CHECK(sqsym::f_eval(family, 1.0) == 0.0);

  CHECK(sqsym::f_eval(DivergenceFamily::kl(), 0.0) == 0.0);
  CHECK(sqsym::f_eval(DivergenceFamily::reverse_kl(), 0.0) == kInf);
  CHECK(sqsym::f_eval(DivergenceFamily::pearson(), 0.0) == 1.0);
  CHECK(sqsym::f_eval(DivergenceFamily::power(0.5), 0.0) == 0.0);
  CHECK(sqsym::f_eval(DivergenceFamily::power(-2.0), 0.0) == kInf);

  CHECK_THROWS_AS(sqsym::f_eval(DivergenceFamily::kl(), -0.1),
                  sqsym::DomainError);
}

TEST_CASE("big_f hand values and limits") {
  CHECK(sqsym::big_f(DivergenceFamily::kl(), 1.0) == 1.0);
  CHECK(sqsym::big_f(DivergenceFamily::kl(), std::exp(1.0)) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sqsym::big_f(DivergenceFamily::reverse_kl(), 2.0) == -0.5);
  CHECK(sqsym::big_f(DivergenceFamily::pearson(), 3.0) == 4.0);
  CHECK(sqsym::big_f(DivergenceFamily::power(3.0), 2.0) ==
        doctest::Approx(31.0 / 12.0).epsilon(1e-15));

  CHECK(sqsym::big_f(DivergenceFamily::kl(), 0.0) == -kInf);
  CHECK(sqsym::big_f(DivergenceFamily::reverse_kl(), 0.0) == -kInf);
  CHECK(sqsym::big_f(DivergenceFamily::pearson(), 0.0) == -2.0);
  CHECK(sqsym::big_f(DivergenceFamily::power(3.0), 0.0) ==
        doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  // For negative orders the derivative falls without bound as t drops to
  // zero, like the two logarithmic families.
  CHECK(sqsym::big_f(DivergenceFamily::power(-2.0), 0.0) == -kInf);

  CHECK_THROWS_AS(sqsym::big_f(DivergenceFamily::pearson(), -1.0),
                  sqsym::DomainError);
}

TEST_CASE("big_f_inv round-trips big_f") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> point(0.01, 2.0);
  for (const auto& family : all_families()) {
    for (int rep = 0; rep < 200; ++rep) {
      const double t = point(rng);
      const double y = sqsym::big_f(family, t);
      CHECK(sqsym::big_f_inv(family, y) ==
            doctest::Approx(t).epsilon(1e-12));
    }
  }

  // Reverse KL derivative is always negative; non-negative y is out of range.
  CHECK_THROWS_AS(sqsym::big_f_inv(DivergenceFamily::reverse_kl(), 0.5),
                  sqsym::RangeError);
  // Power(3): F < 0 needs t^3 > 0; pushing y below the infimum must throw.
  CHECK_THROWS_AS(sqsym::big_f_inv(DivergenceFamily::power(3.0), -1.0),
                  sqsym::RangeError);
  // Pearson's inverse is affine and defined for every real input.
  CHECK(sqsym::big_f_inv(DivergenceFamily::pearson(), -6.0) == -2.0);
  CHECK(sqsym::big_f_inv(DivergenceFamily::pearson(), 0.0) == 1.0);
}

TEST_CASE("g_transform matches the closed forms") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> odds(0.05, 20.0);
  for (const auto& family : all_families()) {
    CHECK(sqsym::g_transform(family, 1.0) == 0.0);
    for (int rep = 0; rep < 200; ++rep) {
      const double d = odds(rng);
      CHECK(sqsym::g_transform(family, d) ==
            doctest::Approx(oracles::closed_form_g(family, d))
                .epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(sqsym::g_transform(DivergenceFamily::kl(), 0.0),
                  sqsym::DomainError);
  CHECK_THROWS_AS(sqsym::g_transform(DivergenceFamily::kl(), -2.0),
                  sqsym::DomainError);
}

TEST_CASE("g_transform is strictly increasing") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> odds(0.02, 50.0);
  for (const auto& family : all_families()) {
    for (int rep = 0; rep < 500; ++rep) {
      double a = odds(rng), b = odds(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      CHECK(sqsym::g_transform(family, a) < sqsym::g_transform(family, b));
    }
  }
}

TEST_CASE("g_inverse recovers the odds") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> odds(0.05, 20.0);
  for (const auto& family : all_families()) {
    CHECK(sqsym::g_inverse(family, 0.0) == 1.0);
    for (int rep = 0; rep < 100; ++rep) {
      const double d = odds(rng);
      const double a = sqsym::g_transform(family, d);
      CHECK(sqsym::g_inverse(family, a) ==
            doctest::Approx(d).epsilon(1e-10));
    }
  }
  CHECK(sqsym::g_inverse(DivergenceFamily::kl(), std::log(2.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("g_inverse rejects unreachable contrasts") {
  // The Pearson contrast lives in (-4, 4), the power(3) contrast in
  // (-8/3, 8/3); asking for more must throw rather than fabricate.
  CHECK_THROWS_AS(sqsym::g_inverse(DivergenceFamily::pearson(), 4.5),
                  sqsym::RangeError);
  CHECK_THROWS_AS(sqsym::g_inverse(DivergenceFamily::pearson(), -4.5),
                  sqsym::RangeError);
  CHECK_THROWS_AS(sqsym::g_inverse(DivergenceFamily::power(3.0), 3.0),
                  sqsym::RangeError);
  CHECK_THROWS_AS(sqsym::g_inverse(DivergenceFamily::kl(), kNaN),
                  sqsym::RangeError);
  // Near-boundary values inside the range still resolve.
  CHECK(sqsym::g_transform(DivergenceFamily::pearson(),
                           sqsym::g_inverse(DivergenceFamily::pearson(),
                                            3.9)) ==
        doctest::Approx(3.9).epsilon(1e-10));
}

TEST_CASE("dps_parameter frozen survey values") {
  const auto table = SquareTable::from_counts(oracles::reference_table());
  const Eigen::VectorXd odds = *sqsym::fit_dps(table).dps_odds;

  const Eigen::VectorXd kl =
      sqsym::dps_parameters(DivergenceFamily::kl(), odds);
  const Eigen::VectorXd rkl =
      sqsym::dps_parameters(DivergenceFamily::reverse_kl(), odds);
  const Eigen::VectorXd pearson =
      sqsym::dps_parameters(DivergenceFamily::pearson(), odds);
  const Eigen::VectorXd pd3 =
      sqsym::dps_parameters(DivergenceFamily::power(3.0), odds);

  // Frozen from an independent numerical-python run.
  CHECK(kl(0) == doctest::Approx(0.1532846715).epsilon(1e-9));
  CHECK(kl(1) == doctest::Approx(0.0518867925).epsilon(1e-9));
  CHECK(kl(2) == doctest::Approx(0.0551181102).epsilon(1e-9));
  CHECK(rkl(0) == doctest::Approx(6.3705248523).epsilon(1e-9));
  CHECK(rkl(1) == doctest::Approx(19.2208404803).epsilon(1e-9));
  CHECK(rkl(2) == doctest::Approx(18.0877390326).epsilon(1e-9));
  CHECK(pearson(0) == doctest::Approx(-0.7341772152).epsilon(1e-9));
  CHECK(pearson(1) == doctest::Approx(-0.9013452915).epsilon(1e-9));
  CHECK(pearson(2) == doctest::Approx(-0.8955223881).epsilon(1e-9));
  CHECK(pd3(0) == doctest::Approx(-0.6495662615).epsilon(1e-9));
  CHECK(pd3(1) == doctest::Approx(-0.8590774554).epsilon(1e-9));
  CHECK(pd3(2) == doctest::Approx(-0.8511851524).epsilon(1e-9));
}

TEST_CASE("dps_parameter is a fixed rescaling of the contrast") {
  // Each family's reported parameter is an affine-free transform of the
  // band contrast G(d): KL exponentiates it, reverse KL scales by -2,
  // Pearson divides by 4, power(lambda) scales by lambda / 2^lambda.
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> odds(0.05, 20.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double d = odds(rng);
    CHECK(sqsym::dps_parameter(DivergenceFamily::kl(), d) ==
          doctest::Approx(std::exp(oracles::closed_form_g(
              DivergenceFamily::kl(), d))).epsilon(1e-12));
    CHECK(sqsym::dps_parameter(DivergenceFamily::reverse_kl(), d) ==
          doctest::Approx(-2.0 * oracles::closed_form_g(
              DivergenceFamily::reverse_kl(), d)).epsilon(1e-12));
    CHECK(sqsym::dps_parameter(DivergenceFamily::pearson(), d) ==
          doctest::Approx(oracles::closed_form_g(DivergenceFamily::pearson(),
                                                 d) /
                          4.0).epsilon(1e-12));
    for (const double lambda : {-2.0, 0.5, 3.0}) {
      const auto family = DivergenceFamily::power(lambda);
      CHECK(sqsym::dps_parameter(family, d) ==
            doctest::Approx(lambda * oracles::closed_form_g(family, d) /
                            std::pow(2.0, lambda)).epsilon(1e-12));
    }
  }
}

TEST_CASE("dps_parameter vanishes at unit odds except for KL") {
  CHECK(sqsym::dps_parameter(DivergenceFamily::kl(), 1.0) == 1.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::reverse_kl(), 1.0) == 0.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::pearson(), 1.0) == 0.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::power(3.0), 1.0) == 0.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::power(-2.0), 1.0) == 0.0);
}

TEST_CASE("dps_parameter boundary odds take limit values") {
  CHECK(sqsym::dps_parameter(DivergenceFamily::kl(), 0.0) == 0.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::kl(), kInf) == kInf);
  CHECK(sqsym::dps_parameter(DivergenceFamily::reverse_kl(), 0.0) == kInf);
  CHECK(sqsym::dps_parameter(DivergenceFamily::reverse_kl(), kInf) == -kInf);
  CHECK(sqsym::dps_parameter(DivergenceFamily::pearson(), 0.0) == -1.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::pearson(), kInf) == 1.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::power(3.0), 0.0) == -1.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::power(3.0), kInf) == 1.0);
  CHECK(sqsym::dps_parameter(DivergenceFamily::power(-2.0), 0.0) == kInf);
  CHECK(sqsym::dps_parameter(DivergenceFamily::power(-2.0), kInf) == -kInf);

  CHECK(std::isnan(sqsym::dps_parameter(DivergenceFamily::kl(), kNaN)));
  CHECK_THROWS_AS(sqsym::dps_parameter(DivergenceFamily::kl(), -0.5),
                  sqsym::DomainError);
}

TEST_CASE("f_divergence hand values") {
  Eigen::MatrixXd p(2, 2), q(2, 2);
  p << 0.6, 0.4, 0.0, 0.0;
  q << 0.5, 0.5, 0.0, 0.0;
  const auto pt = ProbTable::from_probs(p);
  const auto qt = ProbTable::from_probs(q);

  CHECK(sqsym::f_divergence(DivergenceFamily::kl(), pt, qt) ==
        doctest::Approx(0.020135513550688863).epsilon(1e-14));
  CHECK(sqsym::f_divergence(DivergenceFamily::pearson(), pt, qt) ==
        doctest::Approx(0.04).epsilon(1e-14));
  CHECK(sqsym::f_divergence(DivergenceFamily::kl(), pt, pt) == 0.0);
}

TEST_CASE("f_divergence zero-cell conventions") {
  Eigen::MatrixXd p(2, 2), q(2, 2);
  p << 0.5, 0.5, 0.0, 0.0;     // no mass in cell (1,0)
  q << 0.25, 0.25, 0.5, 0.0;   // reference mass there
  const auto pt = ProbTable::from_probs(p);
  const auto qt = ProbTable::from_probs(q);

  // probs vanishing against a positive reference: reverse KL blows up,
  // KL and Pearson stay finite.
  CHECK(sqsym::f_divergence(DivergenceFamily::reverse_kl(), pt, qt) == kInf);
  CHECK(std::isfinite(sqsym::f_divergence(DivergenceFamily::kl(), pt, qt)));

  // positive probs against a vanishing reference: KL and Pearson blow up,
  // reverse KL contributes nothing (f grows sublinearly).
  CHECK(sqsym::f_divergence(DivergenceFamily::kl(), qt, pt) == kInf);
  CHECK(sqsym::f_divergence(DivergenceFamily::pearson(), qt, pt) == kInf);
  CHECK(std::isfinite(
      sqsym::f_divergence(DivergenceFamily::reverse_kl(), qt, pt)));

  Eigen::MatrixXd wide = Eigen::MatrixXd::Constant(3, 3, 1.0 / 9.0);
  CHECK_THROWS_AS(sqsym::f_divergence(DivergenceFamily::kl(), pt,
                                      ProbTable::from_probs(wide)),
                  sqsym::DimensionError);
}

TEST_CASE("f_divergence is non-negative and zero only at equality") {
  std::mt19937 rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    const int r = 3 + rep % 3;
    const auto pt = sqsym::to_probabilities(
        SquareTable::from_counts(oracles::random_counts(rng, r)));
    const auto qt = sqsym::to_probabilities(
        SquareTable::from_counts(oracles::random_counts(rng, r)));
    for (const auto& family : all_families()) {
      CHECK(sqsym::f_divergence(family, pt, qt) > 0.0);
      CHECK(sqsym::f_divergence(family, pt, pt) == 0.0);
    }
  }
}

TEST_CASE("band_contrasts are antisymmetric with zero diagonal") {
  std::mt19937 rng(47);
  const auto probs = sqsym::to_probabilities(
      SquareTable::from_counts(oracles::random_counts(rng, 4)));
  for (const auto& family : all_families()) {
    const Eigen::MatrixXd c = sqsym::band_contrasts(family, probs);
    for (int i = 0; i < 4; ++i) {
      CHECK(c(i, i) == 0.0);
      for (int j = 0; j < 4; ++j)
        CHECK(c(i, j) == doctest::Approx(-c(j, i)).epsilon(1e-13));
    }
  }
}

TEST_CASE("band_contrasts of a symmetric table vanish") {
  Eigen::MatrixXd counts(3, 3);
  counts << 5, 2, 7, 2, 1, 3, 7, 3, 9;
  const auto probs =
      sqsym::to_probabilities(SquareTable::from_counts(counts));
  for (const auto& family : all_families()) {
    const Eigen::MatrixXd c = sqsym::band_contrasts(family, probs);
    CHECK(c.cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("band_contrasts of a fitted table equal G of the odds") {
  const auto table = SquareTable::from_counts(oracles::reference_table());
  const auto fit = sqsym::fit_dps(table);
  const auto probs = sqsym::to_probabilities(
      SquareTable::from_counts(fit.fitted));
  for (const auto& family : all_families()) {
    const Eigen::MatrixXd c = sqsym::band_contrasts(family, probs);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const double expected =
            oracles::closed_form_g(family, (*fit.dps_odds)(j - i - 1));
        CHECK(c(i, j) == doctest::Approx(expected).epsilon(1e-10));
      }
  }
}

TEST_CASE("band_contrasts mark empty pairs NaN") {
  Eigen::MatrixXd probs(3, 3);
  probs << 0.2, 0.3, 0.0,  //
      0.1, 0.2, 0.0,       //
      0.0, 0.0, 0.2;
  const Eigen::MatrixXd c = sqsym::band_contrasts(
      DivergenceFamily::kl(), ProbTable::from_probs(probs));
  CHECK(std::isnan(c(0, 2)));
  CHECK(std::isnan(c(2, 0)));
  CHECK(std::isfinite(c(0, 1)));
}

}  // TEST_SUITE
