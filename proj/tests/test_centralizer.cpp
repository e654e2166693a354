#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zplab/centralizer.hpp"
#include "zplab/rng.hpp"

using namespace zplab;

namespace {
const PExponent p2(2.0);
}

TEST_CASE("omega_p pointwise values") {
  CHECK(omega_p(SeqVector{}, p2).is_zero());
  // a single nonzero entry has modulus equal to the norm, so log 1 = 0
  CHECK(omega_p(SeqVector::dense({1, 0, 0}), p2).is_zero());
  CHECK(omega_p(SeqVector::unit(3), p2).is_zero());
  SeqVector w = omega_p(SeqVector::dense({1, 1, 1, 1}), p2);
  REQUIRE(w.support_size() == 4);
  for (const auto& e : w.entries())
    CHECK(e.value == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("omega_p homogeneity and support preservation") {
  for (double pv : {1.5, 2.0, 3.0}) {
    PExponent p(pv);
    for (std::uint64_t t = 0; t < 40; ++t) {
      auto rng = stream_rng(3, t);
      SeqVector x = random_normal_vector(rng, 12);
      std::normal_distribution<double> normal;
      double lambda = normal(rng);
      SeqVector lhs = omega_p(lambda * x, p);
      SeqVector rhs = lambda * omega_p(x, p);
      CHECK(lp_norm(lhs - rhs, p) <= 1e-10 * (1.0 + lp_norm(rhs, p)));
      SeqVector w = omega_p(x, p);
      for (const auto& e : w.entries()) CHECK(x.at(e.index) != 0.0);
    }
    // lambda = 0 and lambda = 3 exactly
    auto rng = stream_rng(3, 1000);
    SeqVector x = random_normal_vector(rng, 8);
    CHECK(omega_p(0.0 * x, p).is_zero());
    CHECK(lp_norm(omega_p(3.0 * x, p) - 3.0 * omega_p(x, p), p) <=
          1e-10 * lp_norm(omega_p(x, p), p));
  }
}

TEST_CASE("quasi_norm identities") {
  SeqVector x = SeqVector::dense({3, 4});
  CHECK(quasi_norm({x, {}, p2}) == doctest::Approx(5.0).epsilon(1e-14));
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = stream_rng(5, t);
    SeqVector y = random_normal_vector(rng, 10);
    CHECK(quasi_norm({omega_p(y, p2), y, p2}) ==
          doctest::Approx(lp_norm(y, p2)).epsilon(1e-12));
  }
  // (e_1, e_2): Omega_2(e_2) = 0 so the quasi-norm splits
  CHECK(quasi_norm({SeqVector::unit(1), SeqVector::unit(2), p2}) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(quasi_norm({{}, {}, p2}) == 0.0);
}

TEST_CASE("quasi_norm checks the centralizer exponent") {
  TwistedVector z{SeqVector::unit(1), {}, p2};
  CentralizerSpec mismatched{CentralizerKind::KaltonPeck, PExponent(3.0)};
  CHECK_THROWS_AS(quasi_norm(z, mismatched), std::invalid_argument);
  CentralizerSpec matching{CentralizerKind::KaltonPeck, p2};
  CHECK(quasi_norm(z, matching) == doctest::Approx(1.0));
}

TEST_CASE("centralizer defect values and closed form") {
  SeqVector x = SeqVector::dense({1, 1});
  SeqVector ones = SeqVector::dense({1, 1});
  CHECK(centralizer_defect(ones, x, p2) == 0.0);
  CHECK(centralizer_defect(SeqVector::unit(1), x, p2) ==
        doctest::Approx(std::log(2.0) / 2.0).epsilon(1e-12));

  // indicator multiplier closed form: ||1_A x|| log(||x|| / ||1_A x||)
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = stream_rng(9, t);
    SeqVector xx = random_normal_vector(rng, 10);
    std::vector<SeqVector::Entry> ind;
    std::bernoulli_distribution coin(0.5);
    for (std::int64_t i = 1; i <= 10; ++i)
      if (coin(rng)) ind.push_back({i, 1.0});
    SeqVector a(std::move(ind));
    SeqVector masked = pointwise_mul(a, xx);
    if (masked.is_zero()) continue;
    double expected =
        lp_norm(masked, p2) * std::log(lp_norm(xx, p2) / lp_norm(masked, p2));
    CHECK(centralizer_defect(a, xx, p2) ==
          doctest::Approx(expected).epsilon(1e-10));
    // homogeneity of the defect in x
    std::normal_distribution<double> normal;
    double lambda = normal(rng);
    CHECK(centralizer_defect(a, lambda * xx, p2) ==
          doctest::Approx(std::abs(lambda) * centralizer_defect(a, xx, p2))
              .epsilon(1e-12));
  }
}

TEST_CASE("estimate_centralizer_constant finds the indicator witness") {
  double witness = std::log(2.0) / (2.0 * std::sqrt(2.0));
  CHECK(estimate_centralizer_constant(p2, 2, 10, 42) >= witness - 1e-10);
  CHECK_THROWS_AS(estimate_centralizer_constant(p2, 0, 10, 42),
                  std::invalid_argument);
  // nondecreasing in trials for a fixed seed
  double a = estimate_centralizer_constant(p2, 6, 20, 42);
  double b = estimate_centralizer_constant(p2, 6, 200, 42);
  CHECK(b >= a);
}

TEST_CASE("twisted pairing") {
  TwistedVector z{SeqVector::unit(1), SeqVector::unit(2), p2};
  TwistedVector f{SeqVector::unit(2), SeqVector::unit(1), p2};
  CHECK(twisted_pairing(z, f) == 2.0);
  CHECK(twisted_pairing({{}, {}, p2}, f) == 0.0);
  // (x, 0) against (a, b) only sees <x, b>
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = stream_rng(13, t);
    SeqVector x = random_normal_vector(rng, 8);
    SeqVector a = random_normal_vector(rng, 8);
    SeqVector b = random_normal_vector(rng, 8);
    CHECK(twisted_pairing({x, {}, p2}, {a, b, p2}) ==
          doctest::Approx(pairing(x, b)).epsilon(1e-12));
    // bilinearity in the first slot
    std::normal_distribution<double> normal;
    double lambda = normal(rng);
    TwistedVector z1{x, a, p2}, z2{b, x, p2}, ff{a, b, p2};
    CHECK(twisted_pairing(lambda * z1 + z2, ff) ==
          doctest::Approx(lambda * twisted_pairing(z1, ff) +
                          twisted_pairing(z2, ff))
              .epsilon(1e-12));
  }
}

TEST_CASE("quasi triangle defect") {
  // identical summands give exactly 1 by homogeneity
  TwistedVector z{SeqVector::dense({1, 2}), SeqVector::dense({0, 0, 1}), p2};
  CHECK(quasi_norm(z + z) == doctest::Approx(2.0 * quasi_norm(z)).epsilon(1e-12));
  // disjoint first-coordinate pairs reduce to the l_p triangle inequality
  TwistedVector u{SeqVector::unit(1), {}, p2};
  TwistedVector v{SeqVector::unit(2), {}, p2};
  CHECK(quasi_norm(u + v) <= quasi_norm(u) + quasi_norm(v) + 1e-12);
  double d = quasi_triangle_defect(p2, 16, 400, 7);
  CHECK(d > 0.0);
  CHECK(std::isfinite(d));
}
