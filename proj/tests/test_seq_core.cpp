#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zplab/rng.hpp"
#include "zplab/seq.hpp"

using namespace zplab;

TEST_CASE("lp_norm basic values") {
  PExponent p2(2.0);
  CHECK(lp_norm(SeqVector::unit(5), p2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lp_norm(SeqVector::dense({1, 1, 1, 1}), p2) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lp_norm(SeqVector::dense({3, 4}), p2) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(lp_norm(SeqVector{}, p2) == 0.0);
}

TEST_CASE("sup_norm basic values") {
  CHECK(sup_norm(SeqVector::dense({1, -2, 0.5})) == 2.0);
  CHECK(sup_norm(SeqVector{}) == 0.0);
  CHECK(sup_norm(SeqVector::unit(1)) == 1.0);
}

TEST_CASE("pairing basic values") {
  CHECK(pairing(SeqVector::unit(1), SeqVector::unit(1)) == 1.0);
  CHECK(pairing(SeqVector::unit(1), SeqVector::unit(2)) == 0.0);
  CHECK(pairing(SeqVector::dense({1, 2}), SeqVector::dense({3, -1})) == 1.0);
}

TEST_CASE("pointwise_mul") {
  SeqVector x = SeqVector::dense({3, 5});
  SeqVector ones = SeqVector::dense({1, 1});
  CHECK(pointwise_mul(ones, x) == x);
  CHECK(pointwise_mul(SeqVector::unit(1), SeqVector::unit(2)).is_zero());
  SeqVector prod = pointwise_mul(SeqVector::dense({2, 0}), SeqVector::dense({3, 5}));
  CHECK(prod == 6.0 * SeqVector::unit(1));
}

TEST_CASE("are_disjoint") {
  std::vector<SeqVector> a{SeqVector::unit(1), SeqVector::unit(2)};
  CHECK(are_disjoint(a));
  std::vector<SeqVector> b{SeqVector::unit(1),
                           SeqVector::unit(1) + SeqVector::unit(2)};
  CHECK(!are_disjoint(b));
  CHECK(are_disjoint(std::vector<SeqVector>{}));
}

TEST_CASE("canonical form drops zeros and rejects bad indices") {
  SeqVector x({{3, 0.0}, {1, 2.0}});
  CHECK(x.support_size() == 1);
  CHECK(x.at(1) == 2.0);
  CHECK(x.at(3) == 0.0);
  CHECK_THROWS_AS(SeqVector({{0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SeqVector({{2, 1.0}, {2, 3.0}}), std::invalid_argument);
}

TEST_CASE("PExponent validation and dual") {
  CHECK_THROWS_AS(PExponent(1.0), std::invalid_argument);
  CHECK_THROWS_AS(PExponent(0.5), std::invalid_argument);
  PExponent p(1.5);
  CHECK(p.dual() == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("parse_seq grammar") {
  SeqVector x = parse_seq("1:1;3:-2.5");
  CHECK(x.at(1) == 1.0);
  CHECK(x.at(3) == -2.5);
  CHECK(parse_seq("").is_zero());
  CHECK_THROWS_AS(parse_seq("1;2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq("1:abc"), std::invalid_argument);
}

TEST_CASE("norm and pairing properties on random vectors") {
  for (double pv : {1.5, 2.0, 3.0}) {
    PExponent p(pv);
    PExponent q = p.dual_exponent();
    for (std::uint64_t t = 0; t < 50; ++t) {
      auto rng = stream_rng(7, t);
      SeqVector x = random_normal_vector(rng, 16);
      SeqVector b = random_normal_vector(rng, 16);
      std::normal_distribution<double> normal;
      double lambda = normal(rng);

      // absolute homogeneity
      CHECK(lp_norm(lambda * x, p) ==
            doctest::Approx(std::abs(lambda) * lp_norm(x, p)).epsilon(1e-12));
      // triangle inequality
      CHECK(lp_norm(x + b, p) <= lp_norm(x, p) + lp_norm(b, p) + 1e-12);
      // Hoelder
      CHECK(std::abs(pairing(x, b)) <= lp_norm(x, p) * lp_norm(b, q) + 1e-12);
      // bilinearity
      SeqVector x2 = random_normal_vector(rng, 16);
      CHECK(pairing(lambda * x + x2, b) ==
            doctest::Approx(lambda * pairing(x, b) + pairing(x2, b))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("disjoint sums add p-th powers") {
  for (double pv : {1.5, 2.0, 3.0}) {
    PExponent p(pv);
    for (std::uint64_t t = 0; t < 20; ++t) {
      auto rng = stream_rng(11, t);
      SeqVector sum;
      double power_sum = 0.0;
      for (int j = 0; j < 5; ++j) {
        SeqVector u = random_normal_vector(rng, 4, 1 + 4 * j);
        sum = sum + u;
        power_sum += std::pow(lp_norm(u, p), pv);
      }
      CHECK(std::pow(lp_norm(sum, p), pv) ==
            doctest::Approx(power_sum).epsilon(1e-12));
    }
  }
}
