#include "zplab/centralizer.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "zplab/rng.hpp"

namespace zplab {

namespace {

void require_same_exponent(const PExponent& a, const PExponent& b,
                           const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": exponent mismatch (" +
                                std::to_string(a.value()) + " vs " +
                                std::to_string(b.value()) + ")");
}

}  // namespace

TwistedVector operator+(const TwistedVector& a, const TwistedVector& b) {
  require_same_exponent(a.p, b.p, "TwistedVector+");
  return {a.x + b.x, a.y + b.y, a.p};
}

TwistedVector operator-(const TwistedVector& a, const TwistedVector& b) {
  require_same_exponent(a.p, b.p, "TwistedVector-");
  return {a.x - b.x, a.y - b.y, a.p};
}

TwistedVector operator*(double scalar, const TwistedVector& z) {
  return {scalar * z.x, scalar * z.y, z.p};
}

SeqVector omega_p(const SeqVector& x, const PExponent& p) {
  if (x.is_zero()) return {};
  double norm = lp_norm(x, p);
  std::vector<SeqVector::Entry> out;
  out.reserve(x.entries().size());
  for (const auto& e : x.entries())
    out.push_back({e.index, e.value * std::log(std::abs(e.value) / norm)});
  return SeqVector(std::move(out));
}

double quasi_norm(const TwistedVector& z) {
  return lp_norm(z.x - omega_p(z.y, z.p), z.p) + lp_norm(z.y, z.p);
}

double quasi_norm(const TwistedVector& z, const CentralizerSpec& omega) {
  require_same_exponent(z.p, omega.p, "quasi_norm");
  return quasi_norm(z);
}

double centralizer_defect(const SeqVector& a, const SeqVector& x,
                          const PExponent& p) {
  return lp_norm(omega_p(pointwise_mul(a, x), p) - pointwise_mul(a, omega_p(x, p)),
                 p);
}

namespace {

// Indicator of indices 1..k within 1..dim, plus singletons and the full
// multiplier; together with flat / geometric / unit test vectors these form
// the adversarial battery.
std::vector<SeqVector> battery_multipliers(std::size_t dim) {
  std::vector<SeqVector> out;
  std::vector<double> ones(dim, 1.0);
  out.push_back(SeqVector::dense(ones));
  for (std::size_t k = 1; k < dim; ++k) {
    std::vector<double> prefix(k, 1.0);
    out.push_back(SeqVector::dense(prefix));
  }
  for (std::size_t i = 1; i <= dim; ++i)
    out.push_back(SeqVector::unit(static_cast<std::int64_t>(i)));
  return out;
}

std::vector<SeqVector> battery_vectors(std::size_t dim) {
  std::vector<SeqVector> out;
  std::vector<double> flat(dim, 1.0), geo(dim);
  double g = 1.0;
  for (auto& v : geo) {
    v = g;
    g *= 0.5;
  }
  out.push_back(SeqVector::dense(flat));
  out.push_back(SeqVector::dense(geo));
  out.push_back(SeqVector::unit(1));
  return out;
}

}  // namespace

double estimate_centralizer_constant(const PExponent& p, std::size_t dim,
                                     std::size_t trials, std::uint64_t seed) {
  if (dim < 1 || trials < 1)
    throw std::invalid_argument("estimate_centralizer_constant: dim and trials must be >= 1");
  constexpr double kDegenerate = 1e-300;
  bool found = false;
  double best = 0.0;
  auto consider = [&](const SeqVector& a, const SeqVector& x) {
    double denom = sup_norm(a) * lp_norm(x, p);
    if (denom < kDegenerate) return;
    found = true;
    best = std::max(best, centralizer_defect(a, x, p) / denom);
  };
  for (const auto& a : battery_multipliers(dim))
    for (const auto& x : battery_vectors(dim)) consider(a, x);
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = stream_rng(seed, t);
    SeqVector x = random_normal_vector(rng, dim);
    SeqVector a = random_normal_vector(rng, dim);
    consider(a, x);
    // Random indicator multiplier against the same x.
    std::vector<SeqVector::Entry> ind;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 1; i <= dim; ++i)
      if (coin(rng)) ind.push_back({static_cast<std::int64_t>(i), 1.0});
    consider(SeqVector(std::move(ind)), x);
  }
  if (!found)
    throw std::runtime_error("estimate_centralizer_constant: all samples degenerate");
  return best;
}

double twisted_pairing(const TwistedVector& z, const TwistedVector& f) {
  return pairing(z.x, f.y) + pairing(z.y, f.x);
}

double quasi_triangle_defect(const PExponent& p, std::size_t dim,
                             std::size_t trials, std::uint64_t seed) {
  if (dim < 1 || trials < 1)
    throw std::invalid_argument("quasi_triangle_defect: dim and trials must be >= 1");
  constexpr double kDegenerate = 1e-300;
  bool found = false;
  double best = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = stream_rng(seed, t);
    TwistedVector z{random_normal_vector(rng, dim), random_normal_vector(rng, dim), p};
    TwistedVector w{random_normal_vector(rng, dim), random_normal_vector(rng, dim), p};
    double denom = quasi_norm(z) + quasi_norm(w);
    if (denom < kDegenerate) continue;
    found = true;
    best = std::max(best, quasi_norm(z + w) / denom);
  }
  if (!found)
    throw std::runtime_error("quasi_triangle_defect: all samples degenerate");
  return best;
}

}  // namespace zplab
