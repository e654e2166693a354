#pragma once

#include <cstdint>

#include "zplab/seq.hpp"

namespace zplab {

/// Element (x, y) of a twisted-sum section at exponent p.
struct TwistedVector {
  SeqVector x;
  SeqVector y;
  PExponent p;

  friend TwistedVector operator+(const TwistedVector& a, const TwistedVector& b);
  friend TwistedVector operator-(const TwistedVector& a, const TwistedVector& b);
  friend TwistedVector operator*(double scalar, const TwistedVector& z);
};

enum class CentralizerKind { KaltonPeck };

struct CentralizerSpec {
  CentralizerKind kind = CentralizerKind::KaltonPeck;
  PExponent p;
};

/// Kalton-Peck map: (Omega_p x)_i = x_i * log(|x_i| / ||x||_p), natural log,
/// with 0 * log 0 = 0 and Omega_p(0) = 0.
SeqVector omega_p(const SeqVector& x, const PExponent& p);

/// ||x - Omega_p(y)||_p + ||y||_p.
double quasi_norm(const TwistedVector& z);
double quasi_norm(const TwistedVector& z, const CentralizerSpec& omega);

/// ||Omega_p(ax) - a Omega_p(x)||_p.
double centralizer_defect(const SeqVector& a, const SeqVector& x,
                          const PExponent& p);

/// Empirical lower estimate of the centralizer constant: the max of
/// defect(a,x) / (||a||_inf ||x||_p) over seeded random samples plus a fixed
/// adversarial battery (indicator multipliers, geometric decay, flat
/// vectors). Deterministic given the seed; throws if every sample has a
/// degenerate denominator.
double estimate_centralizer_constant(const PExponent& p, std::size_t dim,
                                     std::size_t trials, std::uint64_t seed);

/// <(x,y),(a,b)> = <x,b> + <y,a>, reading f = (a,b).
double twisted_pairing(const TwistedVector& z, const TwistedVector& f);

/// Max of quasi_norm(z+w) / (quasi_norm(z)+quasi_norm(w)) over seeded random
/// pairs; any value > 1 certifies the quasi-norm is not a norm.
double quasi_triangle_defect(const PExponent& p, std::size_t dim,
                             std::size_t trials, std::uint64_t seed);

}  // namespace zplab
