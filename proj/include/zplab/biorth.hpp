#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zplab/blocks.hpp"
#include "zplab/centralizer.hpp"
#include "zplab/seq.hpp"

namespace zplab {

enum class SpaceTag { Ellp, Zp };

/// Finite biorthogonal-system data: indexed families A_j of unit vectors and
/// A_j* of functionals with constant delta. For tag Ellp the elements live in
/// l_p (second coordinates zero); for tag Zp they are twisted pairs, the dual
/// side measured by the Z_q quasi-norm proxy.
struct BiorthSystem {
  struct Family {
    std::vector<TwistedVector> A;
    std::vector<TwistedVector> Astar;
  };

  PExponent p;
  double delta;
  SpaceTag tag;
  std::vector<Family> families;
};

/// Throws on structural violations: delta outside (0, 1/2), fewer than two
/// families, empty families, or nonzero second coordinates under tag Ellp.
void check_well_formed(const BiorthSystem& sys);

struct ValidationReport {
  struct FamilyMargins {
    // min over x in A_j of max over x* in A_j* of the pairing; must be
    // >= 1 - delta.
    double same_index_min;
    // max over k != j, x in A_j, x* in A_k* of the pairing; must be <= delta.
    double cross_max;
    double worst_element_norm_error;  // | ||x|| - 1 | over A_j
    double worst_dual_norm_excess;    // max(0, ||x*|| - 1) over A_j*
  };
  std::vector<FamilyMargins> per_family;
  bool same_index_ok;
  bool cross_ok;
  bool norms_ok;
  bool pass;
};

/// Checks the near-norming and small-cross-pairing conditions together with
/// the unit-sphere / dual-ball norm constraints.
ValidationReport validate_biorth(const BiorthSystem& sys);

/// eps * (ambient norm of z) + max over f in A1star of |pairing(z, f)|.
/// Ambient norm and pairing follow the tag: l_p norm and the scalar bracket
/// for Ellp, the quasi-norm and the twisted pairing for Zp.
double renorm(const TwistedVector& z, double eps,
              const std::vector<TwistedVector>& A1star, SpaceTag tag);

struct DistortionResult {
  double ratio;
  double bound;  // (1 + eps - delta) / (eps + delta)
  std::size_t witness_numerator;    // index into A_1
  std::size_t witness_denominator;  // index into A_2
  bool holds;                       // ratio >= bound - 1e-9
};

/// Ratio of renorm values between the distinguished family and another one,
/// against the (1+eps-delta)/(eps+delta) lower bound. The distinguished
/// family defaults to the first.
DistortionResult distortion_lower_bound(const BiorthSystem& sys, double eps,
                                        std::size_t distinguished = 0,
                                        std::size_t other = 1);

/// Theorem-style lift to the twisted space: A_j -> {(x,0)}, A_j* ->
/// {(Omega_q(b), b)} with q the dual exponent.
BiorthSystem lift_system(const BiorthSystem& sys);

/// Finite stand-in for an infinite-dimensional subspace, plus search budget.
struct InevitabilityProbe {
  std::vector<SeqVector> subspace_basis;
  double tolerance = 1e-6;
  std::size_t search_budget = 1000;
  std::uint64_t seed = 0;
};

/// Best-found min over unit vectors u of span(basis) of min over a in A_j of
/// ||u - a||_p; seeded random restarts plus local descent on the coefficient
/// sphere. An upper bound on the true distance, nonincreasing in budget for a
/// fixed seed.
double inevitability_proxy(const std::vector<SeqVector>& family,
                           const InevitabilityProbe& probe, const PExponent& p);

struct ChainCheckResult {
  double value;               // quasi_norm(sum lambda_n w_n - (a, 0))
  double intermediate_bound;  // sum |lambda_n| eps/2^n + ||u - a||_p
  double two_eps;
  bool holds;  // value <= 2 eps (up to 1e-9) whenever ||u - a||_p <= eps
};

/// Numerical replay of the perturbation chain: given twisted blocks w_n
/// within eps/2^n of (u_n, 0), coefficients with ||lambda||_p <= 1 and a unit
/// target a with ||sum lambda_n u_n - a||_p <= eps, the assembled element
/// stays within 2 eps of (a, 0).
ChainCheckResult perturbation_chain_check(
    const std::vector<TwistedVector>& w_blocks, const BlockSequence& u_blocks,
    const SeqVector& a, const std::vector<double>& coeffs, double eps);

/// Synthetic system: families of disjointly supported unit vectors with exact
/// norming functionals carrying controlled cross-terms of size <= delta.
BiorthSystem synth_system(const PExponent& p, double delta,
                          std::size_t family_count, std::size_t family_size,
                          std::size_t width, std::uint64_t seed);

}  // namespace zplab
