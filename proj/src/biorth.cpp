#include "zplab/biorth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zplab/rng.hpp"

namespace zplab {

namespace {

double element_norm(const TwistedVector& z, SpaceTag tag) {
  return tag == SpaceTag::Ellp ? lp_norm(z.x, z.p) : quasi_norm(z);
}

double system_pairing(const TwistedVector& z, const TwistedVector& f,
                      SpaceTag tag) {
  return tag == SpaceTag::Ellp ? pairing(z.x, f.x) : twisted_pairing(z, f);
}

}  // namespace

void check_well_formed(const BiorthSystem& sys) {
  if (!(sys.delta > 0.0 && sys.delta < 0.5))
    throw std::invalid_argument("BiorthSystem: delta must be in (0, 1/2), got " +
                                std::to_string(sys.delta));
  if (sys.families.size() < 2)
    throw std::invalid_argument("BiorthSystem: need at least two families");
  for (std::size_t j = 0; j < sys.families.size(); ++j) {
    const auto& fam = sys.families[j];
    if (fam.A.empty() || fam.Astar.empty())
      throw std::invalid_argument("BiorthSystem: family " + std::to_string(j) +
                                  " has an empty side");
    if (sys.tag == SpaceTag::Ellp) {
      for (const auto& z : fam.A)
        if (!z.y.is_zero())
          throw std::invalid_argument(
              "BiorthSystem: ellp element with nonzero second coordinate");
      for (const auto& f : fam.Astar)
        if (!f.y.is_zero())
          throw std::invalid_argument(
              "BiorthSystem: ellp functional with nonzero second coordinate");
    }
  }
}

ValidationReport validate_biorth(const BiorthSystem& sys) {
  check_well_formed(sys);
  constexpr double kNormTol = 1e-9;
  ValidationReport report;
  report.same_index_ok = report.cross_ok = report.norms_ok = true;
  for (std::size_t j = 0; j < sys.families.size(); ++j) {
    const auto& fam = sys.families[j];
    ValidationReport::FamilyMargins m{};
    m.same_index_min = std::numeric_limits<double>::infinity();
    m.cross_max = -std::numeric_limits<double>::infinity();
    m.worst_element_norm_error = 0.0;
    m.worst_dual_norm_excess = 0.0;
    for (const auto& z : fam.A) {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& f : fam.Astar)
        best = std::max(best, system_pairing(z, f, sys.tag));
      m.same_index_min = std::min(m.same_index_min, best);
      m.worst_element_norm_error = std::max(
          m.worst_element_norm_error, std::abs(element_norm(z, sys.tag) - 1.0));
    }
    for (const auto& f : fam.Astar)
      m.worst_dual_norm_excess =
          std::max(m.worst_dual_norm_excess, element_norm(f, sys.tag) - 1.0);
    for (std::size_t k = 0; k < sys.families.size(); ++k) {
      if (k == j) continue;
      for (const auto& z : fam.A)
        for (const auto& f : sys.families[k].Astar)
          m.cross_max = std::max(m.cross_max, system_pairing(z, f, sys.tag));
    }
    if (m.same_index_min < 1.0 - sys.delta - kNormTol) report.same_index_ok = false;
    if (m.cross_max > sys.delta + kNormTol) report.cross_ok = false;
    if (m.worst_element_norm_error > kNormTol ||
        m.worst_dual_norm_excess > kNormTol)
      report.norms_ok = false;
    report.per_family.push_back(m);
  }
  report.pass = report.same_index_ok && report.cross_ok && report.norms_ok;
  return report;
}

double renorm(const TwistedVector& z, double eps,
              const std::vector<TwistedVector>& A1star, SpaceTag tag) {
  if (!(eps > 0.0)) throw std::invalid_argument("renorm: eps must be > 0");
  if (A1star.empty()) throw std::invalid_argument("renorm: empty functional set");
  double sup = 0.0;
  for (const auto& f : A1star)
    sup = std::max(sup, std::abs(system_pairing(z, f, tag)));
  return eps * element_norm(z, tag) + sup;
}

DistortionResult distortion_lower_bound(const BiorthSystem& sys, double eps,
                                        std::size_t distinguished,
                                        std::size_t other) {
  if (distinguished >= sys.families.size() || other >= sys.families.size() ||
      distinguished == other)
    throw std::invalid_argument("distortion_lower_bound: bad family indices");
  ValidationReport validation = validate_biorth(sys);
  if (!validation.pass)
    throw std::invalid_argument("distortion_lower_bound: system fails validation");
  const auto& A1star = sys.families[distinguished].Astar;
  const auto& top = sys.families[distinguished].A;
  const auto& bottom = sys.families[other].A;
  DistortionResult result{};
  double best_num = -std::numeric_limits<double>::infinity();
  double best_den = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < top.size(); ++i) {
    double v = renorm(top[i], eps, A1star, sys.tag);
    if (v > best_num) {
      best_num = v;
      result.witness_numerator = i;
    }
  }
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    double v = renorm(bottom[i], eps, A1star, sys.tag);
    if (v < best_den) {
      best_den = v;
      result.witness_denominator = i;
    }
  }
  result.ratio = best_num / best_den;
  result.bound = (1.0 + eps - sys.delta) / (eps + sys.delta);
  result.holds = result.ratio >= result.bound - 1e-9;
  return result;
}

BiorthSystem lift_system(const BiorthSystem& sys) {
  if (sys.tag != SpaceTag::Ellp)
    throw std::invalid_argument("lift_system: input must carry the ellp tag");
  if (!validate_biorth(sys).pass)
    throw std::invalid_argument("lift_system: input fails validation");
  PExponent q = sys.p.dual_exponent();
  BiorthSystem lifted{sys.p, sys.delta, SpaceTag::Zp, {}};
  for (const auto& fam : sys.families) {
    BiorthSystem::Family out;
    for (const auto& z : fam.A) out.A.push_back({z.x, {}, sys.p});
    for (const auto& f : fam.Astar)
      out.Astar.push_back({omega_p(f.x, q), f.x, q});
    lifted.families.push_back(std::move(out));
  }
  return lifted;
}

namespace {

// Objective for the proxy search: normalize the span combination in l_p and
// take the distance to the nearest family element.
class ProxyObjective {
 public:
  ProxyObjective(const std::vector<SeqVector>& family,
                 const std::vector<SeqVector>& basis, const PExponent& p)
      : family_(family), basis_(basis), p_(p) {}

  // Returns +inf for coefficient vectors whose combination is numerically zero.
  double operator()(const std::vector<double>& coeffs) const {
    SeqVector u;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      u = u + coeffs[i] * basis_[i];
    double norm = lp_norm(u, p_);
    if (norm < 1e-12) return std::numeric_limits<double>::infinity();
    u = (1.0 / norm) * u;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : family_) best = std::min(best, lp_norm(u - a, p_));
    return best;
  }

 private:
  const std::vector<SeqVector>& family_;
  const std::vector<SeqVector>& basis_;
  const PExponent& p_;
};

// Coordinate descent with shrinking steps; consumes evaluations from the
// shared budget counter.
double local_descent(const ProxyObjective& objective,
                     std::vector<double> coeffs, double start_value,
                     std::size_t& evals_left) {
  double best = start_value;
  double step = 0.5;
  while (step > 1e-10 && evals_left > 0) {
    bool improved = false;
    for (std::size_t i = 0; i < coeffs.size() && evals_left > 0; ++i) {
      for (double sign : {1.0, -1.0}) {
        if (evals_left == 0) break;
        coeffs[i] += sign * step;
        --evals_left;
        double v = objective(coeffs);
        if (v < best) {
          best = v;
          improved = true;
        } else {
          coeffs[i] -= sign * step;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

// Least-squares coefficients of target against the basis in l_2, via normal
// equations with Gaussian elimination (dimensions are tiny).
std::vector<double> l2_fit(const std::vector<SeqVector>& basis,
                           const SeqVector& target) {
  std::size_t d = basis.size();
  std::vector<std::vector<double>> m(d, std::vector<double>(d + 1, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = pairing(basis[i], basis[j]);
    m[i][d] = pairing(basis[i], target);
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    if (std::abs(m[col][col]) < 1e-14) continue;  // degenerate direction
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= d; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<double> coeffs(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    if (std::abs(m[i][i]) >= 1e-14) coeffs[i] = m[i][d] / m[i][i];
  return coeffs;
}

}  // namespace

double inevitability_proxy(const std::vector<SeqVector>& family,
                           const InevitabilityProbe& probe, const PExponent& p) {
  if (probe.search_budget == 0)
    throw std::invalid_argument("inevitability_proxy: zero search budget");
  if (probe.subspace_basis.empty())
    throw std::invalid_argument("inevitability_proxy: empty basis");
  for (const auto& b : probe.subspace_basis)
    if (b.is_zero())
      throw std::invalid_argument("inevitability_proxy: zero basis vector");
  if (family.empty())
    throw std::invalid_argument("inevitability_proxy: empty family");

  ProxyObjective objective(family, probe.subspace_basis, p);
  std::size_t d = probe.subspace_basis.size();
  std::size_t evals_left = probe.search_budget;
  double best = std::numeric_limits<double>::infinity();

  auto run_start = [&](std::vector<double> coeffs) {
    if (evals_left == 0) return;
    --evals_left;
    double v = objective(coeffs);
    best = std::min(best, v);
    if (std::isfinite(v))
      best = std::min(best, local_descent(objective, std::move(coeffs), v,
                                          evals_left));
  };

  // Deterministic starts: signed axes, then the l_2 projection of each
  // family element onto the span.
  for (std::size_t i = 0; i < d && evals_left > 0; ++i) {
    for (double sign : {1.0, -1.0}) {
      std::vector<double> coeffs(d, 0.0);
      coeffs[i] = sign;
      run_start(std::move(coeffs));
    }
  }
  for (const auto& a : family) {
    if (evals_left == 0) break;
    run_start(l2_fit(probe.subspace_basis, a));
  }
  // Random restarts on the remaining budget.
  std::normal_distribution<double> normal;
  for (std::uint64_t r = 0; evals_left > 0; ++r) {
    auto rng = stream_rng(probe.seed, r);
    std::vector<double> coeffs(d);
    for (auto& c : coeffs) c = normal(rng);
    run_start(std::move(coeffs));
  }
  return best;
}

ChainCheckResult perturbation_chain_check(
    const std::vector<TwistedVector>& w_blocks, const BlockSequence& u_blocks,
    const SeqVector& a, const std::vector<double>& coeffs, double eps) {
  const PExponent& p = u_blocks.p();
  std::size_t n = u_blocks.size();
  if (w_blocks.size() != n || coeffs.size() != n)
    throw std::invalid_argument(
        "perturbation_chain_check: w_blocks, u_blocks and coeffs must have equal length");
  if (!(eps > 0.0))
    throw std::invalid_argument("perturbation_chain_check: eps must be > 0");
  double coeff_norm = 0.0;
  for (double c : coeffs) coeff_norm += std::pow(std::abs(c), p.value());
  coeff_norm = std::pow(coeff_norm, 1.0 / p.value());
  if (coeff_norm > 1.0 + 1e-12)
    throw std::invalid_argument(
        "perturbation_chain_check: ||coeffs||_p = " + std::to_string(coeff_norm) +
        " exceeds 1");
  if (std::abs(lp_norm(a, p) - 1.0) > 1e-9)
    throw std::invalid_argument("perturbation_chain_check: target a is not unit");
  double perturbation_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    TwistedVector diff =
        w_blocks[k] - TwistedVector{u_blocks.blocks()[k], {}, p};
    double dist = quasi_norm(diff);
    double allowance = eps / std::pow(2.0, static_cast<double>(k + 1));
    if (dist > allowance + 1e-12)
      throw std::invalid_argument(
          "perturbation_chain_check: block " + std::to_string(k + 1) +
          " violates the eps/2^n perturbation bound (" + std::to_string(dist) +
          " > " + std::to_string(allowance) + ")");
    perturbation_sum += std::abs(coeffs[k]) * dist;
  }
  SeqVector u;
  TwistedVector w{{}, {}, p};
  for (std::size_t k = 0; k < n; ++k) {
    u = u + coeffs[k] * u_blocks.blocks()[k];
    w = w + coeffs[k] * w_blocks[k];
  }
  double span_distance = lp_norm(u - a, p);
  ChainCheckResult result{};
  result.value = quasi_norm(w - TwistedVector{a, {}, p});
  result.intermediate_bound = perturbation_sum + span_distance;
  result.two_eps = 2.0 * eps;
  // The 2*eps conclusion applies when the span approximation is within eps;
  // the intermediate bound is reported but not asserted, since the quasi-norm
  // triangle inequality need not hold exactly.
  result.holds =
      span_distance > eps + 1e-12 || result.value <= result.two_eps + 1e-9;
  return result;
}

BiorthSystem synth_system(const PExponent& p, double delta,
                          std::size_t family_count, std::size_t family_size,
                          std::size_t width, std::uint64_t seed) {
  if (family_count < 2)
    throw std::invalid_argument("synth_system: need at least two families");
  if (family_size < 1 || width < 1)
    throw std::invalid_argument("synth_system: family_size and width must be >= 1");
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("synth_system: delta must be in (0, 1/2)");
  PExponent q = p.dual_exponent();
  BiorthSystem sys{p, delta, SpaceTag::Ellp, {}};
  sys.families.resize(family_count);

  // Unit vectors on consecutive disjoint blocks plus their exact norming
  // functionals: x*_i = sign(x_i) |x_i|^(p-1) has <x*, x> = 1 and q-norm 1.
  std::vector<std::vector<SeqVector>> norming(family_count);
  std::int64_t next_index = 1;
  auto rng = stream_rng(seed, 0);
  std::uniform_real_distribution<double> coeff_dist(0.1, 1.0);
  for (std::size_t j = 0; j < family_count; ++j) {
    for (std::size_t i = 0; i < family_size; ++i) {
      std::vector<double> values(width);
      for (auto& v : values) v = coeff_dist(rng);
      SeqVector x = SeqVector::dense(values, next_index);
      next_index += static_cast<std::int64_t>(width);
      x = (1.0 / lp_norm(x, p)) * x;
      std::vector<SeqVector::Entry> dual;
      for (const auto& e : x.entries())
        dual.push_back({e.index, (e.value < 0 ? -1.0 : 1.0) *
                                     std::pow(std::abs(e.value), p.value() - 1.0)});
      sys.families[j].A.push_back({x, {}, p});
      norming[j].push_back(SeqVector(std::move(dual)));
    }
  }
  // Functionals carry a cross-term of weight tau <= delta toward a random
  // element of another family; margins stay within (1 - tau, tau).
  std::uniform_real_distribution<double> tau_dist(0.0, 0.99 * delta);
  for (std::size_t j = 0; j < family_count; ++j) {
    for (std::size_t i = 0; i < family_size; ++i) {
      double tau = tau_dist(rng);
      std::uniform_int_distribution<std::size_t> fam_pick(0, family_count - 2);
      std::size_t k = fam_pick(rng);
      if (k >= j) ++k;
      std::uniform_int_distribution<std::size_t> elem_pick(0, family_size - 1);
      SeqVector f = (1.0 - tau) * norming[j][i] + tau * norming[k][elem_pick(rng)];
      sys.families[j].Astar.push_back({std::move(f), {}, q});
    }
  }
  return sys;
}

}  // namespace zplab
