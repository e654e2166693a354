#include "zplab/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zplab {

BlockSequence::BlockSequence(std::vector<SeqVector> blocks, PExponent p)
    : blocks_(std::move(blocks)), p_(p) {
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].is_zero())
      throw std::invalid_argument("BlockSequence: block " + std::to_string(j) +
                                  " is zero");
    if (j > 0 && blocks_[j - 1].max_index() >= blocks_[j].min_index())
      throw std::invalid_argument(
          "BlockSequence: supports not successively increasing at block " +
          std::to_string(j));
  }
}

BlockProfile parse_profile(const std::string& name) {
  if (name == "flat") return BlockProfile::Flat;
  if (name == "geometric") return BlockProfile::Geometric;
  if (name == "singleton") return BlockProfile::Singleton;
  throw std::invalid_argument("unknown profile '" + name + "'");
}

BlockSequence make_disjoint_blocks(std::size_t n, std::size_t width,
                                   BlockProfile profile, PExponent p,
                                   bool normalize) {
  if (n < 1 || width < 1)
    throw std::invalid_argument("make_disjoint_blocks: n and width must be >= 1");
  std::size_t w = profile == BlockProfile::Singleton ? 1 : width;
  std::vector<SeqVector> blocks;
  blocks.reserve(n);
  std::int64_t next = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> coeffs(w, 1.0);
    if (profile == BlockProfile::Geometric) {
      double g = 1.0;
      for (auto& c : coeffs) {
        c = g;
        g *= 0.5;
      }
    }
    SeqVector u = SeqVector::dense(coeffs, next);
    next += static_cast<std::int64_t>(w);
    if (normalize) u = (1.0 / lp_norm(u, p)) * u;
    blocks.push_back(std::move(u));
  }
  return BlockSequence(std::move(blocks), p);
}

double log_lift(const BlockSequence& blocks) {
  if (blocks.size() == 0)
    throw std::invalid_argument("log_lift: empty block sequence");
  SeqVector sum;
  SeqVector omega_sum;
  for (const auto& u : blocks.blocks()) {
    sum = sum + u;
    omega_sum = omega_sum + omega_p(u, blocks.p());
  }
  return lp_norm(omega_p(sum, blocks.p()) - omega_sum, blocks.p());
}

BoundCheck log_lift_lower_bound_check(const BlockSequence& blocks, double eta) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("log_lift_lower_bound_check: eta must be in (0,1]");
  const double p = blocks.p().value();
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    double norm = lp_norm(blocks.blocks()[j], blocks.p());
    if (norm < eta - 1e-12 || norm > 1.0 + 1e-12)
      throw std::invalid_argument("log_lift_lower_bound_check: block " +
                                  std::to_string(j) + " has norm " +
                                  std::to_string(norm) + " outside [eta, 1]");
  }
  const double n = static_cast<double>(blocks.size());
  double bound = eta * std::max(0.0, std::log(n) / p + std::log(eta)) *
                 std::pow(n, 1.0 / p);
  double value = log_lift(blocks);
  return {value, bound, value >= bound - 1e-10};
}

std::vector<FlattenedPair> psp_flatten(const std::vector<TwistedVector>& pairs) {
  std::vector<FlattenedPair> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    if (!pairs.empty() && !(pair.p == pairs.front().p))
      throw std::invalid_argument("psp_flatten: pairs must share one exponent");
    SeqVector y = pair.x - omega_p(pair.y, pair.p);
    double err = quasi_norm(TwistedVector{pair.x - y, pair.y, pair.p});
    out.push_back({std::move(y), err});
  }
  return out;
}

NormalizedFlattened normalize_flattened(const std::vector<SeqVector>& ys,
                                        const PExponent& p) {
  NormalizedFlattened out;
  out.ys.reserve(ys.size());
  out.lambdas.reserve(ys.size());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (ys[j].is_zero())
      throw std::invalid_argument(
          "normalize_flattened: y_" + std::to_string(j + 1) +
          " is zero; input was not a small perturbation of first-coordinate blocks");
    double lambda = 1.0 / lp_norm(ys[j], p);
    out.ys.push_back(lambda * ys[j]);
    out.lambdas.push_back(lambda);
  }
  return out;
}

GrowthTable block_sum_growth(const std::vector<TwistedVector>& pairs,
                             const std::vector<std::size_t>& n_values) {
  std::vector<SeqVector> xs, us;
  for (const auto& pair : pairs) {
    xs.push_back(pair.x);
    us.push_back(pair.y);
  }
  if (!are_disjoint(xs) || !are_disjoint(us))
    throw std::invalid_argument(
        "block_sum_growth: the x_j and the u_j must each be disjoint families");
  GrowthTable table;
  table.law = "n^(1/p)";
  for (std::size_t n : n_values) {
    if (n < 1 || n > pairs.size())
      throw std::invalid_argument("block_sum_growth: n out of range");
    const PExponent& p = pairs.front().p;
    TwistedVector sum{{}, {}, p};
    for (std::size_t j = 0; j < n; ++j) sum = sum + pairs[j];
    table.rows.push_back({n, quasi_norm(sum),
                          std::pow(static_cast<double>(n), 1.0 / p.value())});
  }
  return table;
}

}  // namespace zplab
