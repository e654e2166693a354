#pragma once

#include <string>
#include <vector>

#include "zplab/centralizer.hpp"
#include "zplab/seq.hpp"

namespace zplab {

/// Ordered blocks with pairwise disjoint, successively increasing supports;
/// no block is zero. Validated on construction.
class BlockSequence {
 public:
  BlockSequence(std::vector<SeqVector> blocks, PExponent p);

  const std::vector<SeqVector>& blocks() const { return blocks_; }
  const PExponent& p() const { return p_; }
  std::size_t size() const { return blocks_.size(); }

 private:
  std::vector<SeqVector> blocks_;
  PExponent p_;
};

enum class BlockProfile { Flat, Geometric, Singleton };

BlockProfile parse_profile(const std::string& name);

/// n consecutive disjoint blocks of the given width and coefficient profile,
/// each normalized in l_p when requested. Singleton profile ignores width
/// beyond using one coordinate per block.
BlockSequence make_disjoint_blocks(std::size_t n, std::size_t width,
                                   BlockProfile profile, PExponent p,
                                   bool normalize);

/// || Omega_p(sum u_j) - sum Omega_p(u_j) ||_p.
double log_lift(const BlockSequence& blocks);

struct BoundCheck {
  double value;
  double bound;
  bool holds;
};

/// Checks log_lift >= eta * max(0, (1/p) log n + log eta) * n^(1/p) for
/// blocks with l_p norms in [eta, 1].
BoundCheck log_lift_lower_bound_check(const BlockSequence& blocks, double eta);

struct FlattenedPair {
  SeqVector y;
  double err;
};

/// y_j = x_j - Omega_p(u_j); err_j = quasi_norm((x_j,u_j) - (y_j,0)), which
/// equals ||u_j||_p exactly.
std::vector<FlattenedPair> psp_flatten(const std::vector<TwistedVector>& pairs);

struct NormalizedFlattened {
  std::vector<SeqVector> ys;
  std::vector<double> lambdas;  // scaling factors 1/||y_j||_p
};

/// Rescales each y_j to unit l_p norm; throws if any y_j is zero.
NormalizedFlattened normalize_flattened(const std::vector<SeqVector>& ys,
                                        const PExponent& p);

struct GrowthTable {
  struct Row {
    std::size_t n;
    double value;
    double reference;
  };
  std::vector<Row> rows;
  std::string law;  // label of the reference column
};

/// Rows (n, quasi_norm(sum of the first n pairs), n^(1/p)) for each requested
/// n. The x_j and the u_j must each form disjoint families.
GrowthTable block_sum_growth(const std::vector<TwistedVector>& pairs,
                             const std::vector<std::size_t>& n_values);

}  // namespace zplab
