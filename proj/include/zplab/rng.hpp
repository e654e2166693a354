#pragma once

#include <cstdint>
#include <random>

#include "zplab/seq.hpp"

namespace zplab {

/// Generator for sample index k of a stream with master seed; prefix-stable so
/// that enlarging the trial count never changes earlier samples.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{seed, k};
  return std::mt19937_64(seq);
}

/// Dense vector with i.i.d. standard normal coordinates on indices 1..dim.
inline SeqVector random_normal_vector(std::mt19937_64& rng, std::size_t dim,
                                      std::int64_t first_index = 1) {
  std::normal_distribution<double> normal;
  std::vector<double> values(dim);
  for (auto& v : values) v = normal(rng);
  return SeqVector::dense(values, first_index);
}

}  // namespace zplab
