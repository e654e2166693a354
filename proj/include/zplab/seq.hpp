#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zplab {

/// Exponent of the ambient sequence space, restricted to 1 < p < infinity.
class PExponent {
 public:
  explicit PExponent(double p) : p_(p) {
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("PExponent: p must satisfy 1 < p < inf, got " +
                                  std::to_string(p));
  }

  double value() const { return p_; }
  /// Dual exponent q = p/(p-1).
  double dual() const { return p_ / (p_ - 1.0); }
  PExponent dual_exponent() const { return PExponent(dual()); }

  friend bool operator==(const PExponent&, const PExponent&) = default;

 private:
  double p_;
};

/// Finitely supported real sequence, stored sparsely with 1-based indices.
/// Canonical form: entries sorted by index, exact zeros dropped.
class SeqVector {
 public:
  struct Entry {
    std::int64_t index;
    double value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SeqVector() = default;
  /// Canonicalizes: sorts by index, drops zeros, rejects duplicates and
  /// indices < 1.
  explicit SeqVector(std::vector<Entry> entries);

  static SeqVector unit(std::int64_t index);
  /// Dense values occupying consecutive indices starting at first_index.
  static SeqVector dense(const std::vector<double>& values,
                         std::int64_t first_index = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  std::int64_t min_index() const;
  std::int64_t max_index() const;
  /// Value at an index (0 off the support).
  double at(std::int64_t index) const;

  friend SeqVector operator+(const SeqVector& a, const SeqVector& b);
  friend SeqVector operator-(const SeqVector& a, const SeqVector& b);
  friend SeqVector operator*(double scalar, const SeqVector& x);
  SeqVector operator-() const { return -1.0 * *this; }

  friend bool operator==(const SeqVector&, const SeqVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// (sum |x_i|^p)^(1/p).
double lp_norm(const SeqVector& x, const PExponent& p);

/// max |x_i|; 0 for the zero vector.
double sup_norm(const SeqVector& x);

/// Bilinear bracket sum x_i * b_i.
double pairing(const SeqVector& x, const SeqVector& b);

/// Coordinatewise product (ax)_i = a_i * x_i.
SeqVector pointwise_mul(const SeqVector& a, const SeqVector& x);

/// True iff the supports are pairwise disjoint (vacuously true when empty).
bool are_disjoint(std::span<const SeqVector> blocks);

/// Parses the sparse CLI grammar "i1:v1;i2:v2;...". Empty string is the zero
/// vector.
SeqVector parse_seq(const std::string& text);

}  // namespace zplab
