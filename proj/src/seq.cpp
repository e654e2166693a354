#include "zplab/seq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace zplab {

SeqVector::SeqVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].index < 1)
      throw std::invalid_argument("SeqVector: indices are 1-based, got " +
                                  std::to_string(entries_[i].index));
    if (i > 0 && entries_[i].index == entries_[i - 1].index)
      throw std::invalid_argument("SeqVector: duplicate index " +
                                  std::to_string(entries_[i].index));
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == 0.0; });
}

SeqVector SeqVector::unit(std::int64_t index) {
  return SeqVector({{index, 1.0}});
}

SeqVector SeqVector::dense(const std::vector<double>& values,
                           std::int64_t first_index) {
  std::vector<Entry> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    entries.push_back({first_index + static_cast<std::int64_t>(i), values[i]});
  return SeqVector(std::move(entries));
}

std::int64_t SeqVector::min_index() const {
  if (entries_.empty()) throw std::logic_error("min_index of zero vector");
  return entries_.front().index;
}

std::int64_t SeqVector::max_index() const {
  if (entries_.empty()) throw std::logic_error("max_index of zero vector");
  return entries_.back().index;
}

double SeqVector::at(std::int64_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::int64_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return 0.0;
}

namespace {

// Merges two sorted entry lists with a combiner on aligned values.
template <typename Op>
SeqVector merge(const SeqVector& a, const SeqVector& b, Op op) {
  std::vector<SeqVector::Entry> out;
  out.reserve(a.entries().size() + b.entries().size());
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->index < ib->index)) {
      out.push_back({ia->index, op(ia->value, 0.0)});
      ++ia;
    } else if (ia == ea || ib->index < ia->index) {
      out.push_back({ib->index, op(0.0, ib->value)});
      ++ib;
    } else {
      out.push_back({ia->index, op(ia->value, ib->value)});
      ++ia;
      ++ib;
    }
  }
  return SeqVector(std::move(out));
}

}  // namespace

SeqVector operator+(const SeqVector& a, const SeqVector& b) {
  return merge(a, b, [](double x, double y) { return x + y; });
}

SeqVector operator-(const SeqVector& a, const SeqVector& b) {
  return merge(a, b, [](double x, double y) { return x - y; });
}

SeqVector operator*(double scalar, const SeqVector& x) {
  std::vector<SeqVector::Entry> out = x.entries();
  for (auto& e : out) e.value *= scalar;
  return SeqVector(std::move(out));
}

double lp_norm(const SeqVector& x, const PExponent& p) {
  if (x.is_zero()) return 0.0;
  double m = sup_norm(x);
  // Scale out the largest modulus to avoid overflow for large p.
  double acc = 0.0;
  for (const auto& e : x.entries()) acc += std::pow(std::abs(e.value) / m, p.value());
  return m * std::pow(acc, 1.0 / p.value());
}

double sup_norm(const SeqVector& x) {
  double m = 0.0;
  for (const auto& e : x.entries()) m = std::max(m, std::abs(e.value));
  return m;
}

double pairing(const SeqVector& x, const SeqVector& b) {
  double acc = 0.0;
  auto ix = x.entries().begin(), ex = x.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ix != ex && ib != eb) {
    if (ix->index < ib->index)
      ++ix;
    else if (ib->index < ix->index)
      ++ib;
    else {
      acc += ix->value * ib->value;
      ++ix;
      ++ib;
    }
  }
  return acc;
}

SeqVector pointwise_mul(const SeqVector& a, const SeqVector& x) {
  std::vector<SeqVector::Entry> out;
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ix = x.entries().begin(), ex = x.entries().end();
  while (ia != ea && ix != ex) {
    if (ia->index < ix->index)
      ++ia;
    else if (ix->index < ia->index)
      ++ix;
    else {
      out.push_back({ia->index, ia->value * ix->value});
      ++ia;
      ++ix;
    }
  }
  return SeqVector(std::move(out));
}

bool are_disjoint(std::span<const SeqVector> blocks) {
  std::set<std::int64_t> seen;
  for (const auto& b : blocks)
    for (const auto& e : b.entries())
      if (!seen.insert(e.index).second) return false;
  return true;
}

SeqVector parse_seq(const std::string& text) {
  std::vector<SeqVector::Entry> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("parse_seq: expected i:v, got '" + item + "'");
    std::size_t pos = 0;
    std::int64_t index = std::stoll(item.substr(0, colon), &pos);
    if (pos != colon)
      throw std::invalid_argument("parse_seq: bad index in '" + item + "'");
    std::string vstr = item.substr(colon + 1);
    double value = std::stod(vstr, &pos);
    if (pos != vstr.size())
      throw std::invalid_argument("parse_seq: bad value in '" + item + "'");
    entries.push_back({index, value});
  }
  return SeqVector(std::move(entries));
}

}  // namespace zplab
