#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// Exact value with denominator at most 2 (genus or half genus).
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(long long twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt integer(long long v) { return from_twice(2 * v); }

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_zero() const { return twice_ == 0; }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string to_string() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator*(long long k, HalfInt a) { return from_twice(k * a.twice_); }
  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  long long twice_ = 0;
};

// A cyclic ordering of {0..d} up to rotation and reflection, stored with the
// last entry equal to d and, for d >= 2, first entry below the entry before d.
class CyclicPermutation {
 public:
  // Canonicalizes any sequence that is a permutation of {0..d}.
  static CyclicPermutation canonical(std::vector<Color> sequence);

  int dimension() const { return static_cast<int>(order_.size()) - 1; }
  const std::vector<Color>& order() const { return order_; }
  Color operator[](std::size_t i) const { return order_[i]; }
  // Entry i taken cyclically.
  Color at(long long i) const;
  std::string to_string() const;

  friend auto operator<=>(const CyclicPermutation&, const CyclicPermutation&) = default;

 private:
  std::vector<Color> order_;
};

// The d!/2 canonical representatives (one for d = 1), in lexicographic order.
std::vector<CyclicPermutation> enumerate_cyclic_permutations(int d);

}  // namespace gemkit
