#pragma once

#include <cstdint>
#include <vector>

#include "ordbench/rational.hpp"

namespace ordbench {

constexpr unsigned kDefaultDepthCap = 32;

// The k-th of the 2^depth equal closed subdivisions of the base interval
// [base_lo, base_hi]; endpoints are exact rationals.
struct DyadicInterval {
  Rational base_lo;
  Rational base_hi;
  unsigned depth = 0;
  std::uint64_t index = 0;  // k < 2^depth

  Rational lo() const;
  Rational hi() const;
  Rational width() const { return (base_hi - base_lo) / Rational(pow2(depth)); }

  bool contains(const Rational& t) const { return lo() <= t && t <= hi(); }
  bool subinterval_of(const DyadicInterval& other) const {
    return other.lo() <= lo() && hi() <= other.hi();
  }

  bool operator==(const DyadicInterval& o) const {
    return base_lo == o.base_lo && base_hi == o.base_hi && depth == o.depth && index == o.index;
  }
};

// The 2^depth subintervals in increasing index order. Throws depth_cap.
std::vector<DyadicInterval> dyadic_subintervals(const Rational& lo, const Rational& hi,
                                                unsigned depth, unsigned cap = kDefaultDepthCap);

// Leftmost depth-n subinterval containing t (precondition lo ≤ t ≤ hi):
// at an interior grid point this is the interval ending at t.
DyadicInterval leftmost_containing(const Rational& lo, const Rational& hi, unsigned depth,
                                   const Rational& t, unsigned cap = kDefaultDepthCap);

}  // namespace ordbench
