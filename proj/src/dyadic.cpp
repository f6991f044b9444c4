#include "ordbench/dyadic.hpp"

#include "ordbench/error.hpp"

namespace ordbench {

namespace {

void check_depth(unsigned depth, unsigned cap) {
  if (depth > cap)
    throw Error(errc::depth_cap,
                "depth " + std::to_string(depth) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

Rational DyadicInterval::lo() const {
  return base_lo + (base_hi - base_lo) * Rational(BigInt(index), pow2(depth));
}

Rational DyadicInterval::hi() const {
  return base_lo + (base_hi - base_lo) * Rational(BigInt(index) + 1, pow2(depth));
}

std::vector<DyadicInterval> dyadic_subintervals(const Rational& lo, const Rational& hi,
                                                unsigned depth, unsigned cap) {
  check_depth(depth, cap);
  std::vector<DyadicInterval> out;
  const std::uint64_t count = std::uint64_t{1} << depth;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(DyadicInterval{lo, hi, depth, k});
  return out;
}

DyadicInterval leftmost_containing(const Rational& lo, const Rational& hi, unsigned depth,
                                   const Rational& t, unsigned cap) {
  check_depth(depth, cap);
  if (t < lo || hi < t) throw Error(errc::parse_error, "point outside the base interval");
  if (lo == hi || t == lo) return DyadicInterval{lo, hi, depth, 0};
  // smallest k with t ≤ right endpoint of the k-th subinterval
  Rational scaled = (t - lo) / (hi - lo) * Rational(pow2(depth));  // in (0, 2^depth]
  BigInt num = numerator(scaled);
  BigInt den = denominator(scaled);
  BigInt ceil = num / den + (num % den == 0 ? 0 : 1);
  std::uint64_t k = static_cast<std::uint64_t>(ceil - 1);
  return DyadicInterval{lo, hi, depth, k};
}

}  // namespace ordbench
