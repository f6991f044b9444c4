#include "ordbench/linear.hpp"

#include <algorithm>
#include <cassert>

#include "ordbench/error.hpp"

namespace ordbench {

Rational dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec scale(const Rational& t, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
  return out;
}

bool is_zero(const RatVec& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

bool RationalSpan::insert(const RatVec& v) {
  assert(v.size() == dim_);
  RatVec rest = v;
  RatVec combo(rows_.size(), Rational(0));
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Row& row = rows_[j];
    if (rest[row.pivot] == 0) continue;
    Rational mu = rest[row.pivot] / row.vec[row.pivot];
    for (std::size_t i = 0; i < dim_; ++i) rest[i] -= mu * row.vec[i];
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) combo[i] += mu * row.coeffs[i];
  }
  if (is_zero(rest)) return false;
  std::size_t pivot = 0;
  while (rest[pivot] == 0) ++pivot;
  RatVec coeffs(rows_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < combo.size(); ++i) coeffs[i] = -combo[i];
  coeffs.back() = 1;
  rows_.push_back(Row{std::move(rest), std::move(coeffs), pivot});
  ++inserted_;
  return true;
}

std::optional<RatVec> RationalSpan::coordinates(const RatVec& v) const {
  assert(v.size() == dim_);
  RatVec rest = v;
  RatVec combo(rows_.size(), Rational(0));
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Row& row = rows_[j];
    if (rest[row.pivot] == 0) continue;
    Rational mu = rest[row.pivot] / row.vec[row.pivot];
    for (std::size_t i = 0; i < dim_; ++i) rest[i] -= mu * row.vec[i];
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) combo[i] += mu * row.coeffs[i];
  }
  if (!is_zero(rest)) return std::nullopt;
  return combo;
}

bool RationalSpan::contains(const RatVec& v) const { return coordinates(v).has_value(); }

namespace {

void normalize(LinearConstraint& c) {
  Rational lead = 0;
  for (const Rational& a : c.coeffs)
    if (a != 0) {
      lead = abs(a);
      break;
    }
  if (lead == 0) {
    if (c.rhs != 0) c.rhs = c.rhs > 0 ? Rational(1) : Rational(-1);
    return;
  }
  for (Rational& a : c.coeffs) a /= lead;
  c.rhs /= lead;
}

bool constraint_less(const LinearConstraint& a, const LinearConstraint& b) {
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                      b.coeffs.end());
}

bool constraint_eq(const LinearConstraint& a, const LinearConstraint& b) {
  return a.rhs == b.rhs && a.coeffs == b.coeffs;
}

void dedupe(std::vector<LinearConstraint>& cs) {
  for (LinearConstraint& c : cs) normalize(c);
  std::sort(cs.begin(), cs.end(), constraint_less);
  cs.erase(std::unique(cs.begin(), cs.end(), constraint_eq), cs.end());
}

}  // namespace

LpResult fourier_motzkin_minimize(std::vector<LinearConstraint> constraints, const RatVec& objective) {
  const std::size_t d = objective.size();
  // Objective variable u at index d with u ≥ objective · x.
  for (LinearConstraint& c : constraints) {
    assert(c.coeffs.size() == d);
    c.coeffs.push_back(Rational(0));
  }
  LinearConstraint obj;
  obj.coeffs = objective;
  obj.coeffs.push_back(Rational(-1));
  obj.rhs = 0;
  constraints.push_back(std::move(obj));

  for (std::size_t var = 0; var < d; ++var) {
    std::vector<LinearConstraint> lower, upper, rest;
    for (LinearConstraint& c : constraints) {
      if (c.coeffs[var] > 0)
        upper.push_back(std::move(c));
      else if (c.coeffs[var] < 0)
        lower.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const LinearConstraint& lo : lower)
      for (const LinearConstraint& up : upper) {
        // positive combination cancelling x_var
        Rational a = up.coeffs[var];   // > 0
        Rational b = -lo.coeffs[var];  // > 0
        LinearConstraint merged;
        merged.coeffs.resize(d + 1);
        for (std::size_t i = 0; i <= d; ++i)
          merged.coeffs[i] = b * up.coeffs[i] + a * lo.coeffs[i];
        merged.rhs = b * up.rhs + a * lo.rhs;
        rest.push_back(std::move(merged));
      }
    dedupe(rest);
    constraints = std::move(rest);
  }

  LpResult out;
  bool has_lower = false;
  Rational best = 0;
  for (const LinearConstraint& c : constraints) {
    const Rational& alpha = c.coeffs[d];
    // every surviving constraint is a nonnegative combination of the inputs,
    // so alpha ≤ 0
    if (alpha == 0) {
      if (c.rhs < 0) {
        out.feasible = false;
        return out;
      }
      continue;
    }
    Rational bound = c.rhs / alpha;  // alpha < 0 flips to a lower bound on u
    if (!has_lower || bound > best) {
      best = bound;
      has_lower = true;
    }
  }
  if (!has_lower) {
    out.bounded = false;
    return out;
  }
  out.value = best;
  return out;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (text.empty()) throw Error(errc::parse_error, "empty rational literal");
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(errc::parse_error, "zero denominator in \"" + text + "\"");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad rational literal \"" + text + "\"");
  }
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) out += "/" + denominator(value).str();
  return out;
}

BigInt pow2(unsigned n) {
  BigInt out = 1;
  return out << n;
}

}  // namespace ordbench
