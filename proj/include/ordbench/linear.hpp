#pragma once

#include <optional>
#include <vector>

#include "ordbench/rational.hpp"

namespace ordbench {

using RatVec = std::vector<Rational>;

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& t, const RatVec& v);
bool is_zero(const RatVec& v);

// Row-reduced spanning set with exact arithmetic. Supports membership tests
// and coordinate recovery for vectors in the span.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t dim) : dim_(dim) {}

  // Returns true if v enlarged the span (v was independent).
  bool insert(const RatVec& v);
  bool contains(const RatVec& v) const;

  // Coefficients over the *inserted independent* vectors reproducing v, or
  // nullopt when v is outside the span.
  std::optional<RatVec> coordinates(const RatVec& v) const;

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    RatVec vec;     // reduced row
    RatVec coeffs;  // expression of `vec` over the inserted basis
    std::size_t pivot;
  };
  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

// One linear inequality  coeffs · x ≤ rhs.
struct LinearConstraint {
  RatVec coeffs;
  Rational rhs;
};

struct LpResult {
  bool feasible = true;
  bool bounded = true;
  Rational value;  // minimum of objective, when feasible and bounded
};

// Exact minimization of objective · x subject to the constraints, by
// Fourier-Motzkin elimination. Sized for the small systems produced by the
// extension bounds (a handful of variables and constraints).
LpResult fourier_motzkin_minimize(std::vector<LinearConstraint> constraints, const RatVec& objective);

}  // namespace ordbench
