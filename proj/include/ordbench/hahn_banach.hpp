#pragma once

#include <array>
#include <string>
#include <vector>

#include "ordbench/dyadic.hpp"
#include "ordbench/linear.hpp"
#include "ordbench/reduction.hpp"

namespace ordbench {

// Sublinear functional p(x) = max_i ⟨c_i, x⟩ over finitely many rational
// linear forms; positively homogeneous and subadditive by construction.
struct MinkowskiFunctional {
  std::size_t dim = 0;
  std::vector<RatVec> forms;  // at least one
};

Rational minkowski_eval(const MinkowskiFunctional& p, const RatVec& x);

struct RatInterval {
  Rational lo;
  Rational hi;
};

// I(x) = [-p(-x), p(x)].
RatInterval base_interval(const MinkowskiFunctional& p, const RatVec& x);

// Linear functional on a subspace, held as an independent spanning list with
// values.
class LinearFunctional {
 public:
  explicit LinearFunctional(std::size_t dim) : span_(dim) {}

  // Returns false (and changes nothing) when v is already in the span.
  bool insert(const RatVec& v, const Rational& value);
  bool defined_on(const RatVec& v) const { return span_.contains(v); }
  Rational evaluate(const RatVec& v) const;  // throws not_independent outside the span
  std::size_t dim() const { return span_.dim(); }
  std::size_t rank() const { return span_.rank(); }
  const std::vector<RatVec>& basis() const { return basis_; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  RationalSpan span_;
  std::vector<RatVec> basis_;
  std::vector<Rational> values_;
};

struct OneStepExtension {
  Rational lower;  // m⁻ = sup_w (-p(-z-w) - l(w))
  Rational upper;  // m⁺ = inf_w (p(z+w) - l(w))
  LinearFunctional extended;  // l with l'(z) = m⁻ (the leftmost admissible value)
};

// Exact extension bounds via Fourier-Motzkin over the form representation of
// p. Throws not_independent when z is in the domain span, and
// infeasible_domination when the bounds cross (l ≤ p must fail on the domain).
OneStepExtension one_step_extension(const MinkowskiFunctional& p, const LinearFunctional& l,
                                    const RatVec& z);

struct HahnBanachInstance {
  std::size_t dim = 0;
  MinkowskiFunctional p;
  std::vector<RatVec> subspace_basis;  // spanning W
  std::vector<Rational> f_values;      // f on the listed basis vectors
  std::vector<RatVec> tracked;         // X
  std::vector<std::array<int, 3>> sums;  // (i, j, k) with tracked[i] + tracked[j] = tracked[k]
  std::vector<std::pair<Rational, std::array<int, 2>>> scalings;  // (r, (i, j)): r·tracked[i] = tracked[j]
  unsigned depth = 0;                  // N
};

struct HahnBanachSolution {
  // per tracked vector, the depth-N enclosure of the extension value
  std::vector<DyadicInterval> enclosure;
  // conditions selected per depth 0..N (outer index = depth, inner = tracked)
  std::vector<std::vector<DyadicInterval>> per_depth;
};

// Builds the condition poset over the tracked set, seeds each constant-depth
// antichain with the iterated-extension condition, solves with the streaming
// transversal solver, and returns nested per-vector enclosures of exact width
// (p(x) + p(-x)) / 2^N. Throws depth_cap, dimension_mismatch,
// infeasible_domination.
HahnBanachSolution hahn_banach_solve(const HahnBanachInstance& instance,
                                     unsigned depth_cap = kDefaultDepthCap);

}  // namespace ordbench
