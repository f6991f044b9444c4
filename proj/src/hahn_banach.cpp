#include "ordbench/hahn_banach.hpp"

#include <algorithm>

#include "ordbench/error.hpp"

namespace ordbench {

namespace {

void check_dim(const MinkowskiFunctional& p, const RatVec& x) {
  if (x.size() != p.dim)
    throw Error(errc::dimension_mismatch, "vector has dimension " + std::to_string(x.size()) +
                                              ", expected " + std::to_string(p.dim));
}

RatVec negate(const RatVec& v) { return scale(Rational(-1), v); }

bool intervals_meet(const RatInterval& a, const RatInterval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}

RatInterval interval_of(const DyadicInterval& d) { return RatInterval{d.lo(), d.hi()}; }

}  // namespace

Rational minkowski_eval(const MinkowskiFunctional& p, const RatVec& x) {
  if (p.forms.empty()) throw Error(errc::parse_error, "functional needs at least one linear form");
  check_dim(p, x);
  Rational best = dot(p.forms.front(), x);
  for (std::size_t i = 1; i < p.forms.size(); ++i) best = std::max(best, dot(p.forms[i], x));
  return best;
}

RatInterval base_interval(const MinkowskiFunctional& p, const RatVec& x) {
  RatInterval I{-minkowski_eval(p, negate(x)), minkowski_eval(p, x)};
  if (I.hi < I.lo)
    throw Error(errc::infeasible_domination, "p(x) + p(-x) < 0 breaks subadditivity at 0");
  return I;
}

bool LinearFunctional::insert(const RatVec& v, const Rational& value) {
  if (!span_.insert(v)) return false;
  basis_.push_back(v);
  values_.push_back(value);
  return true;
}

Rational LinearFunctional::evaluate(const RatVec& v) const {
  auto coords = span_.coordinates(v);
  if (!coords)
    throw Error(errc::not_independent, "vector is outside the functional's domain");
  Rational out = 0;
  for (std::size_t i = 0; i < coords->size(); ++i) out += (*coords)[i] * values_[i];
  return out;
}

namespace {

// inf over w ∈ dom(l) of p(v + w) - l(w), as the LP
//   minimize u  s.t.  ⟨c_i, v⟩ + Σ_j t_j (⟨c_i, w_j⟩ - l_j) ≤ u  for all forms c_i
// over variables (t, u).
LpResult extension_bound(const MinkowskiFunctional& p, const LinearFunctional& l, const RatVec& v) {
  const std::size_t k = l.rank();
  std::vector<LinearConstraint> constraints;
  for (const RatVec& c : p.forms) {
    LinearConstraint row;
    row.coeffs.assign(k + 1, Rational(0));
    for (std::size_t j = 0; j < k; ++j)
      row.coeffs[j] = dot(c, l.basis()[j]) - l.values()[j];
    row.coeffs[k] = -1;  // -u
    row.rhs = -dot(c, v);
    constraints.push_back(std::move(row));
  }
  RatVec objective(k + 1, Rational(0));
  objective[k] = 1;
  return fourier_motzkin_minimize(std::move(constraints), objective);
}

}  // namespace

OneStepExtension one_step_extension(const MinkowskiFunctional& p, const LinearFunctional& l,
                                    const RatVec& z) {
  check_dim(p, z);
  if (l.defined_on(z))
    throw Error(errc::not_independent, "z already lies in the functional's domain");

  LpResult up = extension_bound(p, l, z);           // m⁺
  LpResult down = extension_bound(p, l, negate(z)); // -m⁻
  if (!up.feasible || !down.feasible || !up.bounded || !down.bounded)
    throw Error(errc::infeasible_domination, "extension bounds are unbounded; l ≤ p fails on the domain");
  Rational m_plus = up.value;
  Rational m_minus = -down.value;
  if (m_minus > m_plus)
    throw Error(errc::infeasible_domination, "extension bounds cross; l ≤ p fails on the domain");

  OneStepExtension out{m_minus, m_plus, l};
  out.extended.insert(z, m_minus);
  return out;
}

namespace {

struct ValidatedInstance {
  LinearFunctional on_subspace;   // f on W
  LinearFunctional extended;      // f' on span(W ∪ X), leftmost one-step choices
  std::vector<Rational> phi;      // f'(x) per tracked x
  std::vector<RatInterval> base;  // I(x) per tracked x
};

ValidatedInstance prepare(const HahnBanachInstance& inst, unsigned depth_cap) {
  if (inst.p.forms.empty())
    throw Error(errc::parse_error, "functional needs at least one linear form");
  if (inst.p.dim != inst.dim)
    throw Error(errc::dimension_mismatch, "functional dimension differs from instance dimension");
  if (inst.subspace_basis.size() != inst.f_values.size())
    throw Error(errc::parse_error, "subspace basis and value lists differ in length");
  if (inst.depth > depth_cap)
    throw Error(errc::depth_cap, "depth " + std::to_string(inst.depth) + " exceeds cap " +
                                     std::to_string(depth_cap));
  for (const RatVec& c : inst.p.forms)
    if (c.size() != inst.dim) throw Error(errc::dimension_mismatch, "form has wrong dimension");
  for (const RatVec& w : inst.subspace_basis)
    if (w.size() != inst.dim) throw Error(errc::dimension_mismatch, "basis vector has wrong dimension");
  for (const RatVec& x : inst.tracked)
    if (x.size() != inst.dim) throw Error(errc::dimension_mismatch, "tracked vector has wrong dimension");

  const int t = static_cast<int>(inst.tracked.size());
  for (const auto& s : inst.sums) {
    if (s[0] < 0 || s[0] >= t || s[1] < 0 || s[1] >= t || s[2] < 0 || s[2] >= t)
      throw Error(errc::parse_error, "sum triple index out of range");
    if (add(inst.tracked[static_cast<std::size_t>(s[0])], inst.tracked[static_cast<std::size_t>(s[1])]) !=
        inst.tracked[static_cast<std::size_t>(s[2])])
      throw Error(errc::parse_error, "listed sum triple does not hold");
  }
  for (const auto& [r, ij] : inst.scalings) {
    if (ij[0] < 0 || ij[0] >= t || ij[1] < 0 || ij[1] >= t)
      throw Error(errc::parse_error, "scaling index out of range");
    if (scale(r, inst.tracked[static_cast<std::size_t>(ij[0])]) != inst.tracked[static_cast<std::size_t>(ij[1])])
      throw Error(errc::parse_error, "listed scaling does not hold");
  }

  ValidatedInstance v{LinearFunctional(inst.dim), LinearFunctional(inst.dim), {}, {}};
  for (std::size_t i = 0; i < inst.subspace_basis.size(); ++i) {
    const RatVec& w = inst.subspace_basis[i];
    if (v.on_subspace.defined_on(w)) {
      if (v.on_subspace.evaluate(w) != inst.f_values[i])
        throw Error(errc::infeasible_domination, "f values inconsistent on dependent basis vectors");
    } else {
      v.on_subspace.insert(w, inst.f_values[i]);
    }
  }

  // f ≤ p sampled on ± basis vectors and their pairwise sums
  auto check_dominated = [&](const RatVec& w) {
    if (v.on_subspace.evaluate(w) > minkowski_eval(inst.p, w))
      throw Error(errc::infeasible_domination, "f exceeds p on the subspace sample grid");
  };
  for (const RatVec& w : inst.subspace_basis) {
    check_dominated(w);
    check_dominated(negate(w));
  }
  for (std::size_t i = 0; i < inst.subspace_basis.size(); ++i)
    for (std::size_t j = i + 1; j < inst.subspace_basis.size(); ++j)
      check_dominated(add(inst.subspace_basis[i], inst.subspace_basis[j]));

  v.extended = v.on_subspace;
  for (const RatVec& x : inst.tracked)
    if (!v.extended.defined_on(x)) v.extended = one_step_extension(inst.p, v.extended, x).extended;

  for (const RatVec& x : inst.tracked) {
    Rational value = v.extended.evaluate(x);
    RatInterval I = base_interval(inst.p, x);
    if (value < I.lo || I.hi < value)
      throw Error(errc::infeasible_domination, "extension value escapes I(x); l ≤ p fails");
    v.phi.push_back(std::move(value));
    v.base.push_back(std::move(I));
  }
  return v;
}

std::string depth_label(unsigned n) { return "d" + std::to_string(n); }

}  // namespace

HahnBanachSolution hahn_banach_solve(const HahnBanachInstance& inst, unsigned depth_cap) {
  ValidatedInstance v = prepare(inst, depth_cap);
  const std::size_t t = inst.tracked.size();

  // Condition per depth: leftmost depth-n dyadic subinterval of I(x)
  // containing the extension value, per tracked x.
  std::vector<std::vector<DyadicInterval>> conditions;
  for (unsigned n = 0; n <= inst.depth; ++n) {
    std::vector<DyadicInterval> g;
    g.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
      g.push_back(leftmost_containing(v.base[i].lo, v.base[i].hi, n, v.phi[i], depth_cap));
    conditions.push_back(std::move(g));
  }

  // conditions (2)-(4) hold for every materialized condition
  for (const auto& g : conditions) {
    for (std::size_t i = 0; i < t; ++i)
      if (v.on_subspace.defined_on(inst.tracked[i]) &&
          !g[i].contains(v.on_subspace.evaluate(inst.tracked[i])))
        throw Error(errc::infeasible_domination, "condition drops f(x) for a subspace vector");
    for (const auto& s : inst.sums) {
      RatInterval sum{g[static_cast<std::size_t>(s[0])].lo() + g[static_cast<std::size_t>(s[1])].lo(),
                      g[static_cast<std::size_t>(s[0])].hi() + g[static_cast<std::size_t>(s[1])].hi()};
      if (!intervals_meet(sum, interval_of(g[static_cast<std::size_t>(s[2])])))
        throw Error(errc::infeasible_domination, "additive interval condition fails");
    }
    for (const auto& [r, ij] : inst.scalings) {
      RatInterval src = interval_of(g[static_cast<std::size_t>(ij[0])]);
      RatInterval scaled = r >= 0 ? RatInterval{r * src.lo, r * src.hi}
                                  : RatInterval{r * src.hi, r * src.lo};
      if (!intervals_meet(scaled, interval_of(g[static_cast<std::size_t>(ij[1])])))
        throw Error(errc::infeasible_domination, "scaling interval condition fails");
    }
  }

  // Deduplicate identical conditions (distinct depths coincide when every
  // I(x) is degenerate), then order by interval containment.
  std::vector<std::vector<DyadicInterval>> unique_conditions;
  std::vector<int> element_of_depth(conditions.size());
  for (std::size_t n = 0; n < conditions.size(); ++n) {
    auto it = std::find(unique_conditions.begin(), unique_conditions.end(), conditions[n]);
    if (it == unique_conditions.end()) {
      unique_conditions.push_back(conditions[n]);
      element_of_depth[n] = static_cast<int>(unique_conditions.size()) - 1;
    } else {
      element_of_depth[n] = static_cast<int>(it - unique_conditions.begin());
    }
  }

  const std::size_t count = unique_conditions.size();
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < count; ++e) {
    unsigned first_depth = 0;
    while (element_of_depth[first_depth] != static_cast<int>(e)) ++first_depth;
    labels.push_back(depth_label(first_depth));
  }
  auto cond_leq = [&](std::size_t a, std::size_t b) {  // g_a ≤ g_b: pointwise containment
    for (std::size_t i = 0; i < t; ++i)
      if (!unique_conditions[a][i].subinterval_of(unique_conditions[b][i])) return false;
    return true;
  };
  std::vector<Subset> down(count, Subset(count));
  for (std::size_t q = 0; q < count; ++q)
    for (std::size_t p = 0; p < count; ++p)
      if (cond_leq(p, q)) down[q].set(static_cast<int>(p));
  auto poset = std::make_shared<const Order>(
      Order::from_down_sets(Order::Kind::poset, std::move(labels), std::move(down),
                            std::max<std::size_t>(count, kDefaultOrderCap)));

  // One antichain per depth, fed to the streaming solver.
  TransversalSolver solver(poset);
  for (std::size_t n = 0; n < conditions.size(); ++n) {
    Subset A(count);
    A.set(element_of_depth[n]);
    if (!solver.add_antichain(A))
      throw Error(errc::infeasible_domination, "depth antichains unexpectedly unsatisfiable");
  }
  TransversalResult res = solver.result();

  HahnBanachSolution out;
  for (const SolutionCertificate& cert : res.solution->certificates)
    out.per_depth.push_back(unique_conditions[static_cast<std::size_t>(cert.witness)]);

  // nesting: deeper solution intervals sit inside shallower ones
  for (std::size_t n = 1; n < out.per_depth.size(); ++n)
    for (std::size_t i = 0; i < t; ++i)
      if (!out.per_depth[n][i].subinterval_of(out.per_depth[n - 1][i]))
        throw Error(errc::infeasible_domination, "solution intervals fail to nest");

  out.enclosure = out.per_depth.back();
  for (std::size_t i = 0; i < t; ++i) {
    Rational expected = (v.base[i].hi - v.base[i].lo) / Rational(pow2(inst.depth));
    if (out.enclosure[i].width() != expected)
      throw Error(errc::infeasible_domination, "enclosure width deviates from the exact formula");
  }
  return out;
}

}  // namespace ordbench
