#include "ordbench/order.hpp"

#include <set>

#include "ordbench/error.hpp"

namespace ordbench {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::antisymmetry_violation: return "AntisymmetryViolation";
    case errc::not_dense: return "NotDense";
    case errc::not_semi_separative: return "NotSemiSeparative";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_restriction_closed: return "NotRestrictionClosed";
    case errc::coverage_gap: return "CoverageGap";
    case errc::not_consistent: return "NotConsistent";
    case errc::not_centred: return "NotCentred";
    case errc::not_generic: return "NotGeneric";
    case errc::not_linked: return "NotLinked";
    case errc::invalid_family: return "InvalidFamily";
    case errc::empty_member: return "EmptyMember";
    case errc::blocks_overlap: return "BlocksOverlap";
    case errc::depth_cap: return "DepthCap";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_independent: return "NotIndependent";
    case errc::infeasible_domination: return "InfeasibleDomination";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Order::Order(Kind kind, std::vector<std::string> labels) : kind_(kind), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
    if (!inserted) throw Error(errc::duplicate_label, "duplicate label: " + labels_[i], {labels_[i]});
  }
}

void Order::finish(std::vector<Subset> down_rows) {
  const std::size_t n = labels_.size();
  down_ = std::move(down_rows);
  up_.assign(n, Subset(n));
  for (int q = 0; q < static_cast<int>(n); ++q)
    down_[static_cast<std::size_t>(q)].for_each([&](int p) { up_[static_cast<std::size_t>(p)].set(q); });

  for (int p = 0; p < static_cast<int>(n); ++p) {
    if (!down_[static_cast<std::size_t>(p)].test(p))
      throw Error(errc::parse_error, "relation not reflexive at " + labels_[static_cast<std::size_t>(p)]);
    if (kind_ == Kind::poset) {
      // 2-cycle of distinct elements means the closure is not antisymmetric.
      Subset both = down_[static_cast<std::size_t>(p)] & up_[static_cast<std::size_t>(p)];
      both.reset(p);
      int q = both.first();
      if (q >= 0)
        throw Error(errc::antisymmetry_violation,
                    "antisymmetry violated between " + labels_[static_cast<std::size_t>(p)] + " and " +
                        labels_[static_cast<std::size_t>(q)],
                    {labels_[static_cast<std::size_t>(p)], labels_[static_cast<std::size_t>(q)]});
    }
  }

  compat_.assign(n, Subset(n));
  for (int p = 0; p < static_cast<int>(n); ++p)
    for (int q = p; q < static_cast<int>(n); ++q)
      if (down_[static_cast<std::size_t>(p)].intersects(down_[static_cast<std::size_t>(q)])) {
        compat_[static_cast<std::size_t>(p)].set(q);
        compat_[static_cast<std::size_t>(q)].set(p);
      }
}

Order Order::from_pairs(Kind kind, std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& pairs,
                        std::size_t cap) {
  if (labels.size() > cap)
    throw Error(errc::cap_exceeded, "order size " + std::to_string(labels.size()) +
                                        " exceeds cap " + std::to_string(cap));
  Order ord(kind, std::move(labels));
  const std::size_t n = ord.labels_.size();

  // leq rows as up-sets of the generator graph, then transitive closure.
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(static_cast<int>(i));
  for (const auto& [x, y] : pairs) up[static_cast<std::size_t>(ord.index_of(x))].set(ord.index_of(y));

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      Subset next = up[p];
      up[p].for_each([&](int q) { next |= up[static_cast<std::size_t>(q)]; });
      if (next != up[p]) {
        up[p] = next;
        changed = true;
      }
    }
  }

  std::vector<Subset> down(n, Subset(n));
  for (int p = 0; p < static_cast<int>(n); ++p)
    up[static_cast<std::size_t>(p)].for_each([&](int q) { down[static_cast<std::size_t>(q)].set(p); });
  ord.finish(std::move(down));
  return ord;
}

Order Order::from_down_sets(Kind kind, std::vector<std::string> labels, std::vector<Subset> down_rows,
                            std::size_t cap) {
  if (labels.size() > cap)
    throw Error(errc::cap_exceeded, "order size " + std::to_string(labels.size()) +
                                        " exceeds cap " + std::to_string(cap));
  Order ord(kind, std::move(labels));
  ord.finish(std::move(down_rows));
  // Transitivity check: down-sets of extensions must be contained.
  for (int q = 0; q < static_cast<int>(ord.size()); ++q) {
    const Subset& dq = ord.down_set(q);
    bool ok = true;
    dq.for_each([&](int p) { ok = ok && dq.contains(ord.down_set(p)); });
    if (!ok) throw Error(errc::parse_error, "relation not transitive at " + ord.label(q));
  }
  return ord;
}

int Order::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(errc::unknown_label, "unknown label: " + label, {label});
  return it->second;
}

Subset Order::subset_of(const std::vector<std::string>& names) const {
  Subset s(size());
  for (const auto& name : names) s.set(index_of(name));
  return s;
}

std::vector<std::string> Order::names_of(const Subset& s) const {
  std::vector<std::string> out;
  s.for_each([&](int i) { out.push_back(label(i)); });
  return out;
}

bool is_antichain(const Order& P, const Subset& A) {
  std::vector<int> elems = A.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (P.compatible(elems[i], elems[j])) return false;
  return true;
}

bool is_dense(const Order& P, const Subset& D) {
  for (int p = 0; p < static_cast<int>(P.size()); ++p)
    if (!P.down_set(p).intersects(D)) return false;
  return true;
}

bool is_filter(const Order& P, const Subset& G) {
  bool ok = true;
  G.for_each([&](int p) {
    // upward closed
    if (!G.contains(P.up_set(p))) ok = false;
  });
  if (!ok) return false;
  std::vector<int> elems = G.elements();
  for (std::size_t i = 0; i < elems.size() && ok; ++i)
    for (std::size_t j = i; j < elems.size() && ok; ++j) {
      Subset common = P.down_set(elems[i]) & P.down_set(elems[j]);
      if (!common.intersects(G)) ok = false;
    }
  return ok;
}

bool is_two_linked(const Order& P, const Subset& G) {
  std::vector<int> elems = G.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!P.compatible(elems[i], elems[j])) return false;
  return true;
}

bool is_semi_separative(const Order& P) {
  Subset minimal = minimal_elements(P);
  for (int p = 0; p < static_cast<int>(P.size()); ++p) {
    if (minimal.test(p)) continue;
    std::vector<int> ext = P.down_set(p).elements();
    bool found = false;
    for (std::size_t i = 0; i < ext.size() && !found; ++i)
      for (std::size_t j = i + 1; j < ext.size() && !found; ++j)
        if (!P.compatible(ext[i], ext[j])) found = true;
    if (!found) return false;
  }
  return true;
}

Subset minimal_elements(const Order& P) {
  Subset out(P.size());
  for (int p = 0; p < static_cast<int>(P.size()); ++p)
    if (P.up_set(p).contains(P.down_set(p))) out.set(p);
  return out;
}

Subset dense_to_maximal_antichain(const Order& P, const Subset& D) {
  if (!is_dense(P, D)) throw Error(errc::not_dense, "subset is not dense");
  Subset A(P.size());
  Subset blocked(P.size());  // compatible with something already picked
  D.for_each([&](int d) {
    if (!blocked.test(d)) {
      A.set(d);
      blocked |= P.compatible_with(d);
    }
  });
  return A;
}

}  // namespace ordbench
