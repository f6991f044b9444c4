#include "ordbench/reduction.hpp"

#include <algorithm>

#include "ordbench/error.hpp"

namespace ordbench {

namespace {

std::string render_partial_fn(const std::vector<std::string>& ground, const PartialFn& s) {
  std::string out = "{";
  bool first = true;
  s.domain.for_each([&](int x) {
    if (!first) out += ",";
    out += ground[static_cast<std::size_t>(x)] + "=" + (s.ones.test(x) ? "1" : "0");
    first = false;
  });
  return out + "}";
}

}  // namespace

AntichainFamily make_antichain_family(OrderPtr order, std::vector<Subset> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!is_antichain(*order, members[i]))
      throw Error(errc::invalid_family, "family member " + std::to_string(i) + " is not an antichain");
  return AntichainFamily{std::move(order), std::move(members)};
}

bool is_centred(const Order& P, const std::vector<Subset>& antichains) {
  for (int p = 0; p < static_cast<int>(P.size()); ++p) {
    bool ok = true;
    for (const Subset& A : antichains)
      if (!A.intersects(P.up_set(p))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

CentredWitness centred_witness(const Order& P, const std::vector<Subset>& antichains) {
  for (int p = 0; p < static_cast<int>(P.size()); ++p) {
    std::vector<int> selection;
    selection.reserve(antichains.size());
    bool ok = true;
    for (const Subset& A : antichains) {
      int a = (A & P.up_set(p)).first();
      if (a < 0) {
        ok = false;
        break;
      }
      selection.push_back(a);
    }
    if (ok) return CentredWitness{p, std::move(selection)};
  }
  throw Error(errc::not_centred, "family is not centred");
}

Mess mess_from_poset(OrderPtr order, const AntichainFamily& family) {
  OrderPtr P = order;
  std::vector<Subset> antichains = family.members;
  auto predicate = [P, antichains](const PartialFn& s) {
    std::vector<int> ones = s.ones.elements();
    for (std::size_t i = 0; i < ones.size(); ++i)
      for (std::size_t j = i + 1; j < ones.size(); ++j)
        if (!P->compatible(ones[i], ones[j])) return false;
    for (const Subset& A : antichains)
      if (s.domain.contains(A) && !A.intersects(s.ones)) return false;
    return true;
  };
  return Mess::intensional(order->labels(), predicate);
}

PartialFn coverage_witness(const Order& P, const std::vector<Subset>& antichains, const Subset& F) {
  CentredWitness cw = centred_witness(P, antichains);
  PartialFn m{F, Subset(P.size())};
  for (std::size_t k = 0; k < antichains.size(); ++k)
    if (F.contains(antichains[k])) m.ones.set(cw.selection[k]);
  return m;
}

LinkedGenericSet two_linked_from_consistent(const AntichainFamily& family, const Mess& mess,
                                            const TotalFn& f) {
  const Order& P = *family.order;
  if (!mess.contains(f.as_partial(P.size())))
    throw Error(errc::not_consistent, "function is not consistent with the mess");
  LinkedGenericSet out{family.order, f.ones, {}};
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    int w = (family.members[i] & out.members).first();
    if (w < 0)
      throw Error(errc::not_consistent, "consistent function misses antichain " + std::to_string(i));
    out.certificates.push_back(SolutionCertificate{static_cast<int>(i), w});
  }
  return out;
}

MessPoset poset_from_mess(const Mess& M, std::size_t cap) {
  Mess mm = M.materialized(cap);
  const std::vector<PartialFn>& members = mm.members();
  const std::size_t count = members.size();
  const std::size_t n = mm.ground_size();

  std::vector<std::string> labels;
  labels.reserve(count);
  for (const PartialFn& s : members) labels.push_back(render_partial_fn(mm.ground(), s));

  // m ≤ m' iff m ⊇ m' (reverse inclusion of graphs).
  auto extends = [&](std::size_t p, std::size_t q) {
    return members[p].domain.contains(members[q].domain) &&
           (members[p].ones & members[q].domain) == members[q].ones;
  };
  std::vector<Subset> down(count, Subset(count));
  for (std::size_t q = 0; q < count; ++q)
    for (std::size_t p = 0; p < count; ++p)
      if (extends(p, q)) down[q].set(static_cast<int>(p));

  auto order = std::make_shared<const Order>(
      Order::from_down_sets(Order::Kind::poset, std::move(labels), std::move(down), count));

  MessPoset mp;
  mp.order = order;
  mp.members = members;
  for (const Subset& F : shortlex_domains(n)) {
    Subset A(count);
    for (std::size_t i = 0; i < count; ++i)
      if (members[i].domain == F) A.set(static_cast<int>(i));
    std::size_t bound = std::uint64_t{1} << F.count();
    if (A.count() > bound)
      throw Error(errc::invalid_family, "antichain exceeds the 2^|F| bound");
    mp.domains.push_back(F);
    mp.antichains.members.push_back(A);
  }
  mp.antichains.order = order;
  for (const Subset& A : mp.antichains.members)
    if (!is_antichain(*order, A))
      throw Error(errc::invalid_family, "same-domain members fail to form an antichain");
  if (!is_centred(*order, mp.antichains.members))
    throw Error(errc::not_centred, "mess-poset family is not centred");
  return mp;
}

TotalFn consistent_from_two_linked(const Mess& M, const MessPoset& mp, const Subset& G) {
  const Order& P = *mp.order;
  if (!is_two_linked(P, G)) throw Error(errc::not_linked, "subset is not 2-linked");
  for (std::size_t k = 0; k < mp.antichains.members.size(); ++k)
    if (!G.intersects(mp.antichains.members[k]))
      throw Error(errc::not_generic, "subset misses antichain " + std::to_string(k));

  const std::size_t n = M.ground_size();
  TotalFn f{Subset(n)};
  Subset covered(n);
  G.for_each([&](int i) {
    f.ones |= mp.members[static_cast<std::size_t>(i)].ones;
    covered |= mp.members[static_cast<std::size_t>(i)].domain;
  });
  if (covered != Subset::full(n))
    throw Error(errc::not_generic, "union of members is not total");
  if (!M.contains(f.as_partial(n)))
    throw Error(errc::not_consistent, "union of members is not consistent with the mess");

  // G ∩ A_F is the single element f↾F.
  for (std::size_t k = 0; k < mp.antichains.members.size(); ++k) {
    Subset hit = G & mp.antichains.members[k];
    PartialFn expected = f.restrict_to(mp.domains[k]);
    if (hit.count() != 1 || !(mp.members[static_cast<std::size_t>(hit.first())] == expected))
      throw Error(errc::not_generic, "G ∩ A_F is not the singleton restriction");
  }
  return f;
}

TransversalSolver::TransversalSolver(OrderPtr order) : order_(std::move(order)) {}

bool TransversalSolver::add_antichain(const Subset& antichain) {
  if (!is_antichain(*order_, antichain))
    throw Error(errc::invalid_family, "member " + std::to_string(antichains_.size()) +
                                          " is not an antichain");
  antichains_.push_back(antichain);
  if (!sat_) return false;
  if (antichain.empty()) {
    sat_ = false;
    conflict_ = {static_cast<int>(antichains_.size() - 1)};
    return false;
  }
  sat_ = extend();
  return sat_;
}

namespace {

std::vector<int> prefix_conflict(const std::size_t assigned, int extra) {
  std::vector<int> out;
  for (std::size_t i = 0; i < assigned; ++i) out.push_back(static_cast<int>(i));
  if (extra >= static_cast<int>(assigned)) out.push_back(extra);
  return out;
}

}  // namespace

bool TransversalSolver::extend() {
  const Order& P = *order_;
  const std::size_t m = antichains_.size();

  auto note_conflict = [&](std::size_t fail_depth, std::size_t assigned, int wiped) {
    if (conflict_.empty() || fail_depth > deepest_fail_) {
      deepest_fail_ = fail_depth;
      conflict_ = prefix_conflict(assigned, wiped);
    }
  };

  int resume_after = -1;
  while (trail_.size() < m) {
    const std::size_t depth = trail_.size();
    Subset allowed = antichains_[depth];
    for (std::size_t i = 0; i < depth; ++i) allowed &= P.compatible_with(trail_[i]);
    if (resume_after < 0 && allowed.empty())
      note_conflict(depth, depth, static_cast<int>(depth));

    bool placed = false;
    for (int c = allowed.next_after(resume_after); c >= 0; c = allowed.next_after(c)) {
      // forward check: each future antichain keeps a surviving candidate
      int wiped = -1;
      for (std::size_t j = depth + 1; j < m && wiped < 0; ++j) {
        Subset future = antichains_[j] & P.compatible_with(c);
        for (std::size_t i = 0; i < depth && future.any(); ++i)
          future &= P.compatible_with(trail_[i]);
        if (future.empty()) wiped = static_cast<int>(j);
      }
      if (wiped >= 0) {
        note_conflict(depth + 1, depth + 1, wiped);
        continue;
      }
      trail_.push_back(c);
      placed = true;
      break;
    }
    resume_after = -1;
    if (placed) continue;
    if (trail_.empty()) return false;
    resume_after = trail_.back();
    trail_.pop_back();
  }
  return true;
}

TransversalResult TransversalSolver::result() const {
  TransversalResult r;
  r.sat = sat_;
  if (sat_) {
    LinkedGenericSet g{order_, Subset(order_->size()), {}};
    for (std::size_t i = 0; i < trail_.size(); ++i) {
      g.members.set(trail_[i]);
      g.certificates.push_back(SolutionCertificate{static_cast<int>(i), trail_[i]});
    }
    r.solution = std::move(g);
  } else {
    r.conflict = conflict_;
  }
  return r;
}

namespace {

// Dynamic-order DFS used by the most-constrained-first heuristic.
bool heuristic_search(const Order& P, const std::vector<Subset>& antichains,
                      std::vector<int>& chosen, std::vector<bool>& done, std::size_t remaining) {
  if (remaining == 0) return true;
  int best = -1;
  std::size_t best_count = 0;
  Subset best_allowed;
  for (std::size_t k = 0; k < antichains.size(); ++k) {
    if (done[k]) continue;
    Subset allowed = antichains[k];
    for (std::size_t i = 0; i < antichains.size(); ++i)
      if (done[i]) allowed &= P.compatible_with(chosen[i]);
    std::size_t cnt = allowed.count();
    if (best < 0 || cnt < best_count) {
      best = static_cast<int>(k);
      best_count = cnt;
      best_allowed = allowed;
    }
    if (cnt == 0) break;
  }
  if (best_count == 0) return false;
  done[static_cast<std::size_t>(best)] = true;
  for (int c = best_allowed.first(); c >= 0; c = best_allowed.next_after(c)) {
    chosen[static_cast<std::size_t>(best)] = c;
    if (heuristic_search(P, antichains, chosen, done, remaining - 1)) return true;
  }
  done[static_cast<std::size_t>(best)] = false;
  return false;
}

}  // namespace

TransversalResult solve_two_linked_generic(const AntichainFamily& family, SolveOptions options) {
  const Order& P = *family.order;
  for (std::size_t i = 0; i < family.members.size(); ++i)
    if (!is_antichain(P, family.members[i]))
      throw Error(errc::invalid_family, "member " + std::to_string(i) + " is not an antichain");

  for (std::size_t i = 0; i < family.members.size(); ++i)
    if (family.members[i].empty()) {
      TransversalResult r;
      r.sat = false;
      r.conflict = {static_cast<int>(i)};
      return r;
    }

  if (options.centred_fast_path && is_centred(P, family.members)) {
    CentredWitness cw = centred_witness(P, family.members);
    TransversalResult r;
    r.sat = true;
    LinkedGenericSet g{family.order, Subset(P.size()), {}};
    for (std::size_t i = 0; i < cw.selection.size(); ++i) {
      g.members.set(cw.selection[i]);
      g.certificates.push_back(SolutionCertificate{static_cast<int>(i), cw.selection[i]});
    }
    r.solution = std::move(g);
    return r;
  }

  if (options.most_constrained_first) {
    std::vector<int> chosen(family.members.size(), -1);
    std::vector<bool> done(family.members.size(), false);
    if (heuristic_search(P, family.members, chosen, done, family.members.size())) {
      TransversalResult r;
      r.sat = true;
      LinkedGenericSet g{family.order, Subset(P.size()), {}};
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        g.members.set(chosen[i]);
        g.certificates.push_back(SolutionCertificate{static_cast<int>(i), chosen[i]});
      }
      r.solution = std::move(g);
      return r;
    }
    TransversalResult r;
    r.sat = false;
    r.conflict = prefix_conflict(family.members.size(), -1);
    return r;
  }

  TransversalSolver solver(family.order);
  for (const Subset& A : family.members) solver.add_antichain(A);
  return solver.result();
}

}  // namespace ordbench
