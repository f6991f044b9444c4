#include "ordbench/choice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ordbench/error.hpp"

namespace ordbench {

namespace {

struct PartialChoice {
  std::uint64_t mask = 0;        // domain over set positions
  std::vector<int> choice;       // value index per position, -1 outside the domain
};

std::string choice_label(const std::vector<std::vector<std::string>>& sets, const PartialChoice& c) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!((c.mask >> i) & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(i) + "=" + sets[i][static_cast<std::size_t>(c.choice[i])];
    first = false;
  }
  return out + "}";
}

bool extends_choice(const PartialChoice& f, const PartialChoice& g) {
  if ((f.mask & g.mask) != g.mask) return false;
  for (std::size_t i = 0; i < g.choice.size(); ++i)
    if ((g.mask >> i) & 1 && f.choice[i] != g.choice[i]) return false;
  return true;
}

std::vector<std::uint64_t> masks_shortlex(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(mask);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a);
    int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    std::uint64_t diff = a ^ b;
    return (a & (diff & ~(diff - 1))) != 0;
  });
  return out;
}

// All value tuples on the masked positions, first position most significant.
void enumerate_tuples(const std::vector<std::vector<std::string>>& sets, std::uint64_t mask,
                      std::vector<int>& positions, std::vector<PartialChoice>& out) {
  positions.clear();
  for (std::size_t i = 0; i < sets.size(); ++i)
    if ((mask >> i) & 1) positions.push_back(static_cast<int>(i));
  for (int p : positions)
    if (sets[static_cast<std::size_t>(p)].empty()) return;  // no functions on this domain

  PartialChoice cur;
  cur.mask = mask;
  cur.choice.assign(sets.size(), -1);
  for (int p : positions) cur.choice[static_cast<std::size_t>(p)] = 0;
  while (true) {
    out.push_back(cur);
    int k = static_cast<int>(positions.size()) - 1;
    while (k >= 0) {
      std::size_t p = static_cast<std::size_t>(positions[static_cast<std::size_t>(k)]);
      if (cur.choice[p] + 1 < static_cast<int>(sets[p].size())) {
        ++cur.choice[p];
        break;
      }
      cur.choice[p] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

void validate_sets(const std::vector<std::vector<std::string>>& sets, bool allow_empty) {
  if (sets.size() > 60) throw Error(errc::cap_exceeded, "too many sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!allow_empty && sets[i].empty())
      throw Error(errc::empty_member, "set " + std::to_string(i) + " is empty");
    std::set<std::string> seen(sets[i].begin(), sets[i].end());
    if (seen.size() != sets[i].size())
      throw Error(errc::duplicate_label, "set " + std::to_string(i) + " has duplicate values");
  }
}

void check_count_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw Error(errc::cap_exceeded, "poset would have " + std::to_string(count) +
                                        " conditions, cap " + std::to_string(cap));
}

OrderPtr poset_of_choices(const std::vector<std::vector<std::string>>& sets,
                          const std::vector<PartialChoice>& conditions) {
  const std::size_t count = conditions.size();
  std::vector<std::string> labels;
  labels.reserve(count);
  for (const PartialChoice& c : conditions) labels.push_back(choice_label(sets, c));
  std::vector<Subset> down(count, Subset(count));
  for (std::size_t q = 0; q < count; ++q)
    for (std::size_t p = 0; p < count; ++p)
      if (extends_choice(conditions[p], conditions[q])) down[q].set(static_cast<int>(p));
  return std::make_shared<const Order>(
      Order::from_down_sets(Order::Kind::poset, std::move(labels), std::move(down), count));
}

std::vector<std::string> union_of_members(const std::vector<std::vector<std::string>>& sets,
                                          const std::vector<PartialChoice>& conditions,
                                          const Subset& members) {
  std::vector<int> assigned(sets.size(), -1);
  members.for_each([&](int e) {
    const PartialChoice& c = conditions[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!((c.mask >> i) & 1)) continue;
      if (assigned[i] >= 0 && assigned[i] != c.choice[i])
        throw Error(errc::not_linked, "members disagree at set " + std::to_string(i));
      assigned[i] = c.choice[i];
    }
  });
  std::vector<std::string> values;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (assigned[i] < 0)
      throw Error(errc::not_generic, "no value selected for set " + std::to_string(i));
    values.push_back(sets[i][static_cast<std::size_t>(assigned[i])]);
  }
  return values;
}

}  // namespace

ChoiceSolution choice_function_poset(const std::vector<std::vector<std::string>>& sets,
                                     std::size_t cap) {
  validate_sets(sets, /*allow_empty=*/false);
  std::size_t count = 1;
  for (const auto& s : sets) {
    count *= s.size() + 1;
    check_count_cap(count, cap);
  }

  std::vector<PartialChoice> conditions;
  std::vector<int> scratch;
  for (std::uint64_t mask : masks_shortlex(sets.size()))
    enumerate_tuples(sets, mask, scratch, conditions);
  OrderPtr poset = poset_of_choices(sets, conditions);

  std::vector<Subset> dense;
  for (std::size_t x = 0; x < sets.size(); ++x) {
    Subset D(conditions.size());
    for (std::size_t e = 0; e < conditions.size(); ++e)
      if ((conditions[e].mask >> x) & 1) D.set(static_cast<int>(e));
    dense.push_back(D);
  }

  GenericFilter filter = find_generic_filter(make_dense_family(poset, std::move(dense)));
  ChoiceSolution out{union_of_members(sets, conditions, filter.members), std::move(filter)};
  return out;
}

KoenigSolution koenig_choice(const std::vector<std::vector<std::string>>& sets, std::size_t cap) {
  validate_sets(sets, /*allow_empty=*/false);
  std::vector<std::size_t> level_sizes;
  std::size_t count = 0;
  {
    std::size_t level = 1;
    for (std::size_t k = 0; k <= sets.size(); ++k) {
      level_sizes.push_back(level);
      count += level;
      check_count_cap(count, cap);
      if (k < sets.size()) level *= sets[k].size();
    }
  }

  std::vector<PartialChoice> conditions;
  std::vector<int> scratch;
  std::uint64_t prefix = 0;
  for (std::size_t k = 0; k <= sets.size(); ++k) {
    enumerate_tuples(sets, prefix, scratch, conditions);
    if (k < sets.size()) prefix |= std::uint64_t{1} << k;
  }
  OrderPtr poset = poset_of_choices(sets, conditions);

  std::vector<Subset> dense;
  for (std::size_t x = 0; x < sets.size(); ++x) {
    Subset D(conditions.size());
    for (std::size_t e = 0; e < conditions.size(); ++e)
      if ((conditions[e].mask >> x) & 1) D.set(static_cast<int>(e));
    dense.push_back(D);
  }

  GenericFilter filter = find_generic_filter(make_dense_family(poset, std::move(dense)));
  KoenigSolution out{union_of_members(sets, conditions, filter.members), std::move(filter),
                     std::move(level_sizes)};
  return out;
}

SChoiceResult s_consistent_choice(const SConsistentInstance& instance, bool all_subsets,
                                  std::size_t cap) {
  const std::size_t m = instance.indices.size();
  if (instance.sets.size() != m)
    throw Error(errc::parse_error, "index list and set list differ in length");
  {
    std::set<std::string> seen(instance.indices.begin(), instance.indices.end());
    if (seen.size() != m) throw Error(errc::duplicate_label, "duplicate index label");
  }
  validate_sets(instance.sets, /*allow_empty=*/true);

  std::set<std::pair<std::string, std::string>> rel;
  for (const auto& [u, v] : instance.relation) {
    rel.emplace(u, v);
    rel.emplace(v, u);
  }
  auto related = [&](const std::string& u, const std::string& v) {
    return rel.count(std::make_pair(u, v)) != 0;
  };

  std::size_t count = 1;
  for (const auto& s : instance.sets) {
    count *= s.size() + 1;
    check_count_cap(count, cap);
  }

  auto s_consistent = [&](const PartialChoice& c) {
    std::vector<int> dom;
    for (std::size_t i = 0; i < m; ++i)
      if ((c.mask >> i) & 1) dom.push_back(static_cast<int>(i));
    for (std::size_t a = 0; a < dom.size(); ++a)
      for (std::size_t b = a; b < dom.size(); ++b) {
        const std::string& va =
            instance.sets[static_cast<std::size_t>(dom[a])][static_cast<std::size_t>(c.choice[static_cast<std::size_t>(dom[a])])];
        const std::string& vb =
            instance.sets[static_cast<std::size_t>(dom[b])][static_cast<std::size_t>(c.choice[static_cast<std::size_t>(dom[b])])];
        if (!related(va, vb)) return false;
      }
    return true;
  };

  std::vector<PartialChoice> conditions;
  {
    std::vector<PartialChoice> raw;
    std::vector<int> scratch;
    for (std::uint64_t mask : masks_shortlex(m)) enumerate_tuples(instance.sets, mask, scratch, raw);
    for (const PartialChoice& c : raw)
      if (s_consistent(c)) conditions.push_back(c);
  }
  OrderPtr poset = poset_of_choices(instance.sets, conditions);

  std::vector<std::uint64_t> generating;
  const std::uint64_t full = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
  if (all_subsets) {
    generating = masks_shortlex(m);
  } else {
    for (std::uint64_t mask : masks_shortlex(m))
      if (std::popcount(mask) <= 2) generating.push_back(mask);
    if (m > 2) generating.push_back(full);
  }

  auto domain_labels = [&](std::uint64_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) out.push_back(instance.indices[i]);
    return out;
  };

  std::vector<Subset> antichains;
  for (std::uint64_t mask : generating) {
    Subset A(conditions.size());
    for (std::size_t e = 0; e < conditions.size(); ++e)
      if (conditions[e].mask == mask) A.set(static_cast<int>(e));
    if (A.empty()) {
      // the failed finite hypothesis: W has no S-consistent choice
      SChoiceResult out;
      out.sat = false;
      out.failed_domain = domain_labels(mask);
      return out;
    }
    antichains.push_back(A);
  }

  TransversalResult res = solve_two_linked_generic(make_antichain_family(poset, std::move(antichains)));
  if (!res.sat) {
    SChoiceResult out;
    out.sat = false;
    out.failed_domain =
        domain_labels(res.conflict.empty() ? full : generating[static_cast<std::size_t>(res.conflict.back())]);
    return out;
  }

  SChoiceResult out;
  out.sat = true;
  out.values = union_of_members(instance.sets, conditions, res.solution->members);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (!related(out.values[i], out.values[j]))
        throw Error(errc::not_consistent, "assembled choice violates the relation");
  return out;
}

}  // namespace ordbench
