#include "ordbench/ordering.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ordbench/error.hpp"

namespace ordbench {

namespace {

std::vector<std::uint64_t> masks_shortlex(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(mask);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a);
    int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    // ascending-index-list lexicographic == colex on reversed.. compare via
    // lowest differing bit: the mask owning it comes first
    std::uint64_t diff = a ^ b;
    return (a & (diff & ~(diff - 1))) != 0;
  });
  return out;
}

// strict "u before v" pair bit
inline int pair_bit(std::size_t n, int u, int v) { return u * static_cast<int>(n) + v; }

}  // namespace

OrderingInstance::OrderingInstance(std::vector<std::string> elements, bool all_subsets,
                                   std::size_t cap)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n > cap)
    throw Error(errc::cap_exceeded, "ground set size " + std::to_string(n) + " exceeds cap " +
                                        std::to_string(cap));
  {
    std::set<std::string> seen(elements_.begin(), elements_.end());
    if (seen.size() != n) throw Error(errc::duplicate_label, "ground set has duplicate elements");
  }

  // Conditions: for each F (shortlex), each permutation of F (lex order),
  // one finite linear order. A condition is encoded by its domain mask plus
  // its strict-pair mask, so L ≤ L' iff both masks of L contain those of L'.
  std::vector<std::string> labels;
  std::vector<std::uint64_t> pair_masks;
  for (std::uint64_t mask : masks_shortlex(n)) {
    std::vector<int> base;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) base.push_back(static_cast<int>(i));
    std::vector<int> perm = base;
    int first = static_cast<int>(labels.size());
    do {
      std::uint64_t pairs = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          pairs |= std::uint64_t{1} << pair_bit(n, perm[i], perm[j]);
      std::string label;
      if (perm.empty()) {
        label = "()";
      } else {
        for (std::size_t i = 0; i < perm.size(); ++i)
          label += (i ? "<" : "") + elements_[static_cast<std::size_t>(perm[i])];
      }
      labels.push_back(label);
      condition_domain_.push_back(mask);
      condition_sequence_.push_back(perm);
      pair_masks.push_back(pairs);
    } while (std::next_permutation(perm.begin(), perm.end()));
    ranges_[mask] = {first, static_cast<int>(labels.size())};
  }

  const std::size_t count = labels.size();
  std::vector<Subset> down(count, Subset(count));
  for (std::size_t q = 0; q < count; ++q)
    for (std::size_t p = 0; p < count; ++p)
      if ((condition_domain_[p] & condition_domain_[q]) == condition_domain_[q] &&
          (pair_masks[p] & pair_masks[q]) == pair_masks[q])
        down[q].set(static_cast<int>(p));
  poset_ = std::make_shared<const Order>(
      Order::from_down_sets(Order::Kind::poset, std::move(labels), std::move(down), count));

  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  if (all_subsets) {
    generating_ = masks_shortlex(n);
  } else {
    for (std::uint64_t mask : masks_shortlex(n))
      if (std::popcount(mask) <= 2) generating_.push_back(mask);
    if (n > 2) generating_.push_back(full);
  }
  std::vector<Subset> antichains;
  antichains.reserve(generating_.size());
  for (std::uint64_t mask : generating_) antichains.push_back(antichain_for(mask));
  family_ = make_antichain_family(poset_, std::move(antichains));
}

Subset OrderingInstance::antichain_for(std::uint64_t domain_mask) const {
  auto it = ranges_.find(domain_mask);
  if (it == ranges_.end()) throw Error(errc::unknown_label, "domain mask out of range");
  Subset A(poset_->size());
  for (int i = it->second.first; i < it->second.second; ++i) A.set(i);
  return A;
}

OrderingInstance::Solution OrderingInstance::solve(SolveOptions options) const {
  TransversalResult res = solve_two_linked_generic(family_, options);
  if (!res.sat)
    throw Error(errc::not_centred, "ordering family unexpectedly unsatisfiable");

  const std::size_t n = elements_.size();
  // ⋃G as a strict relation on X
  std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
  res.solution->members.for_each([&](int cond) {
    const std::vector<int>& perm = condition_sequence_[static_cast<std::size_t>(cond)];
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        before[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])] = true;
  });

  // must be a total order: exactly one orientation per pair, transitive
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (before[i][j]) throw Error(errc::invalid_family, "union relation is reflexive");
        continue;
      }
      if (before[i][j] == before[j][i])
        throw Error(errc::invalid_family, "union relation is not total/antisymmetric");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k && before[i][j] && before[j][k] && !before[i][k])
          throw Error(errc::invalid_family, "union relation is not transitive");

  std::vector<int> sequence(n);
  for (std::size_t i = 0; i < n; ++i) sequence[i] = static_cast<int>(i);
  std::sort(sequence.begin(), sequence.end(),
            [&](int a, int b) { return before[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; });

  Solution sol{{}, std::move(*res.solution)};
  for (int i : sequence) sol.sequence.push_back(elements_[static_cast<std::size_t>(i)]);
  return sol;
}

std::vector<std::string> ordering_principle(std::vector<std::string> elements, bool all_subsets,
                                            std::size_t cap) {
  OrderingInstance instance(std::move(elements), all_subsets, cap);
  return instance.solve().sequence;
}

std::vector<std::string> union_linear_order(const std::vector<std::vector<std::string>>& ordered_blocks) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> position;  // (block, rank)
  std::vector<std::string> all;
  for (std::size_t b = 0; b < ordered_blocks.size(); ++b)
    for (std::size_t r = 0; r < ordered_blocks[b].size(); ++r) {
      const std::string& y = ordered_blocks[b][r];
      if (!position.emplace(y, std::make_pair(b, r)).second)
        throw Error(errc::blocks_overlap, "element " + y + " appears in two blocks", {y});
      all.push_back(y);
    }

  // y ⪯ z iff block(y) < block(z), or same block and y before z, or y = z.
  auto weak_before = [&](const std::string& y, const std::string& z) {
    if (y == z) return true;
    auto py = position.at(y);
    auto pz = position.at(z);
    if (py.first != pz.first) return py.first < pz.first;
    return py.second < pz.second;
  };

  const std::size_t n = all.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool ij = weak_before(all[i], all[j]);
      bool ji = weak_before(all[j], all[i]);
      if (!ij && !ji) throw Error(errc::blocks_overlap, "relation is not total");
      if (i != j && ij && ji) throw Error(errc::blocks_overlap, "relation is not antisymmetric");
      for (std::size_t k = 0; k < n && ij; ++k)
        if (weak_before(all[j], all[k]) && !weak_before(all[i], all[k]))
          throw Error(errc::blocks_overlap, "relation is not transitive");
    }

  std::sort(all.begin(), all.end(), [&](const std::string& y, const std::string& z) {
    return y != z && weak_before(y, z);
  });
  return all;
}

}  // namespace ordbench
