#include "test_support.hpp"

#include <algorithm>
#include <numeric>

namespace ordbench::testing {

bool oracle_compatible(const Order& P, int p, int q) {
  for (int r = 0; r < static_cast<int>(P.size()); ++r)
    if (P.leq(r, p) && P.leq(r, q)) return true;
  return false;
}

bool oracle_antichain(const Order& P, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (oracle_compatible(P, elems[i], elems[j])) return false;
  return true;
}

bool oracle_dense(const Order& P, const std::vector<int>& elems) {
  for (int p = 0; p < static_cast<int>(P.size()); ++p) {
    bool hit = false;
    for (int q : elems)
      if (P.leq(q, p)) hit = true;
    if (!hit) return false;
  }
  return true;
}

std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(static_cast<int>(i));
    out.push_back(s);
  }
  return out;
}

namespace {

bool extend_transversal(const Order& P, const std::vector<Subset>& antichains,
                        std::vector<int>& picked) {
  if (picked.size() == antichains.size()) return true;
  std::vector<int> options = antichains[picked.size()].elements();
  for (int c : options) {
    bool ok = true;
    for (int prev : picked)
      if (!oracle_compatible(P, prev, c)) ok = false;
    if (!ok) continue;
    picked.push_back(c);
    if (extend_transversal(P, antichains, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> brute_force_transversal(const Order& P,
                                                        const std::vector<Subset>& antichains) {
  std::vector<int> picked;
  if (extend_transversal(P, antichains, picked)) return picked;
  return std::nullopt;
}

std::vector<Subset> truth_table(const Cnf& cnf) {
  std::vector<Subset> out;
  for (const Subset& assignment : all_subsets(cnf.num_vars)) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool satisfied = false;
      for (int lit : clause) {
        int var = (lit > 0 ? lit : -lit) - 1;
        if (assignment.test(var) == (lit > 0)) satisfied = true;
      }
      if (!satisfied) ok = false;
    }
    if (ok) out.push_back(assignment);
  }
  return out;
}

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

std::vector<Order> enumerate_posets(std::size_t n) {
  std::vector<Order> out;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = 0; j < static_cast<int>(n); ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<std::string> names = letters(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) rel[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = true;

    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) ok = false;  // antisymmetry
        for (std::size_t k = 0; k < n && ok; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;  // transitivity
      }
    if (!ok) continue;

    std::vector<Subset> down(n, Subset(n));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (rel[p][q]) down[q].set(static_cast<int>(p));
    out.push_back(Order::from_down_sets(Order::Kind::poset, names, std::move(down)));
  }
  return out;
}

Order random_poset(Rng& rng, std::size_t n, double edge_probability) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(edge_probability);
  std::vector<std::string> names = letters(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(names[static_cast<std::size_t>(perm[i])],
                                        names[static_cast<std::size_t>(perm[j])]);
  return Order::from_pairs(Order::Kind::poset, names, pairs);
}

Order random_order(Rng& rng, std::size_t n, double edge_probability) {
  if (std::bernoulli_distribution(0.5)(rng)) return random_poset(rng, n, edge_probability);
  // preorder: arbitrary random pairs, closed
  std::bernoulli_distribution edge(edge_probability / 2);
  std::vector<std::string> names = letters(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && edge(rng)) pairs.emplace_back(names[i], names[j]);
  return Order::from_pairs(Order::Kind::preorder, names, pairs);
}

std::vector<Subset> random_antichain_family(Rng& rng, const Order& P, std::size_t count,
                                            bool centred) {
  const std::size_t n = P.size();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::vector<Subset> family;
  int witness = pick(rng);
  for (std::size_t k = 0; k < count; ++k) {
    Subset A(n);
    int seed;
    if (centred) {
      std::vector<int> above = P.up_set(witness).elements();
      seed = above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(rng)];
    } else {
      seed = pick(rng);
    }
    A.set(seed);
    // grow with random elements incompatible with everything picked
    for (int tries = 0; tries < static_cast<int>(n); ++tries) {
      int c = pick(rng);
      bool ok = true;
      A.for_each([&](int a) { ok = ok && !P.compatible(a, c); });
      if (ok) A.set(c);
    }
    family.push_back(A);
  }
  return family;
}

Mess random_mess(Rng& rng, const std::vector<std::string>& ground) {
  const std::size_t n = ground.size();
  std::vector<PartialFn> members;
  for (const Subset& F : shortlex_domains(n)) {
    std::vector<int> elems = F.elements();
    const std::size_t k = elems.size();
    const std::uint64_t limit = std::uint64_t{1} << k;
    std::uniform_int_distribution<std::uint64_t> value_mask(1, (std::uint64_t{1} << limit) - 1);
    std::uint64_t included = value_mask(rng);  // nonempty set of value vectors
    for (std::uint64_t v = 0; v < limit; ++v) {
      if (!((included >> v) & 1)) continue;
      Subset ones(n);
      for (std::size_t j = 0; j < k; ++j)
        if ((v >> j) & 1) ones.set(elems[j]);
      members.push_back(PartialFn{F, ones});
    }
  }
  return Mess::extensional(ground, std::move(members), /*close=*/true);
}

}  // namespace ordbench::testing
