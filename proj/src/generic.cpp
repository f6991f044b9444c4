#include "ordbench/generic.hpp"

#include <algorithm>

#include "ordbench/error.hpp"

namespace ordbench {

DenseFamily make_dense_family(OrderPtr order, std::vector<Subset> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!is_dense(*order, members[i]))
      throw Error(errc::not_dense, "family member " + std::to_string(i) + " is not dense");
  return DenseFamily{std::move(order), std::move(members)};
}

Subset principal_upset(const Order& P, int p) { return P.up_set(p); }

Subset compatibility_class(const Order& P, int p) { return P.compatible_with(p); }

Subset directedness_dense_set(const Order& P, int q, int r) {
  Subset D(P.size());
  for (int s = 0; s < static_cast<int>(P.size()); ++s)
    if (!P.compatible(s, q) || !P.compatible(s, r) || (P.leq(s, q) && P.leq(s, r))) D.set(s);
  return D;
}

namespace {

// Bron-Kerbosch without pivoting over the incompatibility graph; n is small
// (exhaustive caps keep it ≤ 20).
void expand_antichains(const Order& P, const std::vector<Subset>& incompat, Subset current,
                       Subset candidates, Subset excluded, std::vector<Subset>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(current);
    return;
  }
  Subset cand = candidates;
  cand.for_each([&](int v) {
    Subset next = current;
    next.set(v);
    expand_antichains(P, incompat, next, candidates & incompat[static_cast<std::size_t>(v)],
                      excluded & incompat[static_cast<std::size_t>(v)], out);
    candidates.reset(v);
    excluded.set(v);
  });
}

std::vector<Subset> all_dense_sets(const Order& P) {
  const std::size_t n = P.size();
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset D(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) D.set(static_cast<int>(i));
    if (is_dense(P, D)) out.push_back(D);
  }
  return out;
}

}  // namespace

std::vector<Subset> maximal_antichains(const Order& P) {
  const std::size_t n = P.size();
  std::vector<Subset> incompat(n);
  for (int p = 0; p < static_cast<int>(n); ++p) {
    incompat[static_cast<std::size_t>(p)] = P.compatible_with(p).complement();
  }
  std::vector<Subset> out;
  expand_antichains(P, incompat, Subset(n), Subset::full(n), Subset(n), out);
  std::sort(out.begin(), out.end(), canonical_subset_less);
  return out;
}

std::vector<Subset> fully_generic_filters(const Order& P, FullyGenericOptions options) {
  const std::size_t n = P.size();
  if (n > options.cap)
    throw Error(errc::cap_exceeded,
                "order size " + std::to_string(n) + " exceeds exhaustive cap " + std::to_string(options.cap));
  // A filter meets every dense set iff it meets every maximal antichain;
  // the naive route enumerates all dense subsets instead.
  std::vector<Subset> basis = options.naive ? all_dense_sets(P) : maximal_antichains(P);

  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset G(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) G.set(static_cast<int>(i));
    bool hits_all = true;
    for (const Subset& b : basis)
      if (!G.intersects(b)) {
        hits_all = false;
        break;
      }
    if (hits_all && is_filter(P, G)) out.push_back(G);
  }
  std::sort(out.begin(), out.end(), canonical_subset_less);
  return out;
}

bool check_lemma_2_2(const Order& P, FullyGenericOptions options) {
  if (!is_semi_separative(P))
    throw Error(errc::not_semi_separative, "order is not semi-separative");
  std::vector<Subset> generics = fully_generic_filters(P, options);
  std::vector<Subset> upsets;
  minimal_elements(P).for_each([&](int m) { upsets.push_back(principal_upset(P, m)); });
  std::sort(upsets.begin(), upsets.end(), canonical_subset_less);
  upsets.erase(std::unique(upsets.begin(), upsets.end()), upsets.end());
  return generics == upsets;
}

GenericFilter find_generic_filter(const DenseFamily& family) {
  const Order& P = *family.order;
  GenericFilter result{family.order, Subset(P.size()), {}};
  if (P.size() == 0) return result;

  int current = -1;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const Subset& D = family.members[i];
    if (!is_dense(P, D))
      throw Error(errc::not_dense, "family member " + std::to_string(i) + " is not dense");
    Subset candidates = current < 0 ? D : D & P.down_set(current);
    // A minimal extension of the current condition lies in every dense set,
    // so this never wipes out on a finite order.
    current = candidates.first();
    result.certificates.push_back(FilterCertificate{static_cast<int>(i), current});
  }
  if (current < 0) current = minimal_elements(P).first();
  result.members = principal_upset(P, current);
  return result;
}

namespace {

void max_antichain_search(const Order& P, int from, Subset current, std::size_t current_size,
                          Subset candidates, Subset& best, std::size_t& best_size) {
  if (current_size > best_size) {
    best = current;
    best_size = current_size;
  }
  if (current_size + candidates.count() <= best_size) return;
  for (int v = candidates.next_after(from - 1); v >= 0; v = candidates.next_after(v)) {
    Subset next = current;
    next.set(v);
    max_antichain_search(P, v + 1, next, current_size + 1,
                         candidates & P.compatible_with(v).complement(), best, best_size);
  }
}

}  // namespace

Subset max_antichain(const Order& P) {
  Subset best(P.size());
  std::size_t best_size = 0;
  // Elements tried in ascending index order, so the first antichain found at
  // the maximum size is the canonical one.
  max_antichain_search(P, 0, Subset(P.size()), 0, Subset::full(P.size()), best, best_size);
  return best;
}

}  // namespace ordbench
