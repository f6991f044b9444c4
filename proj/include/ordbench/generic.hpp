#pragma once

#include <vector>

#include "ordbench/order.hpp"

namespace ordbench {

constexpr std::size_t kDefaultExhaustiveCap = 20;

// Family of dense subsets of a shared ambient order.
struct DenseFamily {
  OrderPtr order;
  std::vector<Subset> members;
};

// Validates density of every member (throws not_dense).
DenseFamily make_dense_family(OrderPtr order, std::vector<Subset> members);

struct FilterCertificate {
  int family_index;
  int witness;  // element of G ∩ D_i
};

struct GenericFilter {
  OrderPtr order;
  Subset members;
  std::vector<FilterCertificate> certificates;
};

Subset principal_upset(const Order& P, int p);  // {q : p ≤ q}

Subset compatibility_class(const Order& P, int p);  // {q : q ⊥̸ p}

// D = {s : s ⊥ q ∨ s ⊥ r ∨ (s ≤ q ∧ s ≤ r)}; dense in every finite order.
Subset directedness_dense_set(const Order& P, int q, int r);

// All maximal antichains (maximal cliques of the incompatibility graph),
// emitted in canonical subset order.
std::vector<Subset> maximal_antichains(const Order& P);

struct FullyGenericOptions {
  std::size_t cap = kDefaultExhaustiveCap;
  // All-subsets cross-check of the dense family instead of the
  // maximal-antichain basis.
  bool naive = false;
};

// All filters intersecting every dense subset, in canonical subset order.
// Throws cap_exceeded beyond options.cap elements.
std::vector<Subset> fully_generic_filters(const Order& P, FullyGenericOptions options = {});

// True iff the fully generic filters are exactly the principal up-sets of
// minimal elements. Requires a semi-separative order.
bool check_lemma_2_2(const Order& P, FullyGenericOptions options = {});

// Decreasing-chain construction: hits each listed dense set in order, taking
// the canonically first extension each time; returns the upward closure of
// the chain with one certificate per dense set.
GenericFilter find_generic_filter(const DenseFamily& family);

// An antichain of maximum cardinality (exact branch and bound); ties broken
// by canonical subset order.
Subset max_antichain(const Order& P);

}  // namespace ordbench
