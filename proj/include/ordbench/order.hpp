#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ordbench/subset.hpp"

namespace ordbench {

constexpr std::size_t kDefaultOrderCap = 64;

// A finite partial order or preorder over named elements. leq(p, q) reads
// "p extends q", i.e. p ≤ q. The relation is stored densely as per-element
// up-sets and down-sets, always reflexive and transitively closed; posets are
// additionally antisymmetric (enforced at construction).
//
// Canonical element order is the input label order; every enumeration in the
// library iterates in that order.
class Order {
 public:
  enum class Kind { poset, preorder };

  // Builds from generator pairs (x, y) meaning x ≤ y; takes the
  // reflexive-transitive closure. Throws duplicate_label, unknown_label,
  // antisymmetry_violation (posets only), cap_exceeded.
  static Order from_pairs(Kind kind, std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& pairs,
                          std::size_t cap = kDefaultOrderCap);

  // Builds from a full relation given as down-set rows: rows[q] = {p : p ≤ q}.
  // The relation must already be reflexive and transitive.
  static Order from_down_sets(Kind kind, std::vector<std::string> labels,
                              std::vector<Subset> down_rows, std::size_t cap = kDefaultOrderCap);

  Kind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& label) const;  // throws unknown_label

  bool leq(int p, int q) const { return up_[static_cast<std::size_t>(p)].test(q); }

  const Subset& up_set(int p) const { return up_[static_cast<std::size_t>(p)]; }      // {q : p ≤ q}
  const Subset& down_set(int p) const { return down_[static_cast<std::size_t>(p)]; }  // {q : q ≤ p}

  bool compatible(int p, int q) const { return compat_[static_cast<std::size_t>(p)].test(q); }
  const Subset& compatible_with(int p) const { return compat_[static_cast<std::size_t>(p)]; }

  Subset empty_subset() const { return Subset(size()); }
  Subset full_subset() const { return Subset::full(size()); }
  Subset subset_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const Subset& s) const;

 private:
  Order(Kind kind, std::vector<std::string> labels);
  void finish(std::vector<Subset> down_rows);  // derives up/compat, checks invariants

  Kind kind_;
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<Subset> compat_;
};

using OrderPtr = std::shared_ptr<const Order>;

bool is_antichain(const Order& P, const Subset& A);
bool is_dense(const Order& P, const Subset& D);
bool is_filter(const Order& P, const Subset& G);  // ∅ counts as a filter
bool is_two_linked(const Order& P, const Subset& G);
bool is_semi_separative(const Order& P);

// {p : no q with q ≤ p and not p ≤ q}; for posets this is the usual
// "no strictly smaller element".
Subset minimal_elements(const Order& P);

// Greedy maximal antichain inside a dense set, scanning in canonical element
// order. Throws not_dense.
Subset dense_to_maximal_antichain(const Order& P, const Subset& D);

}  // namespace ordbench
