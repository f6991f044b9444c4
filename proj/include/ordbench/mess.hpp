#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordbench/subset.hpp"

namespace ordbench {

constexpr std::size_t kDefaultMaterializeCap = 12;

// {0,1}-valued function on a finite subset of the ground set: `ones ⊆ domain`
// marks the elements mapped to 1.
struct PartialFn {
  Subset domain;
  Subset ones;

  bool operator==(const PartialFn& o) const { return domain == o.domain && ones == o.ones; }

  // s restricted to F ⊆ dom(s).
  PartialFn restrict_to(const Subset& F) const { return PartialFn{F, ones & F}; }
};

// Canonical member order: domain shortlex (size, then ascending index list),
// then the value vector read in domain order.
bool partial_fn_less(const PartialFn& a, const PartialFn& b);

struct TotalFn {
  Subset ones;  // universe = ground size

  bool operator==(const TotalFn& o) const { return ones == o.ones; }
  PartialFn restrict_to(const Subset& F) const { return PartialFn{F, ones & F}; }
  PartialFn as_partial(std::size_t ground_size) const {
    return PartialFn{Subset::full(ground_size), ones};
  }
};

// A binary mess: a family of {0,1}-valued finite partial functions on a
// ground set, closed under restrictions and covering every domain. Stored
// either extensionally (explicit sorted member list) or intensionally
// (membership predicate; materialization gated by a cap).
class Mess {
 public:
  using Predicate = std::function<bool(const PartialFn&)>;

  // Validates both mess clauses; with close=true first adds all restrictions
  // of the listed members. Throws not_restriction_closed, coverage_gap,
  // cap_exceeded.
  static Mess extensional(std::vector<std::string> ground, std::vector<PartialFn> members,
                          bool close, std::size_t cap = kDefaultMaterializeCap);

  // The predicate must be pure and restriction-closed by construction;
  // coverage is the caller's obligation (checked lazily by the solvers).
  static Mess intensional(std::vector<std::string> ground, Predicate predicate,
                          std::size_t materialize_cap = kDefaultMaterializeCap);

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  bool is_extensional() const { return !predicate_; }

  bool contains(const PartialFn& s) const;

  // Extensional members in canonical order.
  const std::vector<PartialFn>& members() const;

  // Extensional copy of an intensional mess (enumerates all partial
  // functions; throws cap_exceeded beyond the cap).
  Mess materialized(std::size_t cap = kDefaultMaterializeCap) const;

  // First F (shortlex) with no member of domain F, or empty if fully
  // covered. Throws cap_exceeded when the ground set is too large to scan.
  std::vector<Subset> uncovered_domains(std::size_t cap = kDefaultMaterializeCap) const;

 private:
  Mess() = default;

  std::vector<std::string> ground_;
  std::vector<PartialFn> members_;  // sorted canonically when extensional
  Predicate predicate_;             // set iff intensional
};

// Domains F ⊆ {0..n-1} in shortlex order (∅, singletons, pairs, ...).
std::vector<Subset> shortlex_domains(std::size_t n);

constexpr std::size_t kDefaultConsistencyCap = 20;

// All total functions consistent with M, i.e. with every finite restriction
// in M, in canonical order (first ground element most significant, 0 < 1).
// For extensional messes the full-domain member list is cross-checked against
// the backtracking enumeration. Throws cap_exceeded, coverage_gap.
std::vector<TotalFn> consistent_functions(const Mess& M, std::size_t cap = kDefaultConsistencyCap);

// CNF over variables 1..num_vars; clauses hold DIMACS-signed literals.
struct Cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs(const std::string& text);
std::vector<std::string> cnf_variable_labels(const Cnf& cnf);  // "v1".."vn"

// Intensional mess with s ∈ M iff s falsifies no clause whose variables all
// lie in dom(s). With validate=true eagerly checks coverage of every domain
// (satisfiability of the induced clauses) and throws coverage_gap at the
// first failure in shortlex order.
Mess mess_from_cnf(const Cnf& cnf, bool validate = false,
                   std::size_t validate_cap = kDefaultMaterializeCap);

}  // namespace ordbench
