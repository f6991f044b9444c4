#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordbench/mess.hpp"
#include "ordbench/order.hpp"

namespace ordbench {

// Family of finite antichains of a shared ambient order.
struct AntichainFamily {
  OrderPtr order;
  std::vector<Subset> members;
};

// Validates that every member is an antichain (throws invalid_family).
AntichainFamily make_antichain_family(OrderPtr order, std::vector<Subset> members);

// ∃p such that every antichain contains some a with p ≤ a. For finite
// families this single-witness form coincides with the all-finite-selections
// form.
bool is_centred(const Order& P, const std::vector<Subset>& antichains);

struct CentredWitness {
  int witness;                 // canonically first p
  std::vector<int> selection;  // per antichain, canonically first a ≥ p
};

CentredWitness centred_witness(const Order& P, const std::vector<Subset>& antichains);

// The forward construction: intensional mess on the elements of P with
// m ∈ M iff the 1-valued elements are pairwise compatible and every antichain
// inside dom(m) carries a 1. Restriction-closed by construction; covered
// whenever the family is centred.
Mess mess_from_poset(OrderPtr order, const AntichainFamily& family);

// The proof's covering member for domain F: 1 exactly on the centred
// witness's selections for the antichains contained in F. Throws not_centred.
PartialFn coverage_witness(const Order& P, const std::vector<Subset>& antichains, const Subset& F);

struct SolutionCertificate {
  int antichain_index;
  int witness;  // element of G ∩ A_i
};

struct LinkedGenericSet {
  OrderPtr order;
  Subset members;
  std::vector<SolutionCertificate> certificates;
};

// G = f⁻¹(1) with per-antichain certificates; f must be consistent with
// mess_from_poset(P, family) (throws not_consistent).
LinkedGenericSet two_linked_from_consistent(const AntichainFamily& family, const Mess& mess,
                                            const TotalFn& f);

// The backward construction: the members of M ordered by reverse inclusion,
// with one antichain A_F per domain F in shortlex order.
struct MessPoset {
  OrderPtr order;                 // element i = members[i]
  std::vector<PartialFn> members; // canonical member order
  std::vector<Subset> domains;    // F per antichain, shortlex
  AntichainFamily antichains;     // A_F = {m : dom(m) = F}
};

MessPoset poset_from_mess(const Mess& M, std::size_t cap = kDefaultMaterializeCap);

// f = ⋃G for a 2-linked 𝒜-generic G over poset_from_mess(M); checks the
// singleton property G ∩ A_F = {f↾F}. Throws not_linked, not_generic.
TotalFn consistent_from_two_linked(const Mess& M, const MessPoset& mp, const Subset& G);

struct TransversalResult {
  bool sat = false;
  std::optional<LinkedGenericSet> solution;
  // On unsat: listed indices of the antichains involved in the deepest
  // conflict (assigned prefix plus the wiped-out antichain).
  std::vector<int> conflict;
};

struct SolveOptions {
  bool centred_fast_path = true;
  bool most_constrained_first = false;  // off: listed order, canonical result
};

// One element per antichain, pairwise compatible; exact backtracking with
// forward checking. Throws invalid_family.
TransversalResult solve_two_linked_generic(const AntichainFamily& family, SolveOptions options = {});

// Incremental variant: antichains are appended one at a time and the solver
// keeps its trail, backtracking chronologically on conflict. Result after
// each append equals the one-shot backtracking solve of the prefix family.
class TransversalSolver {
 public:
  explicit TransversalSolver(OrderPtr order);

  // False once the accumulated family has become unsatisfiable.
  bool add_antichain(const Subset& antichain);

  bool sat() const { return sat_; }
  const std::vector<Subset>& antichains() const { return antichains_; }
  TransversalResult result() const;

 private:
  bool extend();

  OrderPtr order_;
  std::vector<Subset> antichains_;
  std::vector<int> trail_;   // chosen element per covered antichain
  bool sat_ = true;
  std::size_t deepest_fail_ = 0;
  std::vector<int> conflict_;
};

}  // namespace ordbench
