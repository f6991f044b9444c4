#pragma once

#include <string>
#include <vector>

#include "ordbench/generic.hpp"
#include "ordbench/reduction.hpp"

namespace ordbench {

constexpr std::size_t kDefaultChoiceCap = 4096;  // poset element count

struct ChoiceSolution {
  std::vector<std::string> values;  // one value per input set, in input order
  GenericFilter filter;
};

// Poset of partial choice functions under reverse inclusion, dense sets
// D_x = {f : x ∈ dom(f)}, one per input set; the generic filter's union is
// the choice function. Throws empty_member, cap_exceeded.
ChoiceSolution choice_function_poset(const std::vector<std::vector<std::string>>& sets,
                                     std::size_t cap = kDefaultChoiceCap);

struct KoenigSolution {
  std::vector<std::string> values;
  GenericFilter filter;
  std::vector<std::size_t> level_sizes;  // |F_n| = |{f : dom(f) = n}| per prefix length
};

// Prefix variant: conditions are choice functions on {X_0..X_{n-1}}, so the
// poset is the union of the finite levels F_n; dense sets D_n = {f : n ∈ dom(f)}.
KoenigSolution koenig_choice(const std::vector<std::vector<std::string>>& sets,
                             std::size_t cap = kDefaultChoiceCap);

struct SConsistentInstance {
  std::vector<std::string> indices;            // I, in canonical order
  std::vector<std::vector<std::string>> sets;  // A_i per index
  std::vector<std::pair<std::string, std::string>> relation;  // symmetrized on use
};

struct SChoiceResult {
  bool sat = false;
  std::vector<std::string> values;          // per index, when sat
  std::vector<std::string> failed_domain;   // a finite W with no S-consistent choice, when unsat
};

// 𝒜-generic-2-linked route for S-consistent choice: the poset of
// S-consistent partial choice functions with antichains A_W over generating
// domains W (|W| ≤ 2 plus the full index set; all_subsets for every W).
SChoiceResult s_consistent_choice(const SConsistentInstance& instance, bool all_subsets = false,
                                  std::size_t cap = kDefaultChoiceCap);

}  // namespace ordbench
