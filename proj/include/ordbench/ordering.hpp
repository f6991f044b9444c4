#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ordbench/reduction.hpp"

namespace ordbench {

constexpr std::size_t kDefaultOrderingCap = 6;

// Ordering-principle pipeline: the poset of linear orders on finite subsets
// of X under reverse inclusion, with one antichain A_F (all linear orders on
// F) per generating domain F. The default generating family is every F with
// |F| ≤ 2 plus the full set; all_subsets switches to every F ⊆ X.
class OrderingInstance {
 public:
  explicit OrderingInstance(std::vector<std::string> elements, bool all_subsets = false,
                            std::size_t cap = kDefaultOrderingCap);

  OrderPtr poset() const { return poset_; }
  const AntichainFamily& family() const { return family_; }
  const std::vector<std::uint64_t>& generating_domains() const { return generating_; }

  // A_F for an arbitrary F ⊆ X (bitmask over element positions).
  Subset antichain_for(std::uint64_t domain_mask) const;

  struct Solution {
    std::vector<std::string> sequence;  // the total order, ascending
    LinkedGenericSet generic;
  };
  Solution solve(SolveOptions options = {}) const;

 private:
  std::vector<std::string> elements_;
  OrderPtr poset_;
  AntichainFamily family_;
  std::vector<std::uint64_t> generating_;
  std::vector<std::uint64_t> condition_domain_;          // per poset element
  std::vector<std::vector<int>> condition_sequence_;     // per poset element
  std::map<std::uint64_t, std::pair<int, int>> ranges_;  // domain mask -> [first, last)
};

std::vector<std::string> ordering_principle(std::vector<std::string> elements,
                                            bool all_subsets = false,
                                            std::size_t cap = kDefaultOrderingCap);

// The block-wise assembly: blocks listed in block-index order, each given as
// its elements in block order; the result linearly orders the union with
// whole blocks ordered by index. Throws blocks_overlap.
std::vector<std::string> union_linear_order(const std::vector<std::vector<std::string>>& ordered_blocks);

}  // namespace ordbench
