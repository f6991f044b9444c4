#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordbench {

// Subset of {0..n-1} as a word-packed bitset. The universe size is fixed at
// construction; all binary operations require equal universes.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe);
  static Subset of(std::size_t universe, const std::vector<int>& elements);

  std::size_t universe() const { return n_; }

  bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool any() const { return !empty(); }

  // -1 when empty / no further element.
  int first() const;
  int next_after(int i) const;

  std::vector<int> elements() const;

  bool contains(const Subset& other) const;  // other ⊆ this
  bool intersects(const Subset& other) const;

  Subset operator&(const Subset& o) const;
  Subset operator|(const Subset& o) const;
  Subset operator-(const Subset& o) const;
  Subset complement() const;
  Subset& operator&=(const Subset& o);
  Subset& operator|=(const Subset& o);

  bool operator==(const Subset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int i = first(); i >= 0; i = next_after(i)) fn(i);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Canonical subset order: lexicographic on the ascending element lists, with
// a proper prefix preceding its extensions. Used for all tie-breaking and
// for emitting collections of subsets deterministically.
bool canonical_subset_less(const Subset& a, const Subset& b);

}  // namespace ordbench
