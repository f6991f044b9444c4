#include "ordbench/subset.hpp"

#include <bit>
#include <cassert>

namespace ordbench {

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

Subset Subset::of(std::size_t universe, const std::vector<int>& elements) {
  Subset s(universe);
  for (int e : elements) s.set(e);
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

int Subset::first() const { return next_after(-1); }

int Subset::next_after(int i) const {
  std::size_t w = static_cast<std::size_t>(i + 1) >> 6;
  if (w >= words_.size()) return -1;
  std::uint64_t cur = words_[w] & (~std::uint64_t{0} << ((i + 1) & 63));
  while (true) {
    if (cur != 0) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(cur)));
    if (++w >= words_.size()) return -1;
    cur = words_[w];
  }
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

bool Subset::contains(const Subset& other) const {
  assert(n_ == other.n_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (other.words_[w] & ~words_[w]) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const {
  assert(n_ == other.n_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

Subset Subset::operator&(const Subset& o) const {
  Subset r = *this;
  r &= o;
  return r;
}

Subset Subset::operator|(const Subset& o) const {
  Subset r = *this;
  r |= o;
  return r;
}

Subset Subset::operator-(const Subset& o) const {
  assert(n_ == o.n_);
  Subset r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
  return r;
}

Subset Subset::complement() const { return full(n_) - *this; }

Subset& Subset::operator&=(const Subset& o) {
  assert(n_ == o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

Subset& Subset::operator|=(const Subset& o) {
  assert(n_ == o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

bool canonical_subset_less(const Subset& a, const Subset& b) {
  int x = a.first();
  int y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next_after(x);
    y = b.next_after(y);
  }
  return x < 0 && y >= 0;
}

}  // namespace ordbench
