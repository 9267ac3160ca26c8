#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace funayama {

// Fixed-universe bitset. The universe size is set at construction and all
// binary operations require both operands to share it. One inline word, so
// universes up to 64 (every enumerated lattice and pair space in practice)
// never touch the heap.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  static Bits full(std::size_t universe) {
    Bits b(universe);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // this ⊆ other
  bool subset_of(const Bits& other) const {
    assert(n_ == other.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~other.w_[k]) return false;
    return true;
  }
  bool intersects(const Bits& other) const {
    assert(n_ == other.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & other.w_[k]) return true;
    return false;
  }

  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  // set difference
  Bits& operator-=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  Bits complement() const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Bits& a, const Bits& b) { return !(a == b); }

  // Order used for carrier storage: cardinality first, then the set whose
  // smallest uncommon element is smaller. A linear extension of ⊆ on sets of
  // equal size, and total overall.
  static bool carrier_less(const Bits& a, const Bits& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
      std::uint64_t diff = a.w_[k] ^ b.w_[k];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.w_[k] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(k * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  boost::container::small_vector<std::uint64_t, 1> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace funayama
