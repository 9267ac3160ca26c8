#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "funayama/bits.hpp"

namespace funayama {

/// A finite partially ordered set with named elements. Elements are dense
/// indices into a name table; the order is stored as per-element down-sets
/// and up-sets so subset sweeps stay on bitset operations.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of a cover relation.
  /// Fails with cycle_detected when the closure violates antisymmetry.
  static Poset from_covers(
      const std::vector<std::string>& names,
      const std::vector<std::pair<std::string, std::string>>& covers);

  /// Wraps an explicit relation; `down[x]` must be the full down-set of x
  /// including x itself. Validates reflexivity, antisymmetry, transitivity.
  static Poset from_down_sets(std::vector<std::string> names,
                              std::vector<Bits> down);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws unknown_element

  bool leq(std::size_t x, std::size_t y) const { return down_[y].test(x); }
  /// {y : y ≤ x}, including x.
  const Bits& down(std::size_t x) const { return down_[x]; }
  const Bits& up(std::size_t x) const { return up_[x]; }
  Bits all() const { return Bits::full(size()); }

  /// Greatest lower bound of a subset when it exists. The meet of the empty
  /// subset is the top element when present, absent otherwise; dually for
  /// join.
  std::optional<std::size_t> meet(const Bits& subset) const;
  std::optional<std::size_t> join(const Bits& subset) const;
  std::optional<std::size_t> meet2(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> join2(std::size_t x, std::size_t y) const;

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Cover pairs (lower, upper) of the Hasse diagram, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Same elements, reversed order.
  Poset dual() const;

  /// Element-wise equality of names and order.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.down_ == b.down_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Bits> down_, up_;
};

struct LatticeInfo {
  bool is_bounded = false;
  std::optional<std::size_t> bottom, top;
  bool is_meet_semilattice = false;
  bool is_join_semilattice = false;
  bool is_lattice = false;
  bool is_distributive = false;
};

/// Flags computed by direct definition checks; distributivity by testing
/// x∧(y∨z) = (x∧y)∨(x∧z) over all triples. Non-lattices report
/// is_distributive = false rather than an error.
LatticeInfo classify(const Poset& p);

struct BoundAdjunction {
  Poset extended;
  /// original element index -> extended index; an order embedding that
  /// preserves all existing meets and joins of the original.
  std::vector<std::size_t> inject;
  std::optional<std::size_t> added_bottom, added_top;
};

/// Adds a fresh bottom/top only when missing; when the result would have
/// fewer than two elements, adds a fresh top so that 0 ≠ 1. The empty poset
/// maps into the 2-chain.
BoundAdjunction adjoin_bounds(const Poset& p);

/// Exactly {y : y ≤ x}.
Bits down_set(const Poset& p, std::size_t x);

/// Canonical byte string: equal for two posets iff they are
/// order-isomorphic. Minimizes the adjacency encoding over permutations
/// refined by degree/height invariants.
std::string canonical_form(const Poset& p);

/// Rebuilds the poset encoded by canonical_form, with names x0, x1, ...
Poset poset_from_canonical(const std::string& form);

std::string to_hex(const std::string& bytes);

}  // namespace funayama
