#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "funayama/bits.hpp"
#include "funayama/poset.hpp"

namespace funayama {

class PairSpace;

/// A subset of a pair space. Tagged with the identity of the space it lives
/// in; operations mixing sets from different spaces fail with
/// foreign_element.
struct PairSet {
  std::uint64_t space_id = 0;
  Bits members;

  friend bool operator==(const PairSet& a, const PairSet& b) {
    return a.space_id == b.space_id && a.members == b.members;
  }
};

/// The space of pairs (a,b) with a ≰ b over a bounded base poset, ordered by
/// (a,b) ⊑ (c,d) iff a ≤ c and b ≥ d. Principal down-sets ⇓x are precomputed
/// since every downstream loop is made of ⇓ queries.
class PairSpace {
 public:
  /// Requires the base to be bounded with 0 ≠ 1.
  static PairSpace build(const Poset& base);

  std::uint64_t id() const { return id_; }
  const Poset& base() const { return base_; }
  std::size_t size() const { return pairs_.size(); }

  std::pair<std::size_t, std::size_t> pair(std::size_t i) const {
    return pairs_[i];
  }
  std::string pair_name(std::size_t i) const;
  std::optional<std::size_t> find_pair(std::size_t a, std::size_t b) const;
  std::size_t pair_index(std::size_t a, std::size_t b) const;  // unknown_pair

  bool sq_leq(std::size_t i, std::size_t j) const {
    return below_[j].test(i);
  }
  /// ⇓x as a bit mask over pair indices.
  const Bits& below_mask(std::size_t i) const { return below_[i]; }

  PairSet empty_set() const { return {id_, Bits(size())}; }
  PairSet full_set() const { return {id_, Bits::full(size())}; }
  PairSet make_set(const Bits& members) const;

  /// ⇓x = {y | y ⊑ x}.
  PairSet below(std::size_t i) const;

  /// □U = {x | ⇓x ⊆ U} — interior in the downset topology.
  PairSet box(const PairSet& u) const;
  /// ◇U = {x | ⇓x ∩ U ≠ ∅} — closure in the downset topology.
  PairSet diamond(const PairSet& u) const;
  /// □◇U; idempotent on downsets, accepts arbitrary subsets.
  PairSet regularize(const PairSet& u) const;

  bool is_downset(const PairSet& u) const;

  // Bits-level kernels used by carrier construction; no PairSet wrapping.
  Bits box_bits(const Bits& u) const;
  Bits diamond_bits(const Bits& u) const;
  Bits regularize_bits(const Bits& u) const;
  bool is_downset_bits(const Bits& u) const;

  const Bits& check(const PairSet& u) const;  // foreign_element on mismatch

 private:
  std::uint64_t id_ = 0;
  Poset base_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<Bits> below_;
};

struct DualIsoReport {
  bool ok = false;
  std::size_t pair_count = 0;
  /// index in X_P -> index of (b,a) in X_{P∂}
  std::vector<std::size_t> map;
};

/// Verifies that f(a,b) = (b,a) is an order isomorphism X_P ≅ X_{P∂},
/// exhaustively over all pairs of pairs.
DualIsoReport dual_iso(const Poset& p);

}  // namespace funayama
