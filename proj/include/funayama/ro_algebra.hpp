#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "funayama/bits.hpp"
#include "funayama/budget.hpp"
#include "funayama/pair_space.hpp"

namespace funayama {

/// The complete Boolean algebra of □◇-fixpoint downsets of a pair space.
/// Meets are intersections, the join of a family is □◇ of its union, and the
/// complement of U is X \ ◇U. The carrier is materialized as the set of all
/// joins of subsets of the principal regular opens {□◇⇓x : x ∈ X}, stored
/// sorted by (cardinality, lexicographic members).
class RegularOpenAlgebra {
 public:
  const PairSpace& space() const { return space_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<Bits>& carrier() const { return carrier_; }
  const Bits& member(std::size_t i) const { return carrier_[i]; }

  std::optional<std::size_t> index_of(const Bits& u) const;
  bool contains(const PairSet& u) const;
  /// Carrier index of a set; foreign_element if absent.
  std::size_t require(const PairSet& u) const;

  PairSet bottom_set() const { return space_.empty_set(); }
  PairSet top_set() const { return space_.full_set(); }

  PairSet meet(const PairSet& u, const PairSet& v) const;
  /// n-ary meet; the meet over the empty family is the top.
  PairSet meet_all(std::span<const PairSet> us) const;
  /// n-ary join □◇⋃; the join over the empty family is the bottom.
  PairSet join_all(std::span<const PairSet> us) const;
  PairSet complement(const PairSet& u) const;

  /// Minimal nonzero carrier members. Every nonzero member is the join of
  /// the atoms below it.
  const std::vector<Bits>& atoms() const { return atoms_; }
  std::vector<PairSet> atom_sets() const;

  friend RegularOpenAlgebra build_ro_algebra(const PairSpace& x,
                                             const Budget& budget);

 private:
  PairSpace space_;
  std::vector<Bits> carrier_;  // sorted by Bits::carrier_less
  std::vector<Bits> atoms_;    // likewise sorted
};

RegularOpenAlgebra build_ro_algebra(const PairSpace& x,
                                    const Budget& budget = {});

/// Brute-force oracle: enumerates every ⊑-downset of the space recursively
/// and keeps the □◇-fixpoints, with □ and ◇ evaluated straight from their
/// definitions (no shared kernels with the carrier construction). Sorted in
/// carrier order so the result can be compared to a carrier directly.
std::vector<Bits> oracle_ro_enumerate(const PairSpace& x,
                                      const Budget& budget = {});

/// A subset of a carrier containing bottom and top, closed under meet and
/// complement. Stored as sorted carrier indices of the parent.
struct Subalgebra {
  std::vector<std::size_t> members;
};

/// Least subalgebra containing the generators, by fixpoint closure under
/// meet and complement.
Subalgebra generated_subalgebra(const RegularOpenAlgebra& b,
                                std::span<const PairSet> gens);
Subalgebra generated_subalgebra_bits(const RegularOpenAlgebra& b,
                                     std::span<const Bits> gens);

/// True iff every nonzero member of b has a nonzero member of s below it.
bool is_dense_subalgebra(const RegularOpenAlgebra& b, const Subalgebra& s);

/// Finite case: b is (isomorphic to) the MacNeille completion of s iff s is
/// dense in b iff s is all of b. Verifies the equivalence while answering.
bool macneille_iso_check(const RegularOpenAlgebra& b, const Subalgebra& s);

struct AxiomReport {
  bool ok = true;
  std::string violation;  // first failure, empty when ok
  std::uint64_t pair_checks = 0;
  std::uint64_t triple_checks = 0;
  bool exhaustive = true;
};

/// Checks lattice axioms, distributivity, and complement laws over the
/// carrier (or a subalgebra of it). Exhaustive through `exhaustive_cap`
/// members; beyond that, triples are sampled deterministically.
AxiomReport verify_boolean_axioms(const RegularOpenAlgebra& b,
                                  const Subalgebra* sub = nullptr,
                                  std::size_t exhaustive_cap = 256);

}  // namespace funayama
