#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funayama/bits.hpp"
#include "funayama/budget.hpp"
#include "funayama/poset.hpp"
#include "funayama/ro_algebra.hpp"

namespace funayama {

/// The map a ↦ □◇⇓(a,0) (and 0 ↦ ∅) from a bounded poset into the
/// regular-open algebra of its pair space. Construction verifies the order
/// embedding property. When the input had to be bounded first, `original`
/// carries the input poset and its injection into the source.
struct Embedding {
  Poset source;  // bounded, 0 ≠ 1
  RegularOpenAlgebra algebra;
  std::vector<Bits> image;  // source element -> member of the algebra

  struct Restriction {
    Poset poset;
    std::vector<std::size_t> inject;  // original index -> source index
  };
  std::optional<Restriction> original;

  const Bits& of(std::size_t source_element) const {
    return image[source_element];
  }
  PairSet image_set(std::size_t source_element) const {
    return {algebra.space().id(), image[source_element]};
  }
};

/// Bounds are adjoined internally when missing (including the empty and
/// one-element inputs).
Embedding embed(const Poset& p, const Budget& budget = {});

/// The embedding of the dual poset into the algebra of the dual pair space.
/// Read through the duality, it preserves all finite joins of p, and all
/// exact meets when p is a join semilattice.
Embedding dual_embed(const Poset& p, const Budget& budget = {});

/// Exactness of a subset per the distributive identity: S has an exact join
/// when ⋁S exists and for every a the meets a∧s all exist, their join
/// exists, and a ∧ ⋁S = ⋁{a∧s}. In a poset a missing intermediate meet
/// makes the subset inexact. Dually for meets.
struct ExactnessReport {
  Bits subset;
  std::optional<std::size_t> join;  // value when the join exists
  bool join_exact = false;
  std::optional<std::size_t> join_failure_witness;
  std::optional<std::size_t> meet;
  bool meet_exact = false;
  std::optional<std::size_t> meet_failure_witness;
};

ExactnessReport exactness(const Poset& p, const Bits& subset);

/// JID: every subset with an existing join has an exact join. MID dually.
/// Decided by full enumeration over the finite universe.
bool satisfies_jid(const Poset& p);
bool satisfies_mid(const Poset& p);

enum class PreservationMode {
  finite_meets,
  finite_joins,
  exact_joins,
  exact_meets,
  all_meets,
  all_joins,
};

const char* to_string(PreservationMode m);

struct PreservationCounterexample {
  PreservationMode mode;
  Bits subset;      // subset of the embedding source
  Bits expected;    // e(operation(S))
  Bits actual;      // algebra-side operation of e[S]
};

struct PreservationOptions {
  bool force_exhaustive = false;
  std::size_t sample_count = 4096;
  std::uint64_t seed = 0x5eed;
};

struct ModeCheck {
  PreservationMode mode;
  bool ok = true;
  bool exhaustive = true;
  std::vector<PreservationCounterexample> counterexamples;
};

/// Compares e(operation(S)) with the algebra-side operation of {e(s)} for
/// every subset S in scope. Sources beyond the subset-sweep budget are
/// sampled unless forced.
ModeCheck check_preservation(const Embedding& e, PreservationMode mode,
                             const Budget& budget = {},
                             const PreservationOptions& opts = {});

struct PreservationReport {
  bool finite_meets_ok = true;
  bool finite_joins_ok = true;
  bool exact_joins_ok = true;
  bool exact_meets_ok = true;
  bool all_meets_ok = true;
  bool all_joins_ok = true;
  bool exhaustive = true;
  std::vector<PreservationCounterexample> counterexamples;
};

PreservationReport check_all_preservation(const Embedding& e,
                                          const Budget& budget = {},
                                          const PreservationOptions& opts = {});

struct CorollaryCheck {
  bool complete_embedding_via_e = false;
  bool jid_and_mid = false;
};

/// Both sides of the complete-embedding criterion for a lattice: whether e
/// preserves every existing meet and join, and whether the lattice satisfies
/// JID and MID. On a finite lattice both flags agree.
CorollaryCheck funayama_corollary_check(const Poset& lattice,
                                        const Budget& budget = {});

}  // namespace funayama
