#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "funayama/budget.hpp"
#include "funayama/embedding.hpp"
#include "funayama/poset.hpp"

namespace funayama {

/// Named lattices: m3, n5, chain{k}, boolean{k}, m3_dual, n5_dual,
/// b4_plus_top, b4_plus_bottom, diamond (= m3).
Poset catalog(const std::string& name);
std::vector<std::string> catalog_names();

struct CatalogEntry {
  std::string name;
  Poset poset;
  std::string notes;
};

/// The fixed entries (the chain{k}/boolean{k} families are parametric and
/// not listed).
std::vector<CatalogEntry> catalog_entries();

/// Every poset with exactly n elements, once per isomorphism class, in
/// canonical-form order. Generated by extending naturally labeled order
/// relations one maximal element at a time.
void enumerate_posets(std::size_t n,
                      const std::function<void(const Poset&)>& sink,
                      const Budget& budget = {});

/// Every lattice with exactly n elements, once per isomorphism class, in
/// canonical-form order.
void enumerate_lattices(std::size_t n,
                        const std::function<void(const Poset&)>& sink,
                        const Budget& budget = {});
std::vector<Poset> enumerate_lattices(std::size_t n, const Budget& budget = {});

struct Problem1Status {
  enum class Kind { embedding_found, none_within_bound, skipped };
  Kind kind = Kind::skipped;
  std::size_t max_atoms = 0;   // bound the search ran with
  std::size_t atoms_used = 0;  // k of the algebra a witness lives in
  /// element index -> subset of [atoms_used] as a bit mask
  std::vector<std::uint64_t> witness;
};

/// Bounded exhaustive search for an injective map of the lattice into the
/// Boolean algebra with k ≤ max_atoms atoms that is an order embedding and
/// preserves all finite meets, all exact joins, and all exact meets.
/// A none_within_bound outcome is bounded evidence only, never a resolution.
Problem1Status search_problem1(const Poset& lattice, std::size_t max_atoms,
                               const Budget& budget = {});

/// Validates a candidate map for the search_problem1 criteria; exposed so
/// hand-built maps can be checked against the same rules.
struct P1MapCheck {
  bool order_embedding = false;
  bool finite_meets = false;
  bool exact_joins = false;
  bool exact_meets = false;
  bool ok() const {
    return order_embedding && finite_meets && exact_joins && exact_meets;
  }
};
P1MapCheck p1_check_map(const Poset& lattice,
                        const std::vector<std::uint64_t>& images,
                        std::size_t k);

struct SearchRecord {
  std::string canonical_form;  // hex
  std::size_t size = 0;
  bool distributive = false;
  bool macneille_iso = false;
  std::uint64_t algebra_size = 0;
  std::uint64_t subalgebra_size = 0;
  Problem1Status problem1;
};

struct SurveyOptions {
  std::size_t nmax = 6;
  /// when nonzero, run the bounded problem-1 search per lattice
  std::size_t p1_atoms = 0;
  Budget budget;
};

/// One record per enumerated lattice of size 1..nmax, streamed in
/// enumeration order. Distributive lattices always report
/// macneille_iso = true.
void survey_problem2(const SurveyOptions& options,
                     const std::function<void(const SearchRecord&)>& sink);

/// Builds the 4-element Boolean algebra with a new top, compares f[e(a)]
/// with e∂(a) over its atoms, and reports whether they differ for some atom
/// (they do; this is why the meet- and join-side constructions cannot be
/// glued naively).
bool footnote_check();

}  // namespace funayama
