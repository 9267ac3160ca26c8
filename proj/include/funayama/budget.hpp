#pragma once

#include <cstddef>
#include <cstdint>

namespace funayama {

// Capacity limits for the exponential parts of the pipeline. Each limit that
// trips raises Errc::capacity_exceeded rather than starting an open-ended
// computation.
struct Budget {
  // Largest pair space analyze() will process.
  std::size_t max_pairs = 40;
  // Largest minimal generating set (= atom count) for carrier construction.
  std::size_t max_generators = 20;
  // Join evaluations allowed while materializing a carrier; the carrier of an
  // algebra with k atoms takes exactly 2^k.
  std::uint64_t max_join_evals = std::uint64_t{1} << 20;
  // Largest pair space the brute-force downset oracle will enumerate.
  std::size_t oracle_max_pairs = 14;
  // Largest source for exhaustive 2^n subset sweeps (preservation checks);
  // beyond this the sweep samples unless forced.
  std::size_t subset_sweep_max = 12;
  // Largest n for lattice enumeration.
  std::size_t enum_max = 7;
  // Largest atom count for the bounded problem-1 embedding search.
  std::size_t p1_max_atoms = 6;
  // Backtracking nodes allowed in one problem-1 search.
  std::uint64_t p1_max_nodes = 50'000'000;

  // Defaults with FUNAYAMA_BUDGET (an integer, join-evaluation budget)
  // applied when set.
  static Budget from_env();
};

}  // namespace funayama
