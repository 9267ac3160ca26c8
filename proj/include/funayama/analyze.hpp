#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "funayama/budget.hpp"
#include "funayama/embedding.hpp"
#include "funayama/poset.hpp"
#include "funayama/ro_algebra.hpp"
#include "funayama/zoo.hpp"

namespace funayama {

/// Everything the pipeline classify → adjoin_bounds → pair space → algebra →
/// embedding → subalgebra → density produces for one input, plus the
/// preservation and exactness sweeps. Serialization is deterministic.
struct AnalysisReport {
  LatticeInfo classification;  // of the input poset
  std::optional<std::string> added_bottom, added_top;
  std::size_t pair_space_size = 0;
  std::uint64_t algebra_size = 0;
  std::size_t atom_count = 0;
  std::uint64_t subalgebra_size = 0;
  bool macneille_iso = false;
  /// source element name -> e-image as a sorted list of pairs of names
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
      embedding_images;
  PreservationReport preservation;
  /// all subsets of the input, present when the input is small enough
  std::vector<ExactnessReport> exactness_table;
  bool exactness_table_exhaustive = false;
};

struct AnalyzeOptions {
  Budget budget;
  std::size_t exactness_table_max = 8;
  PreservationOptions preservation;
};

AnalysisReport analyze(const Poset& p, const AnalyzeOptions& options = {});

/// JSON rendering with stable key order and canonically sorted sets.
std::string report_to_json(const AnalysisReport& report, const Poset& input,
                           const Embedding* e = nullptr);
std::string report_to_text(const AnalysisReport& report, const Poset& input);

/// Runs the pipeline and returns both the report and the embedding (the
/// report alone does not keep the algebra alive).
struct Analysis {
  AnalysisReport report;
  Embedding embedding;
};
Analysis analyze_full(const Poset& p, const AnalyzeOptions& options = {});

/// One survey record as a single JSON line (the persisted survey format).
std::string record_to_json_line(const SearchRecord& record);

/// Hasse diagram of a poset as DOT text: one node per element, one
/// undirected edge per cover.
std::string emit_dot(const Poset& p);

/// The pair space as DOT text: an arrow from x to y means y ⊑ x and y is a
/// cover of x from below. Annotations attach node classes naming the source
/// elements whose image contains the pair.
std::string emit_dot(const PairSpace& x,
                     const std::map<std::string, PairSet>* annotations = nullptr);

}  // namespace funayama
