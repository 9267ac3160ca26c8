#pragma once

#include <string>
#include <vector>

namespace funayama {

struct FactResult {
  std::string id;
  bool pass = false;
  std::string detail;  // filled on failure
};

/// The built-in regression suite of worked facts about the M3, N5, chain and
/// Boolean-algebra constructions: pair spaces, carriers, atoms, embedding
/// images, complements, subalgebras, density, duality, preservation, and the
/// glued-embedding counterexample.
std::vector<FactResult> run_fact_suite();

}  // namespace funayama
