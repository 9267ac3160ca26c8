#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "funayama/poset.hpp"

namespace funayama {

/// On-disk lattice description: a JSON object with an `elements` array of
/// names, a `covers` array of [lower, upper] pairs, and an optional
/// `metadata` string map. Serialization is normalized (elements in order,
/// covers sorted as index pairs) so parse ∘ serialize is the identity on
/// normalized files.
struct LatticeFile {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::string> metadata;
};

LatticeFile parse_lattice_file(const std::string& text);
Poset to_poset(const LatticeFile& file);
Poset parse_lattice(const std::string& text);

LatticeFile to_lattice_file(const Poset& p);
std::string serialize_lattice_file(const LatticeFile& file);

}  // namespace funayama
