#include "funayama/lattice_file.hpp"

#include <algorithm>

#include <json.hpp>

#include "funayama/errors.hpp"

namespace funayama {

namespace {

// line/column of a byte offset, for parse diagnostics
std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

LatticeFile parse_lattice_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::syntax_error,
          std::string(e.what()) + " (" + locate(text, e.byte) + ")");
  }
  if (!doc.is_object()) raise(Errc::syntax_error, "top level must be an object");

  LatticeFile file;
  if (!doc.contains("elements") || !doc["elements"].is_array())
    raise(Errc::syntax_error, "field 'elements' must be an array of names");
  for (const auto& e : doc["elements"]) {
    if (!e.is_string())
      raise(Errc::syntax_error, "field 'elements' must contain strings");
    file.elements.push_back(e.get<std::string>());
  }
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array())
      raise(Errc::syntax_error, "field 'covers' must be an array of pairs");
    std::size_t at = 0;
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
          !c[1].is_string())
        raise(Errc::syntax_error,
              "covers[" + std::to_string(at) + "] must be [lower, upper]");
      file.covers.emplace_back(c[0].get<std::string>(),
                               c[1].get<std::string>());
      ++at;
    }
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object())
      raise(Errc::syntax_error, "field 'metadata' must be an object");
    for (auto it = doc["metadata"].begin(); it != doc["metadata"].end(); ++it) {
      if (!it.value().is_string())
        raise(Errc::syntax_error, "metadata values must be strings");
      file.metadata[it.key()] = it.value().get<std::string>();
    }
  }
  return file;
}

Poset to_poset(const LatticeFile& file) {
  return Poset::from_covers(file.elements, file.covers);
}

Poset parse_lattice(const std::string& text) {
  return to_poset(parse_lattice_file(text));
}

LatticeFile to_lattice_file(const Poset& p) {
  LatticeFile file;
  file.elements = p.names();
  for (auto [lo, hi] : p.covers())
    file.covers.emplace_back(p.name(lo), p.name(hi));
  return file;
}

std::string serialize_lattice_file(const LatticeFile& file) {
  nlohmann::ordered_json doc;
  doc["elements"] = file.elements;
  auto covers = nlohmann::ordered_json::array();
  // normalize: sort covers by element position, not spelling
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < file.elements.size(); ++i)
    pos[file.elements[i]] = i;
  auto sorted = file.covers;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const auto& a, const auto& b) {
                     auto ka = std::make_pair(pos[a.first], pos[a.second]);
                     auto kb = std::make_pair(pos[b.first], pos[b.second]);
                     return ka < kb;
                   });
  for (const auto& [lo, hi] : sorted)
    covers.push_back(nlohmann::ordered_json::array({lo, hi}));
  doc["covers"] = covers;
  if (!file.metadata.empty()) {
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : file.metadata) meta[k] = v;
    doc["metadata"] = meta;
  }
  return doc.dump(2) + "\n";
}

}  // namespace funayama
