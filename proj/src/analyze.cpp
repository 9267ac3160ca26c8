#include "funayama/analyze.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "funayama/errors.hpp"

namespace funayama {

namespace {

[[noreturn]] void rethrow_with_stage(Error& e, const char* stage) {
  e.set_stage(stage);
  throw e;
}

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (Error& e) {
    if (e.stage().empty()) rethrow_with_stage(e, name);
    throw;
  }
}

std::vector<std::pair<std::string, std::string>> pair_list(
    const PairSpace& space, const Bits& members) {
  std::vector<std::pair<std::string, std::string>> out;
  members.for_each([&](std::size_t i) {
    auto [a, b] = space.pair(i);
    out.emplace_back(space.base().name(a), space.base().name(b));
  });
  return out;  // ascending pair index = (first, second) lexicographic
}

}  // namespace

Analysis analyze_full(const Poset& p, const AnalyzeOptions& options) {
  Analysis out;
  AnalysisReport& r = out.report;
  r.classification = stage("classify", [&] { return classify(p); });

  auto adj = stage("adjoin_bounds", [&] { return adjoin_bounds(p); });
  if (adj.added_bottom) r.added_bottom = adj.extended.name(*adj.added_bottom);
  if (adj.added_top) r.added_top = adj.extended.name(*adj.added_top);

  {
    PairSpace probe = stage("build_pair_space",
                            [&] { return PairSpace::build(adj.extended); });
    if (probe.size() > options.budget.max_pairs)
      stage("build_pair_space", [&]() -> int {
        raise(Errc::capacity_exceeded,
              std::to_string(probe.size()) + " pairs exceed the limit of " +
                  std::to_string(options.budget.max_pairs));
      });
    r.pair_space_size = probe.size();
  }

  out.embedding = stage("embed", [&] { return embed(p, options.budget); });
  Embedding& e = out.embedding;
  r.algebra_size = e.algebra.size();
  r.atom_count = e.algebra.atoms().size();

  Subalgebra sub = stage("generated_subalgebra", [&] {
    return generated_subalgebra_bits(e.algebra, e.image);
  });
  r.subalgebra_size = sub.members.size();
  r.macneille_iso = stage("macneille_iso_check",
                          [&] { return macneille_iso_check(e.algebra, sub); });

  for (std::size_t a = 0; a < e.source.size(); ++a)
    r.embedding_images.emplace_back(e.source.name(a),
                                    pair_list(e.algebra.space(), e.image[a]));

  r.preservation = stage("check_preservation", [&] {
    return check_all_preservation(e, options.budget, options.preservation);
  });

  if (p.size() <= options.exactness_table_max) {
    r.exactness_table_exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << p.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Bits s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        if ((mask >> i) & 1) s.set(i);
      r.exactness_table.push_back(exactness(p, s));
    }
    std::sort(r.exactness_table.begin(), r.exactness_table.end(),
              [](const ExactnessReport& a, const ExactnessReport& b) {
                return Bits::carrier_less(a.subset, b.subset);
              });
  }
  return out;
}

AnalysisReport analyze(const Poset& p, const AnalyzeOptions& options) {
  return analyze_full(p, options).report;
}

namespace {

nlohmann::ordered_json names_of(const Poset& p, const Bits& subset) {
  auto arr = nlohmann::ordered_json::array();
  subset.for_each([&](std::size_t i) { arr.push_back(p.name(i)); });
  return arr;
}

nlohmann::ordered_json json_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [a, b] : pairs)
    arr.push_back(nlohmann::ordered_json::array({a, b}));
  return arr;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r, const Poset& input,
                           const Embedding* e) {
  nlohmann::ordered_json doc;
  auto& cls = doc["classification"];
  cls["is_bounded"] = r.classification.is_bounded;
  cls["bottom"] = r.classification.bottom
                      ? nlohmann::ordered_json(input.name(*r.classification.bottom))
                      : nlohmann::ordered_json(nullptr);
  cls["top"] = r.classification.top
                   ? nlohmann::ordered_json(input.name(*r.classification.top))
                   : nlohmann::ordered_json(nullptr);
  cls["is_meet_semilattice"] = r.classification.is_meet_semilattice;
  cls["is_join_semilattice"] = r.classification.is_join_semilattice;
  cls["is_lattice"] = r.classification.is_lattice;
  cls["is_distributive"] = r.classification.is_distributive;

  doc["added_bottom"] = r.added_bottom ? nlohmann::ordered_json(*r.added_bottom)
                                       : nlohmann::ordered_json(nullptr);
  doc["added_top"] = r.added_top ? nlohmann::ordered_json(*r.added_top)
                                 : nlohmann::ordered_json(nullptr);
  doc["pair_space_size"] = r.pair_space_size;
  doc["algebra_size"] = r.algebra_size;
  doc["atom_count"] = r.atom_count;
  doc["subalgebra_size"] = r.subalgebra_size;
  doc["macneille_iso"] = r.macneille_iso;

  auto& images = doc["embedding_images"];
  images = nlohmann::ordered_json::object();
  for (const auto& [name, pairs] : r.embedding_images)
    images[name] = json_pairs(pairs);

  auto& pres = doc["preservation"];
  pres["finite_meets_ok"] = r.preservation.finite_meets_ok;
  pres["finite_joins_ok"] = r.preservation.finite_joins_ok;
  pres["exact_joins_ok"] = r.preservation.exact_joins_ok;
  pres["exact_meets_ok"] = r.preservation.exact_meets_ok;
  pres["all_meets_ok"] = r.preservation.all_meets_ok;
  pres["all_joins_ok"] = r.preservation.all_joins_ok;
  pres["exhaustive"] = r.preservation.exhaustive;
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : r.preservation.counterexamples) {
    nlohmann::ordered_json one;
    one["mode"] = to_string(c.mode);
    if (e) {
      one["subset"] = names_of(e->source, c.subset);
      one["expected"] = json_pairs(pair_list(e->algebra.space(), c.expected));
      one["actual"] = json_pairs(pair_list(e->algebra.space(), c.actual));
    } else {
      one["subset_size"] = c.subset.count();
    }
    cex.push_back(one);
  }
  pres["counterexamples"] = cex;

  doc["exactness_table_exhaustive"] = r.exactness_table_exhaustive;
  auto table = nlohmann::ordered_json::array();
  for (const auto& x : r.exactness_table) {
    nlohmann::ordered_json row;
    row["subset"] = names_of(input, x.subset);
    row["join"] = x.join ? nlohmann::ordered_json(input.name(*x.join))
                         : nlohmann::ordered_json(nullptr);
    row["join_exact"] = x.join_exact;
    row["join_failure_witness"] =
        x.join_failure_witness
            ? nlohmann::ordered_json(input.name(*x.join_failure_witness))
            : nlohmann::ordered_json(nullptr);
    row["meet"] = x.meet ? nlohmann::ordered_json(input.name(*x.meet))
                         : nlohmann::ordered_json(nullptr);
    row["meet_exact"] = x.meet_exact;
    row["meet_failure_witness"] =
        x.meet_failure_witness
            ? nlohmann::ordered_json(input.name(*x.meet_failure_witness))
            : nlohmann::ordered_json(nullptr);
    table.push_back(row);
  }
  doc["exactness_table"] = table;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r, const Poset& input) {
  std::ostringstream out;
  const auto& c = r.classification;
  out << "elements: " << input.size() << "\n";
  out << "bounded: " << (c.is_bounded ? "yes" : "no");
  if (c.bottom) out << ", bottom = " << input.name(*c.bottom);
  if (c.top) out << ", top = " << input.name(*c.top);
  out << "\n";
  out << "meet semilattice: " << (c.is_meet_semilattice ? "yes" : "no")
      << ", join semilattice: " << (c.is_join_semilattice ? "yes" : "no")
      << "\n";
  out << "lattice: " << (c.is_lattice ? "yes" : "no")
      << ", distributive: " << (c.is_distributive ? "yes" : "no") << "\n";
  if (r.added_bottom) out << "adjoined bottom: " << *r.added_bottom << "\n";
  if (r.added_top) out << "adjoined top: " << *r.added_top << "\n";
  out << "pair space size: " << r.pair_space_size << "\n";
  out << "algebra size: " << r.algebra_size << " (" << r.atom_count
      << " atoms)\n";
  out << "generated subalgebra size: " << r.subalgebra_size << "\n";
  out << "macneille iso (subalgebra dense): "
      << (r.macneille_iso ? "yes" : "no") << "\n";
  out << "preservation:";
  out << " finite_meets=" << (r.preservation.finite_meets_ok ? "ok" : "FAIL");
  out << " finite_joins=" << (r.preservation.finite_joins_ok ? "ok" : "FAIL");
  out << " exact_joins=" << (r.preservation.exact_joins_ok ? "ok" : "FAIL");
  out << " exact_meets=" << (r.preservation.exact_meets_ok ? "ok" : "FAIL");
  out << " all_meets=" << (r.preservation.all_meets_ok ? "ok" : "FAIL");
  out << " all_joins=" << (r.preservation.all_joins_ok ? "ok" : "FAIL");
  out << (r.preservation.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  return out.str();
}

std::string record_to_json_line(const SearchRecord& r) {
  nlohmann::ordered_json doc;
  doc["canonical_form"] = r.canonical_form;
  doc["size"] = r.size;
  doc["distributive"] = r.distributive;
  doc["macneille_iso"] = r.macneille_iso;
  doc["algebra_size"] = r.algebra_size;
  doc["subalgebra_size"] = r.subalgebra_size;
  nlohmann::ordered_json p1;
  switch (r.problem1.kind) {
    case Problem1Status::Kind::skipped:
      p1["status"] = "skipped";
      break;
    case Problem1Status::Kind::embedding_found: {
      p1["status"] = "embedding_found";
      p1["atoms_used"] = r.problem1.atoms_used;
      auto w = nlohmann::ordered_json::array();
      for (auto mask : r.problem1.witness) w.push_back(mask);
      p1["witness"] = w;
      break;
    }
    case Problem1Status::Kind::none_within_bound:
      p1["status"] = "none_within_bound";
      p1["bound"] = r.problem1.max_atoms;
      break;
  }
  p1["note"] = "bounded evidence only";
  doc["problem1"] = p1;
  return doc.dump();
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string emit_dot(const Poset& p) {
  std::ostringstream out;
  out << "graph poset {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << "  " << quote(p.name(i)) << ";\n";
  for (auto [lo, hi] : p.covers())
    out << "  " << quote(p.name(lo)) << " -- " << quote(p.name(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const PairSpace& x,
                     const std::map<std::string, PairSet>* annotations) {
  std::ostringstream out;
  out << "digraph pair_space {\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << "  " << quote(x.pair_name(i));
    if (annotations) {
      std::string classes;
      for (const auto& [name, set] : *annotations) {
        if (x.check(set).test(i)) {
          if (!classes.empty()) classes += " ";
          classes += "e_" + name;
        }
      }
      if (!classes.empty()) out << " [class=" << quote(classes) << "]";
    }
    out << ";\n";
  }
  // arrows point from each pair to the pairs it covers from above in ⊑
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i == j || !x.sq_leq(i, j)) continue;
      bool cover = true;
      for (std::size_t mid = 0; cover && mid < x.size(); ++mid)
        if (mid != i && mid != j && x.sq_leq(i, mid) && x.sq_leq(mid, j))
          cover = false;
      if (cover)
        out << "  " << quote(x.pair_name(j)) << " -> " << quote(x.pair_name(i))
            << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace funayama
