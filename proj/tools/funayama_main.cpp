#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "funayama/analyze.hpp"
#include "funayama/embedding.hpp"
#include "funayama/errors.hpp"
#include "funayama/lattice_file.hpp"
#include "funayama/verify_paper.hpp"
#include "funayama/zoo.hpp"

namespace {

using namespace funayama;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::syntax_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Poset load_poset(const std::string& path) {
  return parse_lattice(read_file(path));
}

int cmd_analyze(const std::string& path, bool json, const Budget& budget) {
  Poset p = load_poset(path);
  AnalyzeOptions options;
  options.budget = budget;
  Analysis a = analyze_full(p, options);
  if (json)
    std::cout << report_to_json(a.report, p, &a.embedding);
  else
    std::cout << report_to_text(a.report, p);
  return kExitOk;
}

int cmd_catalog(const std::string& name) {
  Poset p = catalog(name);
  std::cout << serialize_lattice_file(to_lattice_file(p));
  return kExitOk;
}

int cmd_embed(const std::string& path, const Budget& budget) {
  Poset p = load_poset(path);
  Embedding e = embed(p, budget);
  const PairSpace& space = e.algebra.space();
  if (e.original)
    std::cout << "bounds adjoined; images over the extended poset\n";
  for (std::size_t a = 0; a < e.source.size(); ++a) {
    std::cout << "e(" << e.source.name(a) << ") = {";
    bool first = true;
    e.image[a].for_each([&](std::size_t i) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << space.pair_name(i);
    });
    std::cout << "}\n";
  }
  PreservationReport r = check_all_preservation(e, budget);
  std::cout << "finite_meets: " << (r.finite_meets_ok ? "preserved" : "violated")
            << "\n";
  std::cout << "finite_joins: " << (r.finite_joins_ok ? "preserved" : "violated")
            << "\n";
  std::cout << "exact_joins: " << (r.exact_joins_ok ? "preserved" : "violated")
            << "\n";
  std::cout << "exact_meets: " << (r.exact_meets_ok ? "preserved" : "violated")
            << "\n";
  std::cout << "all_meets: " << (r.all_meets_ok ? "preserved" : "violated")
            << "\n";
  std::cout << "all_joins: " << (r.all_joins_ok ? "preserved" : "violated")
            << "\n";
  if (!r.exhaustive) std::cout << "(sampled sweep)\n";
  return kExitOk;
}

int cmd_survey(std::size_t nmax, const std::string& out_path, bool resume,
               std::size_t p1_atoms, const Budget& budget) {
  SurveyOptions options;
  options.nmax = nmax;
  options.p1_atoms = p1_atoms;
  options.budget = budget;

  std::size_t skip = 0;
  if (resume && std::filesystem::exists(out_path)) {
    std::ifstream in(out_path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ++skip;
  }

  std::ofstream out(out_path,
                    resume ? std::ios::app : std::ios::trunc);
  if (!out) raise(Errc::syntax_error, "cannot open '" + out_path + "'");

  std::size_t seen = 0, written = 0;
  survey_problem2(options, [&](const SearchRecord& r) {
    ++seen;
    if (seen <= skip) return;
    out << record_to_json_line(r) << "\n";
    out.flush();
    ++written;
  });
  std::cout << "lattices: " << seen << ", records written: " << written
            << (skip ? (", resumed past " + std::to_string(skip)) : "")
            << "\n";
  std::cout << "problem-1 column is bounded evidence only\n";
  return kExitOk;
}

int cmd_search_p1(const std::string& path, std::size_t max_atoms,
                  const Budget& budget) {
  Poset p = load_poset(path);
  Problem1Status status = search_problem1(p, max_atoms, budget);
  switch (status.kind) {
    case Problem1Status::Kind::embedding_found: {
      std::cout << "embedding_found into the Boolean algebra with "
                << status.atoms_used << " atoms\n";
      for (std::size_t x = 0; x < p.size(); ++x) {
        std::cout << "  " << p.name(x) << " -> {";
        bool first = true;
        for (std::size_t b = 0; b < status.atoms_used; ++b)
          if ((status.witness[x] >> b) & 1) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << b;
          }
        std::cout << "}\n";
      }
      break;
    }
    case Problem1Status::Kind::none_within_bound:
      std::cout << "none_within_bound (atoms <= " << status.max_atoms
                << ")\n";
      break;
    case Problem1Status::Kind::skipped:
      std::cout << "skipped\n";
      break;
  }
  std::cout << "bounded search; not a resolution of the general question\n";
  return kExitOk;
}

int cmd_dot(const std::string& path, bool pairs, const Budget& budget) {
  Poset p = load_poset(path);
  if (!pairs) {
    std::cout << emit_dot(p);
    return kExitOk;
  }
  Embedding e = embed(p, budget);
  std::map<std::string, PairSet> annotations;
  for (std::size_t a = 0; a < e.source.size(); ++a)
    annotations.emplace(e.source.name(a), e.image_set(a));
  std::cout << emit_dot(e.algebra.space(), &annotations);
  return kExitOk;
}

int cmd_oracle_check(const std::string& path, const Budget& budget) {
  Poset p = load_poset(path);
  auto adj = adjoin_bounds(p);
  PairSpace x = PairSpace::build(adj.extended);
  RegularOpenAlgebra built = build_ro_algebra(x, budget);
  auto oracle = oracle_ro_enumerate(x, budget);
  std::cout << "construction: " << built.size()
            << " members, oracle: " << oracle.size() << " members\n";
  if (built.carrier() != oracle) {
    std::cout << "MISMATCH\n";
    return kExitVerificationFailed;
  }
  std::cout << "match\n";
  return kExitOk;
}

int cmd_verify_paper() {
  auto results = run_fact_suite();
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (!r.pass && !r.detail.empty()) std::cout << " - " << r.detail;
    std::cout << "\n";
  }
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << (results.size() - failed) << "/" << results.size()
            << " facts hold\n";
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite order theory laboratory: pair spaces, regular-open "
               "Boolean algebras, and embedding diagnostics"};
  app.require_subcommand(1);

  Budget budget = Budget::from_env();
  app.add_option("--max-pairs", budget.max_pairs,
                 "largest pair space analyze will accept");
  app.add_option("--max-generators", budget.max_generators,
                 "largest minimal generating set for carrier construction");
  app.add_option("--budget", budget.max_join_evals,
                 "join evaluations allowed while materializing a carrier");

  std::string file, out_path, name;
  bool json = false, pairs = false, resume = false;
  std::size_t nmax = 6, max_atoms = 3, p1_atoms = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline report");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_flag("--json", json, "machine-readable output");

  auto* catalog_cmd = app.add_subcommand("catalog", "print a named lattice");
  catalog_cmd->add_option("name", name)->required();

  auto* embed_cmd =
      app.add_subcommand("embed", "print e-images and preservation report");
  embed_cmd->add_option("file", file)->required();

  auto* survey_cmd =
      app.add_subcommand("survey", "per-lattice density survey records");
  survey_cmd->add_option("--max-size", nmax, "largest lattice size")
      ->required();
  survey_cmd->add_option("--out", out_path, "output file (JSON lines)")
      ->required();
  survey_cmd->add_flag("--resume", resume, "append past existing records");
  survey_cmd->add_option("--p1-atoms", p1_atoms,
                         "also run the bounded problem-1 search");

  auto* p1_cmd = app.add_subcommand(
      "search-p1", "bounded search for a meets/exact-joins/exact-meets "
                   "preserving embedding");
  p1_cmd->add_option("file", file)->required();
  p1_cmd->add_option("--max-atoms", max_atoms)->required();

  auto* dot_cmd = app.add_subcommand("dot", "diagram text");
  dot_cmd->add_option("file", file)->required();
  dot_cmd->add_flag("--pairs", pairs,
                    "emit the pair space with embedding classes");

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "carrier construction vs brute-force downset oracle");
  oracle_cmd->add_option("file", file)->required();

  app.add_subcommand("verify-paper",
                     "run the built-in suite of worked construction facts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("analyze")) return cmd_analyze(file, json, budget);
    if (app.got_subcommand("catalog")) return cmd_catalog(name);
    if (app.got_subcommand("embed")) return cmd_embed(file, budget);
    if (app.got_subcommand("survey"))
      return cmd_survey(nmax, out_path, resume, p1_atoms, budget);
    if (app.got_subcommand("search-p1"))
      return cmd_search_p1(file, max_atoms, budget);
    if (app.got_subcommand("dot")) return cmd_dot(file, pairs, budget);
    if (app.got_subcommand("oracle-check"))
      return cmd_oracle_check(file, budget);
    if (app.got_subcommand("verify-paper")) return cmd_verify_paper();
  } catch (const Error& e) {
    std::cerr << "error";
    if (!e.stage().empty()) std::cerr << " in " << e.stage();
    std::cerr << ": " << e.what() << "\n";
    return e.code() == Errc::capacity_exceeded ? kExitCapacity : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
