#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "funayama/errors.hpp"
#include "funayama/zoo.hpp"
#include "test_util.hpp"

using namespace funayama;

TEST_CASE("catalog entries") {
  CHECK(catalog("m3").size() == 5);
  CHECK(catalog("n5").size() == 5);
  CHECK(catalog("diamond") == catalog("m3"));
  CHECK(catalog("chain1").size() == 1);
  CHECK(catalog("chain5").size() == 5);
  CHECK(catalog("boolean0").size() == 1);
  CHECK(catalog("boolean2").size() == 4);
  CHECK(catalog("boolean3").size() == 8);
  CHECK(catalog("b4_plus_top").size() == 5);
  CHECK(catalog("b4_plus_bottom").size() == 5);
  CHECK(canonical_form(catalog("m3_dual")) == canonical_form(catalog("m3")));
  CHECK(canonical_form(catalog("b4_plus_bottom")) ==
        canonical_form(catalog("b4_plus_top").dual()));

  // b4_plus_top: bounded, distributive, with t = a∨b under the new top
  Poset p = catalog("b4_plus_top");
  auto info = classify(p);
  CHECK(info.is_lattice);
  CHECK(info.is_distributive);
  CHECK(*p.top() == p.index_of("1"));

  CHECK_THROWS_AS((void)catalog("nope"), Error);
  CHECK_THROWS_AS((void)catalog("chain0"), Error);
  CHECK_THROWS_AS((void)catalog("boolean99"), Error);
  try {
    (void)catalog("nope");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_name);
  }
}

TEST_CASE("catalog entries are unique, classifiable, and match catalog()") {
  auto entries = catalog_entries();
  std::set<std::string> names;
  for (const auto& entry : entries) {
    CHECK(names.insert(entry.name).second);
    CHECK(!entry.notes.empty());
    CHECK(classify(entry.poset).is_lattice);
    CHECK(catalog(entry.name) == entry.poset);
  }
}

TEST_CASE("lattice enumeration counts match the known table") {
  // 1, 1, 1, 2, 5, 15, 53 lattices on 1..7 unlabeled elements (OEIS A006966)
  const std::size_t expected[] = {1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(enumerate_lattices(n).size() == expected[n - 1]);
}

TEST_CASE("poset enumeration counts match the known table") {
  // 1, 2, 5, 16, 63 posets on 1..5 unlabeled elements (OEIS A000112)
  const std::size_t expected[] = {1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    enumerate_posets(n, [&](const Poset&) { ++count; });
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("enumeration soundness") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> forms;
    for (const Poset& p : enumerate_lattices(n)) {
      CHECK(p.size() == n);
      CHECK(classify(p).is_lattice);
      auto form = canonical_form(p);
      CHECK(forms.insert(form).second);  // no isomorphic duplicates
    }
    // closed under duality
    for (const Poset& p : enumerate_lattices(n))
      CHECK(forms.count(canonical_form(p.dual())) == 1);
  }
  // the stream is sorted by canonical form
  auto ls = enumerate_lattices(6);
  for (std::size_t i = 1; i < ls.size(); ++i)
    CHECK(canonical_form(ls[i - 1]) < canonical_form(ls[i]));
}

TEST_CASE("enumeration contains the named lattices") {
  auto forms5 = [&] {
    std::set<std::string> out;
    for (const Poset& p : enumerate_lattices(5)) out.insert(canonical_form(p));
    return out;
  }();
  CHECK(forms5.count(canonical_form(catalog("m3"))));
  CHECK(forms5.count(canonical_form(catalog("n5"))));
  CHECK(forms5.count(canonical_form(catalog("b4_plus_top"))));
  CHECK(forms5.count(canonical_form(catalog("chain5"))));

  auto ls4 = enumerate_lattices(4);
  std::set<std::string> forms4;
  for (const Poset& p : ls4) forms4.insert(canonical_form(p));
  CHECK(forms4.count(canonical_form(catalog("boolean2"))));
  CHECK(forms4.count(canonical_form(catalog("chain4"))));
}

TEST_CASE("enumeration respects the size bound") {
  Budget budget;
  budget.enum_max = 3;
  CHECK_THROWS_AS((void)enumerate_lattices(4, budget), Error);
}

TEST_CASE("every enumerated poset is a poset, lattices are the lattice subset") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> poset_forms, lattice_forms;
    enumerate_posets(n,
                     [&](const Poset& p) { poset_forms.insert(canonical_form(p)); });
    for (const Poset& p : enumerate_lattices(n))
      lattice_forms.insert(canonical_form(p));
    for (const auto& f : lattice_forms) CHECK(poset_forms.count(f));

    std::size_t lattice_count = 0;
    enumerate_posets(n, [&](const Poset& p) {
      if (classify(p).is_lattice) ++lattice_count;
    });
    CHECK(lattice_count == lattice_forms.size());
  }
}

TEST_CASE("problem-1 search on the worked examples") {
  auto trivial = search_problem1(catalog("chain2"), 2);
  CHECK(trivial.kind == Problem1Status::Kind::embedding_found);
  CHECK(trivial.atoms_used == 1);

  auto m3 = search_problem1(catalog("m3"), 3);
  REQUIRE(m3.kind == Problem1Status::Kind::embedding_found);
  CHECK(m3.atoms_used == 3);
  auto check = p1_check_map(catalog("m3"), m3.witness, m3.atoms_used);
  CHECK(check.order_embedding);
  CHECK(check.finite_meets);
  CHECK(check.exact_joins);
  CHECK(check.exact_meets);

  auto n5 = search_problem1(catalog("n5"), 3);
  CHECK(n5.kind == Problem1Status::Kind::embedding_found);

  auto chain3 = search_problem1(catalog("chain3"), 2);
  CHECK(chain3.kind == Problem1Status::Kind::embedding_found);
  CHECK(chain3.atoms_used == 2);

  // a chain of length k needs k atoms, so a tight bound must fail honestly
  auto too_small = search_problem1(catalog("chain4"), 2);
  CHECK(too_small.kind == Problem1Status::Kind::none_within_bound);
  CHECK(too_small.max_atoms == 2);

  CHECK_THROWS_AS(
      (void)search_problem1(Poset::from_covers({"x", "y"}, {}), 2), Error);
  Budget tiny;
  tiny.p1_max_atoms = 2;
  CHECK_THROWS_AS((void)search_problem1(catalog("m3"), 4, tiny), Error);
}

TEST_CASE("problem-1 witnesses satisfy the checker on every small lattice") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Poset& p : enumerate_lattices(n)) {
      auto status = search_problem1(p, 4);
      REQUIRE(status.kind == Problem1Status::Kind::embedding_found);
      auto check = p1_check_map(p, status.witness, status.atoms_used);
      CHECK(check.ok());
    }
  }
}

TEST_CASE("footnote counterexample") { CHECK(footnote_check()); }

TEST_CASE("the pair-swap comparison runs on degenerate inputs too") {
  // sanity control: on the 2-chain, f maps the single pair (1,0) to (0,1)
  Poset p = catalog("chain2");
  Embedding e = embed(p);
  Embedding ed = embed(p.dual());
  const PairSpace& x = e.algebra.space();
  const PairSpace& xd = ed.algebra.space();
  REQUIRE(x.size() == 1);
  REQUIRE(xd.size() == 1);
  auto [a, b] = x.pair(0);
  CHECK(xd.find_pair(b, a).has_value());
  // e(top) is everything, while in the dual that element is the bottom
  std::size_t top = *p.top();
  Bits mapped(xd.size());
  e.of(top).for_each(
      [&](std::size_t i) { mapped.set(*xd.find_pair(x.pair(i).second, x.pair(i).first)); });
  CHECK(mapped.any());
  CHECK(ed.of(top).none());
}

TEST_CASE("survey records are consistent") {
  SurveyOptions opts;
  opts.nmax = 5;
  std::vector<SearchRecord> records;
  survey_problem2(opts, [&](const SearchRecord& r) { records.push_back(r); });
  CHECK(records.size() == 10);  // 1+1+1+2+5 lattices

  std::string m3_form = to_hex(canonical_form(catalog("m3")));
  std::string n5_form = to_hex(canonical_form(catalog("n5")));
  bool saw_m3 = false, saw_n5 = false;
  for (const auto& r : records) {
    // finite density is carrier equality
    CHECK(r.macneille_iso == (r.algebra_size == r.subalgebra_size));
    if (r.distributive) CHECK(r.macneille_iso);
    CHECK(r.problem1.kind == Problem1Status::Kind::skipped);
    if (r.canonical_form == m3_form) {
      saw_m3 = true;
      CHECK(!r.macneille_iso);
      CHECK(r.algebra_size == 64);
      CHECK(r.subalgebra_size == 8);
    }
    if (r.canonical_form == n5_form) {
      saw_n5 = true;
      CHECK(r.macneille_iso);
      CHECK(r.algebra_size == 8);
      CHECK(r.subalgebra_size == 8);
    }
  }
  CHECK(saw_m3);
  CHECK(saw_n5);

  // deterministic across runs
  std::vector<SearchRecord> again;
  survey_problem2(opts, [&](const SearchRecord& r) { again.push_back(r); });
  REQUIRE(records.size() == again.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].canonical_form == again[i].canonical_form);
    CHECK(records[i].macneille_iso == again[i].macneille_iso);
    CHECK(records[i].algebra_size == again[i].algebra_size);
    CHECK(records[i].subalgebra_size == again[i].subalgebra_size);
  }
}

TEST_CASE("survey can run the bounded problem-1 search") {
  SurveyOptions opts;
  opts.nmax = 3;
  opts.p1_atoms = 3;
  std::vector<SearchRecord> records;
  survey_problem2(opts, [&](const SearchRecord& r) { records.push_back(r); });
  for (const auto& r : records)
    CHECK(r.problem1.kind == Problem1Status::Kind::embedding_found);
}
