#include "funayama/verify_paper.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "funayama/analyze.hpp"
#include "funayama/embedding.hpp"
#include "funayama/errors.hpp"
#include "funayama/lattice_file.hpp"
#include "funayama/pair_space.hpp"
#include "funayama/poset.hpp"
#include "funayama/ro_algebra.hpp"
#include "funayama/zoo.hpp"

namespace funayama {

namespace {

using NamePair = std::pair<std::string, std::string>;

Bits pairs_mask(const PairSpace& x, const std::vector<NamePair>& list) {
  Bits m(x.size());
  for (const auto& [a, b] : list)
    m.set(x.pair_index(x.base().index_of(a), x.base().index_of(b)));
  return m;
}

Bits elems_mask(const Poset& p, const std::vector<std::string>& list) {
  Bits m(p.size());
  for (const auto& name : list) m.set(p.index_of(name));
  return m;
}

bool carrier_equals(const std::vector<Bits>& carrier,
                    std::vector<Bits> expected) {
  std::sort(expected.begin(), expected.end(), Bits::carrier_less);
  return carrier == expected;
}

std::size_t count_lines_with(const std::string& text, const std::string& sub) {
  std::size_t count = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find(sub) != std::string::npos) ++count;
  return count;
}

struct Harness {
  std::vector<FactResult> results;

  void check(std::string id, bool pass, std::string detail = "") {
    results.push_back({std::move(id), pass, pass ? "" : std::move(detail)});
  }

  template <typename F>
  void guarded(std::string id, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      results.push_back({std::move(id), false, e.what()});
    }
  }
};

}  // namespace

std::vector<FactResult> run_fact_suite() {
  Harness h;

  Poset m3 = catalog("m3");
  Poset n5 = catalog("n5");

  // ---- order-core facts
  h.guarded("order.m3_shape", [&] {
    h.check("order.m3_shape",
            m3.size() == 5 && m3.leq(m3.index_of("0"), m3.index_of("a")) &&
                !m3.leq(m3.index_of("a"), m3.index_of("b")) &&
                !m3.leq(m3.index_of("b"), m3.index_of("a")),
            "M3 atoms must be incomparable above the bottom");
  });
  h.guarded("order.n5_shape", [&] {
    h.check("order.n5_shape",
            n5.size() == 5 && n5.leq(n5.index_of("b"), n5.index_of("a")),
            "N5 must have b below a");
  });
  h.guarded("order.m3_meet", [&] {
    auto m = m3.meet(elems_mask(m3, {"a", "b"}));
    h.check("order.m3_meet", m && *m == m3.index_of("0"),
            "meet of two M3 atoms must be the bottom");
  });
  h.guarded("order.classify", [&] {
    auto im3 = classify(m3);
    auto in5 = classify(n5);
    auto ib4 = classify(catalog("boolean2"));
    h.check("order.classify",
            im3.is_lattice && im3.is_bounded && !im3.is_distributive &&
                in5.is_lattice && !in5.is_distributive && ib4.is_distributive,
            "M3 and N5 are non-distributive lattices, B4 is distributive");
  });
  h.guarded("order.n5_down_a", [&] {
    h.check("order.n5_down_a",
            n5.down(n5.index_of("a")) == elems_mask(n5, {"0", "b", "a"}),
            "down-set of a in N5 must be {0,b,a}");
  });

  // ---- pair-space facts
  const std::vector<NamePair> m3_pairs = {
      {"a", "0"}, {"a", "b"}, {"a", "c"}, {"b", "0"}, {"b", "a"},
      {"b", "c"}, {"c", "0"}, {"c", "a"}, {"c", "b"}, {"1", "0"},
      {"1", "a"}, {"1", "b"}, {"1", "c"}};
  PairSpace xm3 = PairSpace::build(m3);
  PairSpace xn5 = PairSpace::build(n5);

  h.guarded("space.m3_pairs", [&] {
    h.check("space.m3_pairs",
            xm3.size() == 13 && pairs_mask(xm3, m3_pairs) == Bits::full(13),
            "X_M3 must consist of the 13 expected pairs");
  });
  h.guarded("space.n5_pairs", [&] {
    bool no_ba = !xn5.find_pair(n5.index_of("b"), n5.index_of("a"));
    h.check("space.n5_pairs", xn5.size() == 12 && no_ba,
            "X_N5 must have 12 pairs and omit (b,a)");
  });
  h.guarded("space.chain2", [&] {
    PairSpace x2 = PairSpace::build(catalog("chain2"));
    h.check("space.chain2", x2.size() == 1,
            "the 2-chain has the single pair (1,0)");
  });
  h.guarded("space.below_a0", [&] {
    auto below = xm3.below(
        xm3.pair_index(m3.index_of("a"), m3.index_of("0")));
    h.check("space.below_a0",
            below.members ==
                pairs_mask(xm3, {{"a", "0"}, {"a", "b"}, {"a", "c"}}),
            "⇓(a,0) in X_M3 must be {(a,0),(a,b),(a,c)}");
  });
  h.guarded("space.below_ab", [&] {
    auto below = xm3.below(
        xm3.pair_index(m3.index_of("a"), m3.index_of("b")));
    h.check("space.below_ab",
            below.members == pairs_mask(xm3, {{"a", "b"}}),
            "(a,b) must be minimal in X_M3");
  });
  h.guarded("space.below_top", [&] {
    auto below = xm3.below(
        xm3.pair_index(m3.index_of("1"), m3.index_of("0")));
    h.check("space.below_top", below.members == Bits::full(xm3.size()),
            "(1,0) must be the maximum of X_M3");
  });
  h.guarded("space.regularize_ab", [&] {
    Bits ab = pairs_mask(xm3, {{"a", "b"}});
    h.check("space.regularize_ab", xm3.regularize_bits(ab) == ab,
            "{(a,b)} must be a □◇-fixpoint");
  });
  h.guarded("space.regularize_a0", [&] {
    Bits a0 = pairs_mask(xm3, {{"a", "0"}, {"a", "b"}, {"a", "c"}});
    h.check("space.regularize_a0", xm3.regularize_bits(a0) == a0,
            "⇓(a,0) must be a □◇-fixpoint");
  });

  // ---- algebra facts
  Budget budget;
  RegularOpenAlgebra bm3 = build_ro_algebra(xm3, budget);
  RegularOpenAlgebra bn5 = build_ro_algebra(xn5, budget);

  h.guarded("algebra.m3_size", [&] {
    h.check("algebra.m3_size", bm3.size() == 64, "|B_M3| must be 64");
  });
  h.guarded("algebra.m3_atoms", [&] {
    std::vector<Bits> expected;
    for (const auto& nm :
         std::vector<std::vector<NamePair>>{{{"a", "b"}}, {{"a", "c"}},
                                            {{"b", "a"}}, {{"b", "c"}},
                                            {{"c", "a"}}, {{"c", "b"}}})
      expected.push_back(pairs_mask(xm3, nm));
    std::sort(expected.begin(), expected.end(), Bits::carrier_less);
    h.check("algebra.m3_atoms", bm3.atoms() == expected,
            "atoms of B_M3 must be the six snowflake singletons");
  });

  const std::vector<std::vector<NamePair>> n5_fixpoints = {
      {},
      {{"a", "b"}},
      {{"a", "c"}, {"b", "0"}, {"b", "c"}, {"1", "c"}},
      {{"c", "a"}, {"c", "0"}, {"c", "b"}, {"1", "a"}},
      {{"a", "b"}, {"c", "0"}, {"c", "a"}, {"c", "b"}, {"1", "a"}, {"1", "b"}},
      {{"a", "0"}, {"a", "b"}, {"a", "c"}, {"b", "0"}, {"b", "c"}, {"1", "c"}},
      {{"a", "c"}, {"b", "0"}, {"b", "c"}, {"c", "0"}, {"c", "a"}, {"c", "b"},
       {"1", "a"}, {"1", "c"}},
      {{"a", "0"}, {"a", "b"}, {"a", "c"}, {"b", "0"}, {"b", "c"}, {"c", "0"},
       {"c", "a"}, {"c", "b"}, {"1", "0"}, {"1", "a"}, {"1", "b"}, {"1", "c"}}};

  std::vector<Bits> n5_expected;
  for (const auto& st : n5_fixpoints) n5_expected.push_back(pairs_mask(xn5, st));

  h.guarded("algebra.n5_carrier", [&] {
    h.check("algebra.n5_carrier", carrier_equals(bn5.carrier(), n5_expected),
            "the carrier of B_N5 must be exactly the eight fixpoints");
  });

  Embedding em3 = embed(m3, budget);
  Embedding en5 = embed(n5, budget);

  h.guarded("embed.m3_images", [&] {
    bool ok =
        em3.of(m3.index_of("a")) ==
            pairs_mask(xm3, {{"a", "0"}, {"a", "b"}, {"a", "c"}}) &&
        em3.of(m3.index_of("b")) ==
            pairs_mask(xm3, {{"b", "0"}, {"b", "a"}, {"b", "c"}}) &&
        em3.of(m3.index_of("c")) ==
            pairs_mask(xm3, {{"c", "0"}, {"c", "a"}, {"c", "b"}});
    h.check("embed.m3_images", ok, "e-images of a,b,c in M3 are off");
  });
  h.guarded("embed.e1_full", [&] {
    h.check("embed.e1_full",
            em3.of(m3.index_of("1")) == Bits::full(xm3.size()) &&
                en5.of(n5.index_of("1")) == Bits::full(xn5.size()),
            "e(1) must be the whole pair space");
  });
  h.guarded("embed.n5_images", [&] {
    bool ok = en5.of(n5.index_of("a")) == n5_expected[5] &&
              en5.of(n5.index_of("b")) == n5_expected[2] &&
              en5.of(n5.index_of("c")) == n5_expected[3];
    h.check("embed.n5_images", ok, "e-images in N5 must match the fixpoint list");
  });

  const std::vector<NamePair> not_ea = {{"b", "0"}, {"b", "a"}, {"b", "c"},
                                        {"c", "0"}, {"c", "a"}, {"c", "b"},
                                        {"1", "a"}};
  const std::vector<NamePair> not_eb = {{"a", "0"}, {"a", "b"}, {"a", "c"},
                                        {"c", "0"}, {"c", "a"}, {"c", "b"},
                                        {"1", "b"}};
  const std::vector<NamePair> not_ec = {{"a", "0"}, {"a", "b"}, {"a", "c"},
                                        {"b", "0"}, {"b", "a"}, {"b", "c"},
                                        {"1", "c"}};
  h.guarded("algebra.m3_complements", [&] {
    auto cmpl = [&](const std::string& e) {
      return em3.algebra.complement(em3.image_set(m3.index_of(e))).members;
    };
    h.check("algebra.m3_complements",
            cmpl("a") == pairs_mask(xm3, not_ea) &&
                cmpl("b") == pairs_mask(xm3, not_eb) &&
                cmpl("c") == pairs_mask(xm3, not_ec),
            "complements of the M3 e-images are off");
  });
  h.guarded("algebra.m3_complement_meet", [&] {
    Bits meet = pairs_mask(xm3, not_ea) & pairs_mask(xm3, not_eb) &
                pairs_mask(xm3, not_ec);
    h.check("algebra.m3_complement_meet", meet.none(),
            "¬e(a) ∩ ¬e(b) ∩ ¬e(c) must be empty");
  });

  h.guarded("algebra.m3_subalgebra", [&] {
    Subalgebra sub = generated_subalgebra_bits(bm3, em3.image);
    std::set<std::size_t> atoms_of_sub;
    for (std::size_t i : sub.members) {
      const Bits& u = bm3.member(i);
      if (u.none()) continue;
      bool minimal = true;
      for (std::size_t j : sub.members) {
        const Bits& v = bm3.member(j);
        if (v.any() && v != u && v.subset_of(u)) minimal = false;
      }
      if (minimal) atoms_of_sub.insert(i);
    }
    bool atoms_ok =
        atoms_of_sub.size() == 3 &&
        atoms_of_sub.count(*bm3.index_of(em3.of(m3.index_of("a")))) &&
        atoms_of_sub.count(*bm3.index_of(em3.of(m3.index_of("b")))) &&
        atoms_of_sub.count(*bm3.index_of(em3.of(m3.index_of("c"))));
    h.check("algebra.m3_subalgebra", sub.members.size() == 8 && atoms_ok,
            "the generated subalgebra of B_M3 must have 8 members with atoms "
            "e(a), e(b), e(c)");
    h.check("algebra.m3_macneille", !macneille_iso_check(bm3, sub),
            "B_M3 must not be the completion of its generated subalgebra");
  });
  h.guarded("algebra.n5_subalgebra", [&] {
    Subalgebra sub = generated_subalgebra_bits(bn5, en5.image);
    h.check("algebra.n5_subalgebra", sub.members.size() == bn5.size(),
            "the e-image must generate all of B_N5");
    h.check("algebra.n5_macneille", macneille_iso_check(bn5, sub),
            "B_N5 must be the completion of its generated subalgebra");
  });

  h.guarded("algebra.m3_oracle", [&] {
    auto oracle = oracle_ro_enumerate(xm3, budget);
    h.check("algebra.m3_oracle",
            oracle.size() == 64 && oracle == bm3.carrier(),
            "downset oracle must agree with the carrier of B_M3");
  });
  h.guarded("algebra.n5_oracle", [&] {
    auto oracle = oracle_ro_enumerate(xn5, budget);
    h.check("algebra.n5_oracle", carrier_equals(oracle, n5_expected),
            "the oracle must find exactly the eight N5 fixpoints");
  });
  h.guarded("algebra.axioms", [&] {
    h.check("algebra.axioms",
            verify_boolean_axioms(bm3).ok && verify_boolean_axioms(bn5).ok,
            "Boolean axioms must hold on B_M3 and B_N5");
  });

  // ---- preservation and corollary facts
  h.guarded("preserve.m3_exact_joins", [&] {
    auto c = check_preservation(em3, PreservationMode::exact_joins, budget);
    h.check("preserve.m3_exact_joins", c.ok,
            "e over M3 must preserve exact joins");
  });
  h.guarded("preserve.m3_finite_meets", [&] {
    auto c = check_preservation(em3, PreservationMode::finite_meets, budget);
    h.check("preserve.m3_finite_meets", c.ok,
            "e over M3 must preserve finite meets");
  });
  h.guarded("preserve.distributive_exact_meets", [&] {
    for (const char* name : {"boolean2", "chain4"}) {
      Poset l = catalog(name);
      Embedding e = embed(l, budget);
      auto c = check_preservation(e, PreservationMode::exact_meets, budget);
      Subalgebra sub = generated_subalgebra_bits(e.algebra, e.image);
      h.check(std::string("preserve.exact_meets.") + name, c.ok,
              "distributive sources must preserve exact meets");
      h.check(std::string("preserve.envelope.") + name,
              sub.members.size() == e.algebra.size(),
              "distributive sources must generate the whole algebra");
    }
  });
  h.guarded("preserve.m3_dual_embed", [&] {
    Embedding ed = dual_embed(m3, budget);
    auto c = check_preservation(ed, PreservationMode::finite_meets, budget);
    h.check("preserve.m3_dual_embed", c.ok,
            "the dual embedding must preserve all finite joins of M3");
  });

  h.guarded("jid.booleans", [&] {
    h.check("jid.booleans",
            satisfies_jid(catalog("boolean2")) &&
                satisfies_mid(catalog("boolean2")) &&
                satisfies_jid(catalog("boolean3")) &&
                satisfies_mid(catalog("boolean3")),
            "finite Boolean algebras satisfy JID and MID");
  });
  h.guarded("jid.m3_n5", [&] {
    h.check("jid.m3_n5", !satisfies_jid(m3) && !satisfies_mid(n5),
            "M3 fails JID and N5 fails MID");
  });
  h.guarded("corollary.flags", [&] {
    auto cm3 = funayama_corollary_check(m3, budget);
    auto cn5 = funayama_corollary_check(n5, budget);
    auto cb4 = funayama_corollary_check(catalog("boolean2"), budget);
    h.check("corollary.flags",
            !cm3.complete_embedding_via_e && !cm3.jid_and_mid &&
                !cn5.complete_embedding_via_e && !cn5.jid_and_mid &&
                cb4.complete_embedding_via_e && cb4.jid_and_mid,
            "corollary flags must match distributivity");
  });

  // ---- duality and the footnote counterexample
  h.guarded("dual.m3_n5", [&] {
    auto rm3 = dual_iso(m3);
    auto rn5 = dual_iso(n5);
    auto r2 = dual_iso(catalog("chain2"));
    h.check("dual.m3_n5",
            rm3.ok && rm3.pair_count == 13 && rn5.ok && rn5.pair_count == 12 &&
                r2.ok && r2.pair_count == 1,
            "f(a,b) = (b,a) must be an order isomorphism");
  });
  h.guarded("footnote.counterexample", [&] {
    h.check("footnote.counterexample", footnote_check(),
            "some atom of b4_plus_top must have f[e(a)] ≠ e∂(a)");
  });

  // ---- catalog and enumeration facts
  h.guarded("zoo.catalog", [&] {
    h.check("zoo.catalog",
            catalog("m3").size() == 5 && catalog("b4_plus_top").size() == 5 &&
                catalog("chain2").size() == 2,
            "catalog entries are off");
  });
  h.guarded("zoo.enumerate5", [&] {
    auto lattices = enumerate_lattices(5);
    std::set<std::string> forms;
    for (const auto& l : lattices) forms.insert(canonical_form(l));
    h.check("zoo.enumerate5",
            forms.count(canonical_form(m3)) == 1 &&
                forms.count(canonical_form(n5)) == 1,
            "the 5-element enumeration must contain M3 and N5");
  });
  h.guarded("zoo.survey5", [&] {
    std::vector<SearchRecord> records;
    SurveyOptions opts;
    opts.nmax = 5;
    survey_problem2(opts, [&](const SearchRecord& r) { records.push_back(r); });
    std::string cm3 = to_hex(canonical_form(m3));
    std::string cn5 = to_hex(canonical_form(n5));
    bool m3_ok = false, n5_ok = false, distributive_ok = true;
    for (const auto& r : records) {
      if (r.canonical_form == cm3)
        m3_ok = !r.macneille_iso && r.algebra_size == 64 &&
                r.subalgebra_size == 8;
      if (r.canonical_form == cn5)
        n5_ok = r.macneille_iso && r.algebra_size == 8 &&
                r.subalgebra_size == 8;
      if (r.distributive && !r.macneille_iso) distributive_ok = false;
    }
    h.check("zoo.survey5", m3_ok && n5_ok && distributive_ok,
            "survey records for M3 and N5 are off");
  });
  h.guarded("zoo.p1_m3_example", [&] {
    // the atom map of M3 into the 8-element algebra generated by its images
    std::vector<std::uint64_t> images(5);
    images[m3.index_of("0")] = 0b000;
    images[m3.index_of("a")] = 0b001;
    images[m3.index_of("b")] = 0b010;
    images[m3.index_of("c")] = 0b100;
    images[m3.index_of("1")] = 0b111;
    auto c = p1_check_map(m3, images, 3);
    h.check("zoo.p1_m3_example",
            c.order_embedding && c.finite_meets && c.exact_joins &&
                c.exact_meets,
            "the M3 atom map must preserve finite meets, exact joins and "
            "exact meets");
  });
  h.guarded("zoo.p1_distributive", [&] {
    auto status = search_problem1(catalog("chain3"), 3);
    h.check("zoo.p1_distributive",
            status.kind == Problem1Status::Kind::embedding_found,
            "a distributive lattice must admit a bounded-search witness");
  });

  // ---- cli-io facts
  h.guarded("io.analyze_m3", [&] {
    auto a = analyze(m3);
    h.check("io.analyze_m3",
            a.algebra_size == 64 && a.atom_count == 6 &&
                a.subalgebra_size == 8 && !a.macneille_iso,
            "analyze(M3) must report 64/6/8/non-iso");
  });
  h.guarded("io.analyze_n5", [&] {
    auto a = analyze(n5);
    h.check("io.analyze_n5",
            a.algebra_size == 8 && a.subalgebra_size == 8 && a.macneille_iso,
            "analyze(N5) must report 8/8/iso");
  });
  h.guarded("io.analyze_chain2", [&] {
    auto a = analyze(catalog("chain2"));
    h.check("io.analyze_chain2", a.algebra_size == 2 && a.macneille_iso,
            "analyze(chain2) must report a 2-element algebra");
  });
  h.guarded("io.dot_counts", [&] {
    std::string dm3 = emit_dot(xm3);
    std::string dn5 = emit_dot(xn5);
    std::string d2 = emit_dot(catalog("chain2"));
    std::size_t m3_edges = count_lines_with(dm3, "->");
    std::size_t m3_nodes = count_lines_with(dm3, "\";") - m3_edges;
    std::size_t n5_nodes =
        count_lines_with(dn5, "\";") - count_lines_with(dn5, "->");
    std::size_t c2_edges = count_lines_with(d2, "--");
    std::size_t c2_nodes = count_lines_with(d2, "\";") - c2_edges;
    h.check("io.dot_counts",
            m3_nodes == 13 && m3_edges == 18 && n5_nodes == 12 &&
                c2_nodes == 2 && c2_edges == 1,
            "dot output must show 13 nodes / 18 arrows for X_M3, 12 nodes for "
            "X_N5, and 2 nodes / 1 edge for the 2-chain");
  });

  return h.results;
}

}  // namespace funayama
