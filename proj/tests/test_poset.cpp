#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "funayama/embedding.hpp"
#include "funayama/errors.hpp"
#include "funayama/poset.hpp"
#include "funayama/zoo.hpp"
#include "test_util.hpp"

using namespace funayama;
using test_util::elems_mask;

namespace {

bool raises(Errc code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("from_covers builds the named lattices") {
  Poset m3 = catalog("m3");
  CHECK(m3.size() == 5);
  CHECK(m3.leq(m3.index_of("0"), m3.index_of("a")));
  CHECK(!m3.leq(m3.index_of("a"), m3.index_of("b")));
  CHECK(m3.covers().size() == 6);

  Poset n5 = catalog("n5");
  CHECK(n5.leq(n5.index_of("b"), n5.index_of("a")));
  CHECK(!n5.leq(n5.index_of("a"), n5.index_of("b")));

  Poset single = Poset::from_covers({"x"}, {});
  CHECK(single.size() == 1);
  CHECK(single.leq(0, 0));

  Poset empty = Poset::from_covers({}, {});
  CHECK(empty.size() == 0);
}

TEST_CASE("from_covers rejects bad input") {
  CHECK(raises(Errc::duplicate_name,
               [] { Poset::from_covers({"x", "x"}, {}); }));
  CHECK(raises(Errc::unknown_element,
               [] { Poset::from_covers({"x"}, {{"x", "y"}}); }));
  CHECK(raises(Errc::cycle_detected, [] {
    Poset::from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  }));
  CHECK(raises(Errc::cycle_detected, [] {
    Poset::from_covers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}});
  }));
}

TEST_CASE("meet and join on the worked examples") {
  Poset m3 = catalog("m3");
  auto meet_ab = m3.meet(elems_mask(m3, {"a", "b"}));
  REQUIRE(meet_ab.has_value());
  CHECK(*meet_ab == m3.index_of("0"));

  auto join_empty = m3.join(Bits(m3.size()));
  REQUIRE(join_empty.has_value());
  CHECK(*join_empty == m3.index_of("0"));
  auto meet_empty = m3.meet(Bits(m3.size()));
  REQUIRE(meet_empty.has_value());
  CHECK(*meet_empty == m3.index_of("1"));

  Poset antichain = Poset::from_covers({"x", "y"}, {});
  CHECK(!antichain.meet(elems_mask(antichain, {"x", "y"})));
  CHECK(!antichain.join(elems_mask(antichain, {"x", "y"})));
  CHECK(!antichain.meet(Bits(2)));  // no top
  CHECK(!antichain.join(Bits(2)));  // no bottom
}

TEST_CASE("meet and join agree with the definition on all small posets") {
  for (std::size_t n = 0; n <= 5; ++n) {
    enumerate_posets(n, [&](const Poset& p) {
      test_util::for_each_subset(p.size(), [&](const Bits& s) {
        auto fast = p.meet(s);
        auto slow = test_util::slow_meet(p, s);
        CHECK(fast == slow);
        auto fast_join = p.join(s);
        auto slow_join = test_util::slow_join(p, s);
        CHECK(fast_join == slow_join);
      });
    });
  }
}

TEST_CASE("classification of the named lattices") {
  auto m3 = classify(catalog("m3"));
  CHECK(m3.is_lattice);
  CHECK(m3.is_bounded);
  CHECK(!m3.is_distributive);

  auto n5 = classify(catalog("n5"));
  CHECK(n5.is_lattice);
  CHECK(!n5.is_distributive);

  auto b4 = classify(catalog("boolean2"));
  CHECK(b4.is_lattice);
  CHECK(b4.is_distributive);

  auto antichain = classify(Poset::from_covers({"x", "y"}, {}));
  CHECK(!antichain.is_lattice);
  CHECK(!antichain.is_bounded);
  CHECK(!antichain.is_distributive);

  auto empty = classify(Poset::from_covers({}, {}));
  CHECK(!empty.is_lattice);
  CHECK(empty.is_meet_semilattice);
  CHECK(empty.is_join_semilattice);
}

TEST_CASE("LatticeInfo flag implications hold on every small poset") {
  for (std::size_t n = 0; n <= 5; ++n) {
    enumerate_posets(n, [&](const Poset& p) {
      auto info = classify(p);
      if (info.is_lattice) {
        CHECK(info.is_meet_semilattice);
        CHECK(info.is_join_semilattice);
      }
      if (info.is_distributive) CHECK(info.is_lattice);
      CHECK(info.is_bounded ==
            (info.bottom.has_value() && info.top.has_value()));
    });
  }
}

TEST_CASE("distributivity agrees with the forbidden-sublattice test") {
  // A lattice is distributive iff no 5-subset closed under meet and join is
  // isomorphic to M3 or N5.
  std::string m3_form = canonical_form(catalog("m3"));
  std::string n5_form = canonical_form(catalog("n5"));
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Poset& p : enumerate_lattices(n)) {
      bool forbidden = false;
      test_util::for_each_subset(p.size(), [&](const Bits& s) {
        if (s.count() != 5 || forbidden) return;
        bool closed = true;
        s.for_each([&](std::size_t x) {
          s.for_each([&](std::size_t y) {
            if (!s.test(*p.meet2(x, y)) || !s.test(*p.join2(x, y)))
              closed = false;
          });
        });
        if (!closed) return;
        auto idx = s.indices();
        std::vector<std::string> names;
        std::vector<Bits> down(5, Bits(5));
        for (std::size_t i = 0; i < 5; ++i) {
          names.push_back("s" + std::to_string(i));
          for (std::size_t j = 0; j < 5; ++j)
            if (p.leq(idx[j], idx[i])) down[i].set(j);
        }
        auto form = canonical_form(
            Poset::from_down_sets(std::move(names), std::move(down)));
        if (form == m3_form || form == n5_form) forbidden = true;
      });
      CHECK(classify(p).is_distributive == !forbidden);
    }
  }
}

TEST_CASE("dual is an involution and swaps meets with joins") {
  Poset n5 = catalog("n5");
  CHECK(n5.dual().dual() == n5);
  CHECK(canonical_form(n5.dual()) == canonical_form(n5));
  CHECK(canonical_form(catalog("m3").dual()) == canonical_form(catalog("m3")));

  for (std::size_t n = 0; n <= 5; ++n) {
    enumerate_posets(n, [&](const Poset& p) {
      Poset d = p.dual();
      CHECK(d.dual() == p);
      test_util::for_each_subset(p.size(), [&](const Bits& s) {
        CHECK(p.meet(s) == d.join(s));
        CHECK(p.join(s) == d.meet(s));
      });
    });
  }
}

TEST_CASE("adjoin_bounds on the stated cases") {
  Poset m3 = catalog("m3");
  auto adj = adjoin_bounds(m3);
  CHECK(adj.extended == m3);
  CHECK(!adj.added_bottom);
  CHECK(!adj.added_top);
  for (std::size_t i = 0; i < m3.size(); ++i) CHECK(adj.inject[i] == i);

  auto anti = adjoin_bounds(Poset::from_covers({"x", "y"}, {}));
  CHECK(anti.extended.size() == 4);
  CHECK(anti.added_bottom);
  CHECK(anti.added_top);
  CHECK(canonical_form(anti.extended) == canonical_form(catalog("boolean2")));

  auto single = adjoin_bounds(Poset::from_covers({"x"}, {}));
  CHECK(single.extended.size() == 2);
  CHECK(canonical_form(single.extended) == canonical_form(catalog("chain2")));

  auto empty = adjoin_bounds(Poset::from_covers({}, {}));
  CHECK(empty.extended.size() == 2);
  CHECK(canonical_form(empty.extended) == canonical_form(catalog("chain2")));

  // name collisions get suffixed
  auto tricky = adjoin_bounds(Poset::from_covers({"bot", "top"}, {}));
  CHECK(tricky.extended.size() == 4);
  CHECK(tricky.extended.bottom().has_value());
}

TEST_CASE("adjoin_bounds injection preserves order, bounds, and exactness") {
  for (std::size_t n = 0; n <= 5; ++n) {
    enumerate_posets(n, [&](const Poset& p) {
      auto adj = adjoin_bounds(p);
      const Poset& e = adj.extended;
      CHECK(e.bottom().has_value());
      CHECK(e.top().has_value());
      CHECK(e.size() >= 2);

      for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
          CHECK(p.leq(x, y) == e.leq(adj.inject[x], adj.inject[y]));

      test_util::for_each_subset(p.size(), [&](const Bits& s) {
        Bits injected(e.size());
        s.for_each([&](std::size_t x) { injected.set(adj.inject[x]); });

        // existing meets/joins keep their values
        if (s.any()) {
          auto m = p.meet(s);
          if (m) CHECK(e.meet(injected) == adj.inject[*m]);
          auto j = p.join(s);
          if (j) CHECK(e.join(injected) == adj.inject[*j]);
        }

        // exactness transfers forward: exact stays exact. An inexactness
        // report can flip only when it came from a missing intermediate,
        // which the extension may supply.
        auto rp = exactness(p, s);
        auto re = exactness(e, injected);
        if (rp.join && rp.join_exact) CHECK(re.join_exact);
        if (rp.meet && rp.meet_exact) CHECK(re.meet_exact);
        if (rp.join && !rp.join_exact && rp.join_failure_witness) {
          std::size_t w = *rp.join_failure_witness;
          bool intermediates_defined = true;
          std::optional<std::size_t> outer = p.meet2(w, *rp.join);
          Bits translated(p.size());
          s.for_each([&](std::size_t s_el) {
            if (auto m = p.meet2(w, s_el))
              translated.set(*m);
            else
              intermediates_defined = false;
          });
          if (intermediates_defined && outer && p.join(translated))
            CHECK(!re.join_exact);  // a fully-evaluated violation persists
        }
      });
    });
  }
}

TEST_CASE("meet semilattices keep join-exactness status exactly") {
  for (std::size_t n = 1; n <= 5; ++n) {
    enumerate_posets(n, [&](const Poset& p) {
      if (!classify(p).is_meet_semilattice) return;
      auto adj = adjoin_bounds(p);
      test_util::for_each_subset(p.size(), [&](const Bits& s) {
        Bits injected(adj.extended.size());
        s.for_each([&](std::size_t x) { injected.set(adj.inject[x]); });
        auto rp = exactness(p, s);
        auto re = exactness(adj.extended, injected);
        if (rp.join) CHECK(rp.join_exact == re.join_exact);
      });
    });
  }
}

TEST_CASE("down_set matches the examples") {
  Poset m3 = catalog("m3");
  CHECK(down_set(m3, m3.index_of("a")) == elems_mask(m3, {"0", "a"}));
  CHECK(down_set(m3, m3.index_of("1")).count() == 5);
  Poset n5 = catalog("n5");
  CHECK(down_set(n5, n5.index_of("a")) == elems_mask(n5, {"0", "b", "a"}));
  CHECK_THROWS_AS((void)down_set(m3, 99), Error);
}

TEST_CASE("canonical form separates isomorphism classes") {
  Poset m3 = catalog("m3");
  Poset relabeled = Poset::from_covers(
      {"q", "w", "e", "r", "t"},
      {{"t", "q"}, {"t", "w"}, {"t", "e"}, {"q", "r"}, {"w", "r"}, {"e", "r"}});
  CHECK(canonical_form(m3) == canonical_form(relabeled));
  CHECK(canonical_form(m3) != canonical_form(catalog("n5")));

  Poset chain2 = catalog("chain2");
  CHECK(canonical_form(chain2) == canonical_form(chain2.dual()));

  // decode round-trip
  Poset decoded = poset_from_canonical(canonical_form(m3));
  CHECK(canonical_form(decoded) == canonical_form(m3));
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Poset& p : enumerate_lattices(n)) {
      std::vector<std::size_t> perm(p.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::string> names(p.size());
      std::vector<Bits> down(p.size(), Bits(p.size()));
      for (std::size_t i = 0; i < p.size(); ++i) {
        names[perm[i]] = p.name(i);
        for (std::size_t j = 0; j < p.size(); ++j)
          if (p.leq(j, i)) down[perm[i]].set(perm[j]);
      }
      Poset shuffled = Poset::from_down_sets(std::move(names), std::move(down));
      CHECK(canonical_form(shuffled) == canonical_form(p));
    }
  }
}
