#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "funayama/errors.hpp"
#include "funayama/pair_space.hpp"
#include "funayama/zoo.hpp"
#include "test_util.hpp"

using namespace funayama;
using test_util::pairs_mask;

TEST_CASE("pair spaces of the worked lattices") {
  Poset m3 = catalog("m3");
  PairSpace x = PairSpace::build(m3);
  CHECK(x.size() == 13);
  const std::vector<test_util::NamePair> expected = {
      {"a", "0"}, {"a", "b"}, {"a", "c"}, {"b", "0"}, {"b", "a"},
      {"b", "c"}, {"c", "0"}, {"c", "a"}, {"c", "b"}, {"1", "0"},
      {"1", "a"}, {"1", "b"}, {"1", "c"}};
  CHECK(pairs_mask(x, expected) == Bits::full(13));

  PairSpace xn5 = PairSpace::build(catalog("n5"));
  CHECK(xn5.size() == 12);
  Poset n5 = catalog("n5");
  CHECK(!xn5.find_pair(n5.index_of("b"), n5.index_of("a")));

  PairSpace x2 = PairSpace::build(catalog("chain2"));
  CHECK(x2.size() == 1);
  auto [hi, lo] = x2.pair(0);
  CHECK(x2.base().name(hi) == "c1");
  CHECK(x2.base().name(lo) == "c0");
}

TEST_CASE("build rejects unbounded and degenerate bases") {
  CHECK_THROWS_AS((void)PairSpace::build(Poset::from_covers({"x", "y"}, {})),
                  Error);
  try {
    (void)PairSpace::build(Poset::from_covers({"x", "y"}, {}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_bounded);
  }
  try {
    (void)PairSpace::build(Poset::from_covers({"x"}, {}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_poset);
  }
}

TEST_CASE("(1,0) is the unique maximum") {
  for (const char* name : {"m3", "n5", "b4_plus_top", "boolean3"}) {
    Poset p = catalog(name);
    PairSpace x = PairSpace::build(p);
    std::size_t top = x.pair_index(*p.top(), *p.bottom());
    CHECK(x.below_mask(top) == Bits::full(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != top) CHECK(x.below_mask(i) != Bits::full(x.size()));
  }
}

TEST_CASE("principal downsets of X_M3") {
  Poset m3 = catalog("m3");
  PairSpace x = PairSpace::build(m3);
  auto a0 = x.pair_index(m3.index_of("a"), m3.index_of("0"));
  CHECK(x.below(a0).members ==
        pairs_mask(x, {{"a", "0"}, {"a", "b"}, {"a", "c"}}));
  auto ab = x.pair_index(m3.index_of("a"), m3.index_of("b"));
  CHECK(x.below(ab).members == pairs_mask(x, {{"a", "b"}}));
  auto top = x.pair_index(m3.index_of("1"), m3.index_of("0"));
  CHECK(x.below(top).members == Bits::full(x.size()));
  CHECK_THROWS_AS((void)x.below(13), Error);
}

TEST_CASE("box and diamond on the worked examples") {
  Poset m3 = catalog("m3");
  PairSpace x = PairSpace::build(m3);

  CHECK(x.box(x.full_set()).members == Bits::full(x.size()));
  CHECK(x.box(x.empty_set()).members.none());
  CHECK(x.diamond(x.empty_set()).members.none());
  CHECK(x.diamond(x.full_set()).members == Bits::full(x.size()));

  // both pairs are minimal, so the set is its own interior
  Bits two = pairs_mask(x, {{"a", "b"}, {"a", "c"}});
  CHECK(x.box(x.make_set(two)).members == two);
  CHECK(test_util::slow_box(x, two) == two);

  Bits ab = pairs_mask(x, {{"a", "b"}});
  Bits expected_diamond =
      pairs_mask(x, {{"a", "b"}, {"a", "0"}, {"1", "b"}, {"1", "0"}});
  CHECK(x.diamond(x.make_set(ab)).members == expected_diamond);
  CHECK(test_util::slow_diamond(x, ab) == expected_diamond);
}

TEST_CASE("regularize on the worked examples") {
  Poset m3 = catalog("m3");
  PairSpace x = PairSpace::build(m3);
  Bits ab = pairs_mask(x, {{"a", "b"}});
  CHECK(x.regularize(x.make_set(ab)).members == ab);
  Bits a0 = pairs_mask(x, {{"a", "0"}, {"a", "b"}, {"a", "c"}});
  CHECK(x.regularize(x.make_set(a0)).members == a0);
  CHECK(x.regularize(x.empty_set()).members.none());
}

TEST_CASE("is_downset on the worked examples") {
  Poset m3 = catalog("m3");
  PairSpace x = PairSpace::build(m3);
  CHECK(x.is_downset(x.empty_set()));
  CHECK(x.is_downset(x.full_set()));
  // (a,b) ⊑ (a,0) is missing from {(a,0)}
  CHECK(!x.is_downset(x.make_set(pairs_mask(x, {{"a", "0"}}))));
}

TEST_CASE("pair sets from another space are rejected") {
  PairSpace x1 = PairSpace::build(catalog("m3"));
  PairSpace x2 = PairSpace::build(catalog("m3"));
  PairSet u = x1.full_set();
  CHECK_THROWS_AS((void)x2.box(u), Error);
  try {
    (void)x2.box(u);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::foreign_element);
  }
}

TEST_CASE("dual_iso verifies f(a,b) = (b,a) on the examples") {
  auto m3 = dual_iso(catalog("m3"));
  CHECK(m3.ok);
  CHECK(m3.pair_count == 13);
  auto n5 = dual_iso(catalog("n5"));
  CHECK(n5.ok);
  CHECK(n5.pair_count == 12);
  auto c2 = dual_iso(catalog("chain2"));
  CHECK(c2.ok);
  CHECK(c2.pair_count == 1);
  CHECK_THROWS_AS((void)dual_iso(Poset::from_covers({"x", "y"}, {})), Error);
}

TEST_CASE("interior/closure laws, exhaustive on small spaces") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Poset& p : enumerate_lattices(n)) {
      PairSpace x = PairSpace::build(p);
      if (x.size() > 8) continue;
      const Bits full = Bits::full(x.size());
      test_util::for_each_subset(x.size(), [&](const Bits& u) {
        Bits box_u = x.box_bits(u);
        Bits dia_u = x.diamond_bits(u);
        Bits reg_u = x.regularize_bits(u);

        CHECK(box_u == test_util::slow_box(x, u));
        CHECK(dia_u == test_util::slow_diamond(x, u));
        CHECK(box_u.subset_of(u));
        CHECK(u.subset_of(dia_u));
        CHECK(x.regularize_bits(reg_u) == reg_u);
        CHECK(dia_u == x.box_bits(full - u).complement());
        CHECK(x.is_downset_bits(box_u));
        CHECK(x.is_downset_bits(reg_u));
        if (x.is_downset_bits(u)) CHECK(u.subset_of(reg_u));
      });
      // binary laws
      test_util::for_each_subset(x.size(), [&](const Bits& u) {
        test_util::for_each_subset(x.size(), [&](const Bits& v) {
          CHECK(x.box_bits(u & v) == (x.box_bits(u) & x.box_bits(v)));
          if (u.subset_of(v)) {
            CHECK(x.box_bits(u).subset_of(x.box_bits(v)));
            CHECK(x.diamond_bits(u).subset_of(x.diamond_bits(v)));
          }
          if (x.is_downset_bits(u) && x.is_downset_bits(v))
            CHECK(x.regularize_bits(u & v) ==
                  (x.regularize_bits(u) & x.regularize_bits(v)));
        });
      });
    }
  }
}

TEST_CASE("interior/closure laws, sampled on larger spaces") {
  std::mt19937_64 rng(31);
  for (std::size_t n = 5; n <= 6; ++n) {
    for (const Poset& p : enumerate_lattices(n)) {
      PairSpace x = PairSpace::build(p);
      if (x.size() <= 8) continue;
      const Bits full = Bits::full(x.size());
      for (int t = 0; t < 60; ++t) {
        Bits u = test_util::random_subset(x.size(), rng);
        Bits v = test_util::random_subset(x.size(), rng);
        Bits du = x.diamond_bits(u);
        CHECK(x.box_bits(u) == test_util::slow_box(x, u));
        CHECK(x.diamond_bits(u) == test_util::slow_diamond(x, u));
        CHECK(x.box_bits(u).subset_of(u));
        CHECK(u.subset_of(du));
        CHECK(x.regularize_bits(x.regularize_bits(u)) == x.regularize_bits(u));
        CHECK(x.diamond_bits(u) == x.box_bits(full - u).complement());
        CHECK(x.box_bits(u & v) == (x.box_bits(u) & x.box_bits(v)));
        Bits ud = x.box_bits(u), vd = x.box_bits(v);  // downsets
        CHECK(x.regularize_bits(ud & vd) ==
              (x.regularize_bits(ud) & x.regularize_bits(vd)));
      }
    }
  }
}
