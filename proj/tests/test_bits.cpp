#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "funayama/bits.hpp"
#include "test_util.hpp"

using funayama::Bits;

TEST_CASE("basic set operations") {
  Bits a(70), b(70);
  a.set(0);
  a.set(63);
  a.set(64);
  b.set(64);
  b.set(69);

  CHECK(a.count() == 3);
  CHECK(a.test(63));
  CHECK(!a.test(1));
  CHECK((a & b).count() == 1);
  CHECK((a | b).count() == 4);
  CHECK((a - b).count() == 2);
  CHECK(a.intersects(b));
  CHECK(!(a - b).intersects(b));
  CHECK((a & b).subset_of(a));
  CHECK(!a.subset_of(b));

  Bits full = Bits::full(70);
  CHECK(full.count() == 70);
  CHECK(a.subset_of(full));
  CHECK(full.complement().none());
  CHECK(a.complement().count() == 67);
}

TEST_CASE("for_each visits ascending indices") {
  Bits a(130);
  a.set(3);
  a.set(64);
  a.set(129);
  auto idx = a.indices();
  REQUIRE(idx.size() == 3);
  CHECK(idx[0] == 3);
  CHECK(idx[1] == 64);
  CHECK(idx[2] == 129);
}

TEST_CASE("complement involution and De Morgan on random sets") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 100;
    Bits a = test_util::random_subset(n, rng);
    Bits b = test_util::random_subset(n, rng);
    CHECK(a.complement().complement() == a);
    CHECK((a & b).complement() == (a.complement() | b.complement()));
    CHECK((a | b).complement() == (a.complement() & b.complement()));
  }
}

TEST_CASE("carrier order is total and refines strict inclusion") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 64;
    Bits a = test_util::random_subset(n, rng);
    Bits b = test_util::random_subset(n, rng);
    if (a == b) {
      CHECK(!Bits::carrier_less(a, b));
      continue;
    }
    CHECK(Bits::carrier_less(a, b) != Bits::carrier_less(b, a));
    if (a.subset_of(b)) CHECK(Bits::carrier_less(a, b));
  }
}

TEST_CASE("hash distinguishes universes and members") {
  Bits a(10), b(10), c(11);
  a.set(2);
  b.set(3);
  CHECK(a.hash() != b.hash());
  CHECK(a.hash() != c.hash());
  Bits a2(10);
  a2.set(2);
  CHECK(a.hash() == a2.hash());
}
