#include "funayama/zoo.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "funayama/errors.hpp"
#include "funayama/pair_space.hpp"
#include "funayama/ro_algebra.hpp"

namespace funayama {

namespace {

Poset make_m3() {
  return Poset::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

Poset make_n5() {
  return Poset::from_covers(
      {"0", "b", "a", "c", "1"},
      {{"0", "b"}, {"b", "a"}, {"a", "1"}, {"0", "c"}, {"c", "1"}});
}

Poset make_chain(std::size_t k) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < k; ++i)
    covers.push_back({names[i], names[i + 1]});
  return Poset::from_covers(names, covers);
}

Poset make_boolean(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t m = 0; m < n; ++m) names.push_back(std::to_string(m));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t b = 0; b < k; ++b)
      if (!((m >> b) & 1))
        covers.push_back({names[m], names[m | (std::size_t{1} << b)]});
  return Poset::from_covers(names, covers);
}

Poset make_b4_plus_top() {
  return Poset::from_covers(
      {"0", "a", "b", "t", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "t"}, {"b", "t"}, {"t", "1"}});
}

std::optional<std::size_t> parse_suffix(const std::string& name,
                                        const std::string& prefix) {
  if (name.size() <= prefix.size() ||
      name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  std::size_t value = 0;
  auto first = name.data() + prefix.size();
  auto last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

Poset catalog(const std::string& name) {
  if (name == "m3" || name == "diamond") return make_m3();
  if (name == "n5") return make_n5();
  if (name == "m3_dual") return make_m3().dual();
  if (name == "n5_dual") return make_n5().dual();
  if (name == "b4_plus_top") return make_b4_plus_top();
  if (name == "b4_plus_bottom") return make_b4_plus_top().dual();
  if (auto k = parse_suffix(name, "chain")) {
    if (*k < 1 || *k > 64)
      raise(Errc::unknown_name, "chain size out of range: " + name);
    return make_chain(*k);
  }
  if (auto k = parse_suffix(name, "boolean")) {
    if (*k > 10) raise(Errc::unknown_name, "boolean rank out of range: " + name);
    return make_boolean(*k);
  }
  raise(Errc::unknown_name, "no catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"m3",          "n5",       "m3_dual",  "n5_dual",    "b4_plus_top",
          "b4_plus_bottom", "diamond", "chain{k}", "boolean{k}"};
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"m3", make_m3(), "the 5-element diamond, the modular non-distributive minimum"},
      {"n5", make_n5(), "the 5-element pentagon, the non-modular minimum"},
      {"m3_dual", make_m3().dual(), "dual of m3 (isomorphic to it)"},
      {"n5_dual", make_n5().dual(), "dual of n5 (isomorphic to it)"},
      {"b4_plus_top", make_b4_plus_top(),
       "4-element Boolean algebra with a new top"},
      {"b4_plus_bottom", make_b4_plus_top().dual(),
       "4-element Boolean algebra with a new bottom"},
      {"diamond", make_m3(), "alias of m3"},
  };
}

namespace {

// Naturally labeled generation: element k is maximal among 0..k and its
// strict predecessor set must be a downset of the poset built so far.
// Down masks include the element itself.
struct Generator {
  std::size_t n = 0;
  bool lattices_only = false;
  std::set<std::string>* forms = nullptr;
  std::vector<std::uint64_t> down;

  void run() {
    down.clear();
    recurse();
  }

  // The common lower bounds of two existing elements never change when a new
  // maximal element is added, so a pair whose meet already fails to exist can
  // be pruned immediately. Only pairs involving the newest element k need
  // checking.
  bool meets_still_possible() const {
    const std::size_t k = down.size() - 1;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t common = down[i] & down[k];
      if (common == 0) return false;  // no common lower bound at all
      std::uint64_t maximal = 0;
      for (std::size_t c = 0; c <= k; ++c) {
        if (!((common >> c) & 1)) continue;
        bool is_max = true;
        for (std::size_t j = 0; j <= k && is_max; ++j)
          if (j != c && ((common >> j) & 1) && ((down[j] >> c) & 1))
            is_max = false;
        if (is_max) {
          maximal |= std::uint64_t{1} << c;
          if (maximal & (maximal - 1)) return false;  // two maximal bounds
        }
      }
    }
    return true;
  }

  void emit() {
    const std::size_t k = down.size();
    std::vector<std::string> names;
    std::vector<Bits> d(k, Bits(k));
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back("x" + std::to_string(i));
      for (std::size_t j = 0; j < k; ++j)
        if ((down[i] >> j) & 1) d[i].set(j);
    }
    Poset p = Poset::from_down_sets(std::move(names), std::move(d));
    if (lattices_only && !classify(p).is_lattice) return;
    forms->insert(canonical_form(p));
  }

  void recurse() {
    const std::size_t k = down.size();
    if (k == n) {
      emit();
      return;
    }
    const std::uint64_t universe = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t d = 0; d <= universe; ++d) {
      bool closed = true;
      for (std::size_t i = 0; i < k && closed; ++i)
        if (((d >> i) & 1) && (down[i] & ~d & universe) != 0) closed = false;
      if (!closed) continue;
      down.push_back(d | (std::uint64_t{1} << k));
      if (!lattices_only || down.size() == 1 || meets_still_possible())
        recurse();
      down.pop_back();
    }
  }
};

}  // namespace

void enumerate_posets(std::size_t n,
                      const std::function<void(const Poset&)>& sink,
                      const Budget& budget) {
  if (n > budget.enum_max)
    raise(Errc::capacity_exceeded,
          "enumeration bound is " + std::to_string(budget.enum_max));
  std::set<std::string> forms;
  Generator g;
  g.n = n;
  g.lattices_only = false;
  g.forms = &forms;
  g.run();
  for (const auto& f : forms) sink(poset_from_canonical(f));
}

void enumerate_lattices(std::size_t n,
                        const std::function<void(const Poset&)>& sink,
                        const Budget& budget) {
  if (n > budget.enum_max)
    raise(Errc::capacity_exceeded,
          "enumeration bound is " + std::to_string(budget.enum_max));
  std::set<std::string> forms;
  Generator g;
  g.n = n;
  g.lattices_only = true;
  g.forms = &forms;
  g.run();
  for (const auto& f : forms) sink(poset_from_canonical(f));
}

std::vector<Poset> enumerate_lattices(std::size_t n, const Budget& budget) {
  std::vector<Poset> out;
  enumerate_lattices(n, [&](const Poset& p) { out.push_back(p); }, budget);
  return out;
}

namespace {

std::vector<std::size_t> meet_irreducibles(const Poset& p) {
  // exactly one upper cover; the top (no upper cover) is excluded since its
  // image is forced
  std::vector<std::size_t> out;
  std::vector<std::size_t> upper_count(p.size(), 0);
  for (auto [lo, hi] : p.covers()) {
    (void)hi;
    ++upper_count[lo];
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    if (upper_count[x] == 1) out.push_back(x);
  // higher elements first, so inclusion constraints bind early
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    auto da = p.down(a).count(), db = p.down(b).count();
    if (da != db) return da > db;
    return a < b;
  });
  return out;
}

struct P1Search {
  const Poset& p;
  std::size_t k = 0;
  std::uint64_t full = 0;
  std::vector<std::size_t> irr;       // branch order
  std::vector<std::uint64_t> assign;  // parallel to irr
  std::uint64_t nodes = 0;
  std::uint64_t node_limit = 0;
  std::vector<std::uint64_t> found;   // element -> mask, when complete

  bool derive_and_verify() {
    const std::size_t n = p.size();
    // every element is the meet of the irreducibles above it; the empty
    // meet pins the top to the full mask
    std::vector<std::uint64_t> f(n, full);
    for (std::size_t i = 0; i < irr.size(); ++i) {
      std::size_t m = irr[i];
      for (std::size_t x = 0; x < n; ++x)
        if (p.leq(x, m)) f[x] &= assign[i];
    }
    if (!p1_check_map(p, f, k).ok()) return false;
    found = std::move(f);
    return true;
  }

  bool consistent(std::size_t at, std::uint64_t mask) {
    std::size_t m = irr[at];
    if (mask == full && p.down(m).count() < p.size()) return false;
    for (std::size_t i = 0; i < at; ++i) {
      std::size_t other = irr[i];
      std::uint64_t om = assign[i];
      bool le = p.leq(m, other), ge = p.leq(other, m);
      if (le && ((mask & ~om) != 0 || mask == om)) return false;
      if (ge && ((om & ~mask) != 0 || mask == om)) return false;
      if (!le && !ge && ((mask & ~om) == 0 || (om & ~mask) == 0)) return false;
    }
    return true;
  }

  bool search(std::size_t at) {
    if (++nodes > node_limit)
      raise(Errc::capacity_exceeded, "problem-1 search node budget");
    if (at == irr.size()) return derive_and_verify();
    // candidates must sit below every assigned irreducible above this one
    std::uint64_t upper = full;
    std::size_t m = irr[at];
    for (std::size_t i = 0; i < at; ++i)
      if (p.leq(m, irr[i])) upper &= assign[i];
    std::uint64_t sub = upper;
    while (true) {
      if (consistent(at, sub)) {
        assign.push_back(sub);
        if (search(at + 1)) return true;
        assign.pop_back();
      }
      if (sub == 0) break;
      sub = (sub - 1) & upper;
    }
    return false;
  }
};

}  // namespace

P1MapCheck p1_check_map(const Poset& lattice,
                        const std::vector<std::uint64_t>& images,
                        std::size_t k) {
  P1MapCheck out;
  const std::size_t n = lattice.size();
  const std::uint64_t full = (k >= 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << k) - 1;
  out.order_embedding = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (images[x] & ~full) out.order_embedding = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (lattice.leq(x, y) != ((images[x] & ~images[y]) == 0))
        out.order_embedding = false;
      if (x != y && images[x] == images[y]) out.order_embedding = false;
    }
  }
  out.finite_meets = true;
  out.exact_joins = true;
  out.exact_meets = true;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bits s(n);
    std::uint64_t inter = full, uni = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        s.set(i);
        inter &= images[i];
        uni |= images[i];
      }
    auto m = lattice.meet(s);
    if (m && images[*m] != inter) out.finite_meets = false;
    auto r = exactness(lattice, s);
    if (r.join_exact && images[*r.join] != uni) out.exact_joins = false;
    if (r.meet_exact && images[*r.meet] != inter) out.exact_meets = false;
  }
  return out;
}

Problem1Status search_problem1(const Poset& lattice, std::size_t max_atoms,
                               const Budget& budget) {
  if (!classify(lattice).is_lattice)
    raise(Errc::not_a_lattice, "problem-1 search needs a lattice");
  if (max_atoms > budget.p1_max_atoms)
    raise(Errc::capacity_exceeded,
          "atom bound is " + std::to_string(budget.p1_max_atoms));
  if (lattice.size() > 20)
    raise(Errc::capacity_exceeded, "problem-1 search needs ≤ 20 elements");

  Problem1Status status;
  status.max_atoms = max_atoms;
  // k = 0 is the one-element algebra; only the one-element lattice fits
  for (std::size_t k = 0; k <= max_atoms; ++k) {
    P1Search s{.p = lattice,
               .k = k,
               .full = (std::uint64_t{1} << k) - 1,
               .irr = meet_irreducibles(lattice),
               .assign = {},
               .nodes = 0,
               .node_limit = budget.p1_max_nodes,
               .found = {}};
    if (s.search(0)) {
      status.kind = Problem1Status::Kind::embedding_found;
      status.atoms_used = k;
      status.witness = std::move(s.found);
      return status;
    }
  }
  status.kind = Problem1Status::Kind::none_within_bound;
  return status;
}

void survey_problem2(const SurveyOptions& options,
                     const std::function<void(const SearchRecord&)>& sink) {
  for (std::size_t n = 1; n <= options.nmax; ++n) {
    enumerate_lattices(
        n,
        [&](const Poset& lattice) {
          SearchRecord rec;
          rec.canonical_form = to_hex(canonical_form(lattice));
          rec.size = n;
          rec.distributive = classify(lattice).is_distributive;

          Embedding e = embed(lattice, options.budget);
          std::vector<Bits> gens = e.image;
          Subalgebra sub = generated_subalgebra_bits(e.algebra, gens);
          rec.algebra_size = e.algebra.size();
          rec.subalgebra_size = sub.members.size();
          rec.macneille_iso = macneille_iso_check(e.algebra, sub);
          if (options.p1_atoms > 0)
            rec.problem1 = search_problem1(lattice, options.p1_atoms,
                                           options.budget);
          sink(rec);
        },
        options.budget);
  }
}

bool footnote_check() {
  Poset p = make_b4_plus_top();
  Embedding e = embed(p);
  Embedding ed = embed(p.dual());
  const PairSpace& x = e.algebra.space();
  const PairSpace& xd = ed.algebra.space();

  // f(a,b) = (b,a), an order isomorphism X_P ≅ X_{P∂}
  std::vector<std::size_t> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [a, b] = x.pair(i);
    f[i] = xd.pair_index(b, a);
  }

  // atoms: covers of the bottom
  const std::size_t bottom = *p.bottom();
  bool differs = false;
  for (auto [lo, hi] : p.covers()) {
    if (lo != bottom) continue;
    std::size_t atom = hi;
    Bits mapped(xd.size());
    e.image[atom].for_each([&](std::size_t i) { mapped.set(f[i]); });
    if (mapped != ed.image[atom]) differs = true;
  }
  return differs;
}

}  // namespace funayama
