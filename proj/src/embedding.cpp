#include "funayama/embedding.hpp"

#include <random>

#include "funayama/errors.hpp"

namespace funayama {

Embedding embed(const Poset& p, const Budget& budget) {
  auto adj = adjoin_bounds(p);
  const Poset& source = adj.extended;
  PairSpace x = PairSpace::build(source);

  Embedding e;
  e.algebra = build_ro_algebra(x, budget);
  const PairSpace& space = e.algebra.space();

  const std::size_t bottom = *source.bottom();
  e.image.reserve(source.size());
  for (std::size_t a = 0; a < source.size(); ++a) {
    if (a == bottom) {
      e.image.push_back(Bits(space.size()));
    } else {
      std::size_t pa0 = space.pair_index(a, bottom);
      e.image.push_back(space.regularize_bits(space.below_mask(pa0)));
    }
  }
  e.source = source;
  if (adj.added_bottom || adj.added_top)
    e.original = Embedding::Restriction{p, adj.inject};

  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b)
      if (source.leq(a, b) != e.image[a].subset_of(e.image[b]))
        throw std::logic_error("map is not an order embedding");
  return e;
}

Embedding dual_embed(const Poset& p, const Budget& budget) {
  return embed(p.dual(), budget);
}

ExactnessReport exactness(const Poset& p, const Bits& subset) {
  ExactnessReport r;
  r.subset = subset;
  const std::size_t n = p.size();

  r.join = p.join(subset);
  if (r.join) {
    r.join_exact = true;
    for (std::size_t a = 0; a < n && r.join_exact; ++a) {
      Bits translated(n);
      bool defined = true;
      subset.for_each([&](std::size_t s) {
        if (auto m = p.meet2(a, s))
          translated.set(*m);
        else
          defined = false;
      });
      auto inner = defined ? p.join(translated) : std::nullopt;
      auto outer = p.meet2(a, *r.join);
      if (!defined || !inner || !outer || *inner != *outer) {
        r.join_exact = false;
        r.join_failure_witness = a;
      }
    }
  }

  r.meet = p.meet(subset);
  if (r.meet) {
    r.meet_exact = true;
    for (std::size_t a = 0; a < n && r.meet_exact; ++a) {
      Bits translated(n);
      bool defined = true;
      subset.for_each([&](std::size_t s) {
        if (auto j = p.join2(a, s))
          translated.set(*j);
        else
          defined = false;
      });
      auto inner = defined ? p.meet(translated) : std::nullopt;
      auto outer = p.join2(a, *r.meet);
      if (!defined || !inner || !outer || *inner != *outer) {
        r.meet_exact = false;
        r.meet_failure_witness = a;
      }
    }
  }
  return r;
}

namespace {

template <typename F>
void for_each_subset(std::size_t n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(i);
    f(s);
  }
}

}  // namespace

bool satisfies_jid(const Poset& p) {
  bool ok = true;
  for_each_subset(p.size(), [&](const Bits& s) {
    if (!ok) return;
    auto r = exactness(p, s);
    if (r.join && !r.join_exact) ok = false;
  });
  return ok;
}

bool satisfies_mid(const Poset& p) {
  bool ok = true;
  for_each_subset(p.size(), [&](const Bits& s) {
    if (!ok) return;
    auto r = exactness(p, s);
    if (r.meet && !r.meet_exact) ok = false;
  });
  return ok;
}

const char* to_string(PreservationMode m) {
  switch (m) {
    case PreservationMode::finite_meets: return "finite_meets";
    case PreservationMode::finite_joins: return "finite_joins";
    case PreservationMode::exact_joins: return "exact_joins";
    case PreservationMode::exact_meets: return "exact_meets";
    case PreservationMode::all_meets: return "all_meets";
    case PreservationMode::all_joins: return "all_joins";
  }
  return "?";
}

namespace {

// Checks one subset against the embedding for the given mode; appends a
// counterexample when the comparison fails.
void check_subset(const Embedding& e, PreservationMode mode, const Bits& s,
                  ModeCheck& out) {
  const Poset& p = e.source;
  const PairSpace& space = e.algebra.space();

  bool meet_side = mode == PreservationMode::finite_meets ||
                   mode == PreservationMode::exact_meets ||
                   mode == PreservationMode::all_meets;

  std::optional<std::size_t> value;
  if (meet_side) {
    value = p.meet(s);
    if (mode == PreservationMode::exact_meets) {
      auto r = exactness(p, s);
      if (!r.meet_exact) return;
    }
  } else {
    value = p.join(s);
    if (mode == PreservationMode::exact_joins) {
      auto r = exactness(p, s);
      if (!r.join_exact) return;
    }
  }
  if (!value) return;  // nothing to preserve

  Bits expected = e.image[*value];
  Bits actual(space.size());
  if (meet_side) {
    actual = Bits::full(space.size());
    s.for_each([&](std::size_t x) { actual &= e.image[x]; });
  } else {
    s.for_each([&](std::size_t x) { actual |= e.image[x]; });
    actual = space.regularize_bits(actual);
  }
  if (expected != actual) {
    out.ok = false;
    out.counterexamples.push_back({mode, s, expected, actual});
  }
}

}  // namespace

ModeCheck check_preservation(const Embedding& e, PreservationMode mode,
                             const Budget& budget,
                             const PreservationOptions& opts) {
  ModeCheck out;
  out.mode = mode;
  const std::size_t n = e.source.size();

  if (n <= budget.subset_sweep_max || opts.force_exhaustive) {
    if (n > 30) raise(Errc::capacity_exceeded, "subset sweep over 2^" +
                                                   std::to_string(n) +
                                                   " subsets");
    for_each_subset(n, [&](const Bits& s) { check_subset(e, mode, s, out); });
  } else {
    out.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    for (std::size_t t = 0; t < opts.sample_count; ++t) {
      Bits s(n);
      for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1) s.set(i);
      check_subset(e, mode, s, out);
    }
  }
  return out;
}

PreservationReport check_all_preservation(const Embedding& e,
                                          const Budget& budget,
                                          const PreservationOptions& opts) {
  PreservationReport report;
  auto run = [&](PreservationMode mode, bool& flag) {
    ModeCheck c = check_preservation(e, mode, budget, opts);
    flag = c.ok;
    report.exhaustive = report.exhaustive && c.exhaustive;
    report.counterexamples.insert(report.counterexamples.end(),
                                  c.counterexamples.begin(),
                                  c.counterexamples.end());
  };
  run(PreservationMode::finite_meets, report.finite_meets_ok);
  run(PreservationMode::finite_joins, report.finite_joins_ok);
  run(PreservationMode::exact_joins, report.exact_joins_ok);
  run(PreservationMode::exact_meets, report.exact_meets_ok);
  run(PreservationMode::all_meets, report.all_meets_ok);
  run(PreservationMode::all_joins, report.all_joins_ok);
  return report;
}

CorollaryCheck funayama_corollary_check(const Poset& lattice,
                                        const Budget& budget) {
  auto info = classify(lattice);
  if (!info.is_lattice) raise(Errc::not_a_lattice, "corollary check needs a lattice");

  CorollaryCheck out;
  out.jid_and_mid = satisfies_jid(lattice) && satisfies_mid(lattice);

  Embedding e = embed(lattice, budget);
  PreservationOptions opts;
  opts.force_exhaustive = lattice.size() <= 20;
  auto meets = check_preservation(e, PreservationMode::all_meets, budget, opts);
  auto joins = check_preservation(e, PreservationMode::all_joins, budget, opts);
  out.complete_embedding_via_e = meets.ok && joins.ok;
  return out;
}

}  // namespace funayama
