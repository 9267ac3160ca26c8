#include "funayama/ro_algebra.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "funayama/errors.hpp"

namespace funayama {

std::optional<std::size_t> RegularOpenAlgebra::index_of(const Bits& u) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), u,
                             Bits::carrier_less);
  if (it != carrier_.end() && *it == u)
    return static_cast<std::size_t>(it - carrier_.begin());
  return std::nullopt;
}

bool RegularOpenAlgebra::contains(const PairSet& u) const {
  return u.space_id == space_.id() && index_of(u.members).has_value();
}

std::size_t RegularOpenAlgebra::require(const PairSet& u) const {
  space_.check(u);
  if (auto i = index_of(u.members)) return *i;
  raise(Errc::foreign_element, "pair set is not a member of this algebra");
}

PairSet RegularOpenAlgebra::meet(const PairSet& u, const PairSet& v) const {
  require(u);
  require(v);
  return {space_.id(), u.members & v.members};
}

PairSet RegularOpenAlgebra::meet_all(std::span<const PairSet> us) const {
  Bits acc = Bits::full(space_.size());
  for (const auto& u : us) {
    require(u);
    acc &= u.members;
  }
  return {space_.id(), acc};
}

PairSet RegularOpenAlgebra::join_all(std::span<const PairSet> us) const {
  Bits acc(space_.size());
  for (const auto& u : us) {
    require(u);
    acc |= u.members;
  }
  return {space_.id(), space_.regularize_bits(acc)};
}

PairSet RegularOpenAlgebra::complement(const PairSet& u) const {
  require(u);
  return {space_.id(), space_.diamond_bits(u.members).complement()};
}

std::vector<PairSet> RegularOpenAlgebra::atom_sets() const {
  std::vector<PairSet> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back({space_.id(), a});
  return out;
}

RegularOpenAlgebra build_ro_algebra(const PairSpace& x, const Budget& budget) {
  const std::size_t n = x.size();

  // Principal regular opens □◇⇓x, deduplicated (distinct x may yield the
  // same set).
  std::vector<Bits> principals;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (std::size_t i = 0; i < n; ++i) {
      Bits r = x.regularize_bits(x.below_mask(i));
      if (seen.insert(r).second) principals.push_back(std::move(r));
    }
  }

  // Minimal principal regular opens. Every nonzero regular open U contains
  // □◇⇓x for each x ∈ U, so the minimal principals are exactly the atoms and
  // every member of the algebra is a join of a subset of them.
  std::vector<Bits> atoms;
  for (std::size_t i = 0; i < principals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < principals.size(); ++j)
      if (i != j && principals[j].subset_of(principals[i])) {
        minimal = false;
        break;
      }
    if (minimal) atoms.push_back(principals[i]);
  }

  const std::size_t k = atoms.size();
  if (k > budget.max_generators)
    raise(Errc::capacity_exceeded,
          std::to_string(k) + " generators exceed the limit of " +
              std::to_string(budget.max_generators));
  if (k >= 63 || (std::uint64_t{1} << k) > budget.max_join_evals)
    raise(Errc::capacity_exceeded,
          "2^" + std::to_string(k) + " join evaluations exceed the budget of " +
              std::to_string(budget.max_join_evals));

  RegularOpenAlgebra b;
  b.space_ = x;
  const std::uint64_t total = std::uint64_t{1} << k;
  b.carrier_.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bits u(n);
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) u |= atoms[i];
    b.carrier_.push_back(x.regularize_bits(u));
  }
  std::sort(b.carrier_.begin(), b.carrier_.end(), Bits::carrier_less);
  for (std::size_t i = 1; i < b.carrier_.size(); ++i)
    if (b.carrier_[i] == b.carrier_[i - 1])
      throw std::logic_error("regular open carrier has duplicate joins");

  std::sort(atoms.begin(), atoms.end(), Bits::carrier_less);
  b.atoms_ = std::move(atoms);
  return b;
}

namespace {

// Definition-direct evaluation; deliberately quadratic and independent of
// the precomputed ⇓ masks used by the construction path.
Bits slow_diamond(const PairSpace& x, const Bits& u) {
  Bits r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t y = 0; y < x.size(); ++y)
      if (x.sq_leq(y, i) && u.test(y)) {
        r.set(i);
        break;
      }
  return r;
}

Bits slow_box(const PairSpace& x, const Bits& u) {
  Bits r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool inside = true;
    for (std::size_t y = 0; y < x.size() && inside; ++y)
      if (x.sq_leq(y, i) && !u.test(y)) inside = false;
    if (inside) r.set(i);
  }
  return r;
}

void enumerate_downsets(const PairSpace& x,
                        const std::vector<std::size_t>& topo, std::size_t at,
                        Bits& current, std::vector<Bits>& out) {
  if (at == topo.size()) {
    out.push_back(current);
    return;
  }
  std::size_t p = topo[at];
  enumerate_downsets(x, topo, at + 1, current, out);
  // p may enter only if everything strictly below it already has
  Bits strictly_below = x.below_mask(p);
  strictly_below.reset(p);
  if (strictly_below.subset_of(current)) {
    current.set(p);
    enumerate_downsets(x, topo, at + 1, current, out);
    current.reset(p);
  }
}

}  // namespace

std::vector<Bits> oracle_ro_enumerate(const PairSpace& x,
                                      const Budget& budget) {
  if (x.size() > budget.oracle_max_pairs)
    raise(Errc::capacity_exceeded,
          "oracle bound is " + std::to_string(budget.oracle_max_pairs) +
              " pairs, space has " + std::to_string(x.size()));

  // topological order of ⊑, smaller down-sets first
  std::vector<std::size_t> topo(x.size());
  for (std::size_t i = 0; i < topo.size(); ++i) topo[i] = i;
  std::sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
    return x.below_mask(a).count() < x.below_mask(b).count();
  });

  std::vector<Bits> downsets;
  Bits current(x.size());
  enumerate_downsets(x, topo, 0, current, downsets);

  std::vector<Bits> fixpoints;
  for (const auto& u : downsets)
    if (slow_box(x, slow_diamond(x, u)) == u) fixpoints.push_back(u);
  std::sort(fixpoints.begin(), fixpoints.end(), Bits::carrier_less);
  return fixpoints;
}

Subalgebra generated_subalgebra_bits(const RegularOpenAlgebra& b,
                                     std::span<const Bits> gens) {
  std::vector<std::size_t> order;
  std::vector<bool> in(b.size(), false);

  auto add = [&](std::size_t idx) {
    if (!in[idx]) {
      in[idx] = true;
      order.push_back(idx);
    }
  };
  auto index_or_fail = [&](const Bits& u) {
    auto i = b.index_of(u);
    if (!i) raise(Errc::foreign_element, "generator is not in the carrier");
    return *i;
  };

  add(index_or_fail(Bits(b.space().size())));
  add(index_or_fail(Bits::full(b.space().size())));
  for (const auto& g : gens) add(index_or_fail(g));

  // worklist closure under complement and binary meet
  for (std::size_t next = 0; next < order.size(); ++next) {
    std::size_t u = order[next];
    Bits comp = b.space().diamond_bits(b.member(u)).complement();
    add(index_or_fail(comp));
    for (std::size_t j = 0; j <= next; ++j) {
      std::size_t v = order[j];
      add(index_or_fail(b.member(u) & b.member(v)));
    }
  }

  Subalgebra s;
  s.members = std::move(order);
  std::sort(s.members.begin(), s.members.end());
  return s;
}

Subalgebra generated_subalgebra(const RegularOpenAlgebra& b,
                                std::span<const PairSet> gens) {
  std::vector<Bits> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) {
    b.space().check(g);
    raw.push_back(g.members);
  }
  return generated_subalgebra_bits(b, raw);
}

bool is_dense_subalgebra(const RegularOpenAlgebra& b, const Subalgebra& s) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Bits& u = b.member(i);
    if (u.none()) continue;
    bool witnessed = false;
    for (std::size_t j : s.members) {
      const Bits& v = b.member(j);
      if (v.any() && v.subset_of(u)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool macneille_iso_check(const RegularOpenAlgebra& b, const Subalgebra& s) {
  bool dense = is_dense_subalgebra(b, s);
  bool equal = s.members.size() == b.size();
  // A dense subalgebra of a finite Boolean algebra contains every atom and
  // hence everything.
  if (dense != equal)
    throw std::logic_error("density and carrier equality disagree on a finite algebra");
  return dense;
}

AxiomReport verify_boolean_axioms(const RegularOpenAlgebra& b,
                                  const Subalgebra* sub,
                                  std::size_t exhaustive_cap) {
  std::vector<std::size_t> members;
  if (sub) {
    members = sub->members;
  } else {
    members.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) members[i] = i;
  }
  const std::size_t m = members.size();
  AxiomReport report;
  auto fail = [&](std::string what) {
    report.ok = false;
    if (report.violation.empty()) report.violation = std::move(what);
  };

  const Bits bot(b.space().size());
  const Bits top = Bits::full(b.space().size());
  if (!b.index_of(bot) || !b.index_of(top)) fail("bottom or top missing");

  // unary: complement laws, involution, closure
  std::vector<Bits> comp(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Bits& u = b.member(members[i]);
    comp[i] = b.space().diamond_bits(u).complement();
    if (!b.index_of(comp[i])) fail("complement leaves the carrier");
    if ((u & comp[i]).any()) fail("U ⊓ ¬U ≠ 0");
    if (b.space().regularize_bits(u | comp[i]) != top) fail("U ⊔ ¬U ≠ 1");
    Bits back = b.space().diamond_bits(comp[i]).complement();
    if (back != u) fail("¬¬U ≠ U");
  }

  // pairwise: closure + commutativity + absorption
  std::vector<std::vector<std::uint32_t>> join_ix, meet_ix;
  bool tables = m <= 1024;
  if (tables) {
    join_ix.assign(m, std::vector<std::uint32_t>(m));
    meet_ix.assign(m, std::vector<std::uint32_t>(m));
  }
  std::unordered_map<std::size_t, std::size_t> carrier_to_local;
  for (std::size_t i = 0; i < m; ++i) carrier_to_local[members[i]] = i;
  auto local_index = [&](const Bits& u) -> std::optional<std::size_t> {
    auto ci = b.index_of(u);
    if (!ci) return std::nullopt;
    auto it = carrier_to_local.find(*ci);
    if (it == carrier_to_local.end()) return std::nullopt;
    return it->second;
  };

  for (std::size_t i = 0; i < m; ++i) {
    const Bits& u = b.member(members[i]);
    for (std::size_t j = i; j < m; ++j) {
      const Bits& v = b.member(members[j]);
      ++report.pair_checks;
      Bits mt = u & v;
      Bits jn = b.space().regularize_bits(u | v);
      auto mi = local_index(mt);
      auto ji = local_index(jn);
      if (!mi) fail("meet leaves the set");
      if (!ji) fail("join leaves the set");
      if (b.space().regularize_bits(u | mt) != u) fail("absorption U ⊔ (U⊓V) ≠ U");
      if ((u & jn) != u) fail("absorption U ⊓ (U⊔V) ≠ U");
      if (tables && mi && ji) {
        meet_ix[i][j] = meet_ix[j][i] = static_cast<std::uint32_t>(*mi);
        join_ix[i][j] = join_ix[j][i] = static_cast<std::uint32_t>(*ji);
      }
      if (!report.ok) return report;
    }
  }

  // triples: associativity and distributivity
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t l) {
    ++report.triple_checks;
    if (tables) {
      if (meet_ix[meet_ix[i][j]][l] != meet_ix[i][meet_ix[j][l]])
        fail("meet not associative");
      if (join_ix[join_ix[i][j]][l] != join_ix[i][join_ix[j][l]])
        fail("join not associative");
      if (meet_ix[i][join_ix[j][l]] != join_ix[meet_ix[i][j]][meet_ix[i][l]])
        fail("meet does not distribute over join");
    } else {
      const Bits& u = b.member(members[i]);
      const Bits& v = b.member(members[j]);
      const Bits& w = b.member(members[l]);
      Bits lhs = u & b.space().regularize_bits(v | w);
      Bits rhs = b.space().regularize_bits((u & v) | (u & w));
      if (lhs != rhs) fail("meet does not distribute over join");
      Bits ja = b.space().regularize_bits(b.space().regularize_bits(u | v) | w);
      Bits jb = b.space().regularize_bits(u | b.space().regularize_bits(v | w));
      if (ja != jb) fail("join not associative");
    }
  };

  if (m <= exhaustive_cap) {
    for (std::size_t i = 0; i < m && report.ok; ++i)
      for (std::size_t j = 0; j < m && report.ok; ++j)
        for (std::size_t l = 0; l < m && report.ok; ++l) check_triple(i, j, l);
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (int t = 0; t < 200'000 && report.ok; ++t)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
  return report;
}

}  // namespace funayama
