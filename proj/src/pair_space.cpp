#include "funayama/pair_space.hpp"

#include <atomic>

#include "funayama/errors.hpp"

namespace funayama {

namespace {
std::atomic<std::uint64_t> next_space_id{1};
}

PairSpace PairSpace::build(const Poset& base) {
  auto bottom = base.bottom();
  auto top = base.top();
  if (!bottom || !top) raise(Errc::not_bounded, "pair space needs 0 and 1");
  if (*bottom == *top) raise(Errc::degenerate_poset, "pair space needs 0 ≠ 1");

  PairSpace x;
  x.id_ = next_space_id.fetch_add(1);
  x.base_ = base;
  const std::size_t n = base.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!base.leq(a, b)) x.pairs_.emplace_back(a, b);

  const std::size_t m = x.pairs_.size();
  x.below_.assign(m, Bits(m));
  for (std::size_t j = 0; j < m; ++j) {
    auto [c, d] = x.pairs_[j];
    for (std::size_t i = 0; i < m; ++i) {
      auto [a, b] = x.pairs_[i];
      // (a,b) ⊑ (c,d) iff a ≤ c and b ≥ d
      if (base.leq(a, c) && base.leq(d, b)) x.below_[j].set(i);
    }
  }
  return x;
}

std::string PairSpace::pair_name(std::size_t i) const {
  auto [a, b] = pairs_[i];
  return "(" + base_.name(a) + "," + base_.name(b) + ")";
}

std::optional<std::size_t> PairSpace::find_pair(std::size_t a,
                                                std::size_t b) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (pairs_[i].first == a && pairs_[i].second == b) return i;
  return std::nullopt;
}

std::size_t PairSpace::pair_index(std::size_t a, std::size_t b) const {
  if (auto i = find_pair(a, b)) return *i;
  raise(Errc::unknown_pair,
        "(" + base_.name(a) + "," + base_.name(b) + ") not in space");
}

PairSet PairSpace::make_set(const Bits& members) const {
  if (members.universe() != size())
    raise(Errc::foreign_element, "member mask has wrong universe");
  return {id_, members};
}

const Bits& PairSpace::check(const PairSet& u) const {
  if (u.space_id != id_ || u.members.universe() != size())
    raise(Errc::foreign_element, "pair set belongs to a different space");
  return u.members;
}

PairSet PairSpace::below(std::size_t i) const {
  if (i >= size()) raise(Errc::unknown_pair, "pair index out of range");
  return {id_, below_[i]};
}

Bits PairSpace::box_bits(const Bits& u) const {
  Bits r(size());
  for (std::size_t i = 0; i < below_.size(); ++i)
    if (below_[i].subset_of(u)) r.set(i);
  return r;
}

Bits PairSpace::diamond_bits(const Bits& u) const {
  Bits r(size());
  for (std::size_t i = 0; i < below_.size(); ++i)
    if (below_[i].intersects(u)) r.set(i);
  return r;
}

Bits PairSpace::regularize_bits(const Bits& u) const {
  return box_bits(diamond_bits(u));
}

bool PairSpace::is_downset_bits(const Bits& u) const {
  bool ok = true;
  u.for_each([&](std::size_t i) {
    if (!below_[i].subset_of(u)) ok = false;
  });
  return ok;
}

PairSet PairSpace::box(const PairSet& u) const {
  return {id_, box_bits(check(u))};
}

PairSet PairSpace::diamond(const PairSet& u) const {
  return {id_, diamond_bits(check(u))};
}

PairSet PairSpace::regularize(const PairSet& u) const {
  return {id_, regularize_bits(check(u))};
}

bool PairSpace::is_downset(const PairSet& u) const {
  return is_downset_bits(check(u));
}

DualIsoReport dual_iso(const Poset& p) {
  PairSpace x = PairSpace::build(p);
  PairSpace xd = PairSpace::build(p.dual());

  DualIsoReport report;
  report.pair_count = x.size();
  if (x.size() != xd.size()) return report;

  report.map.resize(x.size());
  std::vector<bool> hit(xd.size(), false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [a, b] = x.pair(i);
    auto j = xd.find_pair(b, a);
    if (!j || hit[*j]) return report;
    hit[*j] = true;
    report.map[i] = *j;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x.sq_leq(i, j) != xd.sq_leq(report.map[i], report.map[j]))
        return report;
  report.ok = true;
  return report;
}

}  // namespace funayama
