#include "funayama/poset.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "funayama/errors.hpp"

namespace funayama {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::duplicate_name: return "duplicate name";
    case Errc::unknown_element: return "unknown element";
    case Errc::cycle_detected: return "cycle detected";
    case Errc::not_bounded: return "not bounded";
    case Errc::degenerate_poset: return "degenerate poset";
    case Errc::unknown_pair: return "unknown pair";
    case Errc::capacity_exceeded: return "capacity exceeded";
    case Errc::foreign_element: return "foreign element";
    case Errc::not_a_lattice: return "not a lattice";
    case Errc::unknown_name: return "unknown name";
    case Errc::syntax_error: return "syntax error";
  }
  return "error";
}

Poset Poset::from_covers(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second)
      raise(Errc::duplicate_name, "element '" + names[i] + "'");
  }
  const std::size_t n = names.size();
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) down[i].set(i);
  // down[y] accumulates everything reachable downward from y
  std::vector<std::vector<std::size_t>> below(n);
  for (const auto& [lo, hi] : covers) {
    auto li = index.find(lo);
    if (li == index.end()) raise(Errc::unknown_element, "'" + lo + "' in cover");
    auto hi_it = index.find(hi);
    if (hi_it == index.end())
      raise(Errc::unknown_element, "'" + hi + "' in cover");
    below[hi_it->second].push_back(li->second);
  }
  // transitive closure by repeated relaxation
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x : below[y]) {
        Bits merged = down[y] | down[x];
        if (merged != down[y]) {
          down[y] = std::move(merged);
          changed = true;
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (down[y].test(x) && down[x].test(y))
        raise(Errc::cycle_detected,
              "'" + names[x] + "' and '" + names[y] + "' are mutually below");
  return from_down_sets(names, std::move(down));
}

Poset Poset::from_down_sets(std::vector<std::string> names,
                            std::vector<Bits> down) {
  const std::size_t n = names.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& nm : names)
      if (!seen.insert(nm).second)
        raise(Errc::duplicate_name, "element '" + nm + "'");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!down[x].test(x)) raise(Errc::cycle_detected, "relation not reflexive");
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && down[x].test(y) && down[y].test(x))
        raise(Errc::cycle_detected, "relation not antisymmetric");
      if (down[x].test(y) && !down[y].subset_of(down[x]))
        raise(Errc::cycle_detected, "relation not transitive");
    }
  }
  Poset p;
  p.names_ = std::move(names);
  p.down_ = std::move(down);
  p.up_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.down_[y].test(x)) p.up_[x].set(y);
  return p;
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Poset::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  raise(Errc::unknown_element, "'" + std::string(name) + "'");
}

std::optional<std::size_t> Poset::meet(const Bits& subset) const {
  const std::size_t n = size();
  Bits lower = Bits::full(n);
  subset.for_each([&](std::size_t x) { lower &= down_[x]; });
  // the meet is the greatest member of `lower`
  std::optional<std::size_t> best;
  lower.for_each([&](std::size_t m) {
    if (lower.subset_of(down_[m])) best = m;
  });
  return best;
}

std::optional<std::size_t> Poset::join(const Bits& subset) const {
  const std::size_t n = size();
  Bits upper = Bits::full(n);
  subset.for_each([&](std::size_t x) { upper &= up_[x]; });
  std::optional<std::size_t> best;
  upper.for_each([&](std::size_t j) {
    if (upper.subset_of(up_[j])) best = j;
  });
  return best;
}

std::optional<std::size_t> Poset::meet2(std::size_t x, std::size_t y) const {
  Bits s(size());
  s.set(x);
  s.set(y);
  return meet(s);
}

std::optional<std::size_t> Poset::join2(std::size_t x, std::size_t y) const {
  Bits s(size());
  s.set(x);
  s.set(y);
  return join(s);
}

std::optional<std::size_t> Poset::bottom() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].count() == size()) return x;
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (down_[x].count() == size()) return x;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (lo == hi || !leq(lo, hi)) continue;
      bool covering = true;
      for (std::size_t mid = 0; covering && mid < n; ++mid)
        if (mid != lo && mid != hi && leq(lo, mid) && leq(mid, hi))
          covering = false;
      if (covering) out.emplace_back(lo, hi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset Poset::dual() const {
  Poset d;
  d.names_ = names_;
  d.down_ = up_;
  d.up_ = down_;
  return d;
}

LatticeInfo classify(const Poset& p) {
  LatticeInfo info;
  const std::size_t n = p.size();
  info.bottom = p.bottom();
  info.top = p.top();
  info.is_bounded = info.bottom.has_value() && info.top.has_value();

  info.is_meet_semilattice = true;
  info.is_join_semilattice = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      if (!p.meet2(x, y)) info.is_meet_semilattice = false;
      if (!p.join2(x, y)) info.is_join_semilattice = false;
    }
  }
  info.is_lattice =
      n > 0 && info.is_meet_semilattice && info.is_join_semilattice;

  info.is_distributive = info.is_lattice;
  if (info.is_lattice) {
    for (std::size_t x = 0; x < n && info.is_distributive; ++x)
      for (std::size_t y = 0; y < n && info.is_distributive; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          std::size_t yz = *p.join2(y, z);
          std::size_t lhs = *p.meet2(x, yz);
          std::size_t rhs = *p.join2(*p.meet2(x, y), *p.meet2(x, z));
          if (lhs != rhs) {
            info.is_distributive = false;
            break;
          }
        }
  }
  return info;
}

namespace {

std::string fresh_name(const std::vector<std::string>& taken,
                       std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end())
    base += "_";
  return base;
}

}  // namespace

BoundAdjunction adjoin_bounds(const Poset& p) {
  const std::size_t n = p.size();
  bool need_bottom = !p.bottom().has_value();
  bool need_top = !p.top().has_value();
  if (n == 0) need_bottom = need_top = true;
  if (!need_bottom && !need_top && n < 2) need_top = true;  // force 0 ≠ 1

  if (!need_bottom && !need_top) {
    BoundAdjunction adj;
    adj.extended = p;
    adj.inject.resize(n);
    std::iota(adj.inject.begin(), adj.inject.end(), 0);
    return adj;
  }

  std::vector<std::string> names;
  std::size_t offset = need_bottom ? 1 : 0;
  if (need_bottom) names.push_back(fresh_name(p.names(), "bot"));
  for (const auto& nm : p.names()) names.push_back(nm);
  if (need_top) names.push_back(fresh_name(names, "top"));

  const std::size_t m = names.size();
  std::vector<Bits> down(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) down[i].set(i);
  for (std::size_t x = 0; x < n; ++x)
    p.down(x).for_each([&](std::size_t y) { down[x + offset].set(y + offset); });
  if (need_bottom)
    for (std::size_t i = 0; i < m; ++i) down[i].set(0);
  if (need_top) down[m - 1] = Bits::full(m);

  BoundAdjunction adj;
  adj.extended = Poset::from_down_sets(std::move(names), std::move(down));
  adj.inject.resize(n);
  for (std::size_t i = 0; i < n; ++i) adj.inject[i] = i + offset;
  if (need_bottom) adj.added_bottom = 0;
  if (need_top) adj.added_top = m - 1;
  return adj;
}

Bits down_set(const Poset& p, std::size_t x) {
  if (x >= p.size()) raise(Errc::unknown_element, "index out of range");
  return p.down(x);
}

namespace {

// Label-independent refinement key per element: start from
// (|down|, |up|), then fold in the sorted keys of lower and upper covers.
std::vector<std::uint64_t> invariant_keys(const Poset& p) {
  const std::size_t n = p.size();
  auto cover_pairs = p.covers();
  std::vector<std::vector<std::size_t>> lower(n), upper(n);
  for (auto [lo, hi] : cover_pairs) {
    lower[hi].push_back(lo);
    upper[lo].push_back(hi);
  }
  std::vector<std::uint64_t> key(n);
  for (std::size_t i = 0; i < n; ++i)
    key[i] = (static_cast<std::uint64_t>(p.down(i).count()) << 32) |
             p.up(i).count();
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t h = key[i] * 0x9e3779b97f4a7c15ull + 1;
      std::vector<std::uint64_t> neigh;
      for (auto j : lower[i]) neigh.push_back(key[j] * 2);
      for (auto j : upper[i]) neigh.push_back(key[j] * 2 + 1);
      std::sort(neigh.begin(), neigh.end());
      for (auto v : neigh) h = h * 0xff51afd7ed558ccdull + v;
      next[i] = h;
    }
    key = std::move(next);
  }
  return key;
}

std::string encode_under_perm(const Poset& p,
                              const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::string bytes(1 + (n * n + 7) / 8, '\0');
  bytes[0] = static_cast<char>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(perm[i], perm[j])) {
        std::size_t bit = i * n + j;
        bytes[1 + bit / 8] |= static_cast<char>(1 << (bit % 8));
      }
  return bytes;
}

}  // namespace

std::string canonical_form(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return std::string(1, '\0');
  if (n > 200) raise(Errc::capacity_exceeded, "canonical form beyond 200 elements");

  auto key = invariant_keys(p);
  // group elements into classes ordered by key
  std::map<std::uint64_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) classes[key[i]].push_back(i);

  std::uint64_t perm_count = 1;
  for (auto& [k, members] : classes) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= members.size(); ++i) {
      f *= i;
      if (f > 10'000'000) raise(Errc::capacity_exceeded, "canonical form search");
    }
    perm_count *= f;
    if (perm_count > 10'000'000)
      raise(Errc::capacity_exceeded, "canonical form search");
  }

  std::vector<std::vector<std::size_t>> groups;
  for (auto& [k, members] : classes) groups.push_back(members);
  for (auto& g : groups) std::sort(g.begin(), g.end());

  std::string best;
  std::vector<std::size_t> perm;
  perm.reserve(n);
  // odometer over per-class permutations
  bool done = false;
  while (!done) {
    perm.clear();
    for (const auto& g : groups) perm.insert(perm.end(), g.begin(), g.end());
    std::string enc = encode_under_perm(p, perm);
    if (best.empty() || enc < best) best = std::move(enc);
    // advance
    done = true;
    for (auto& g : groups) {
      if (std::next_permutation(g.begin(), g.end())) {
        done = false;
        break;
      }
      // g rolled over to sorted order; carry to next class
    }
  }
  return best;
}

Poset poset_from_canonical(const std::string& form) {
  if (form.empty()) raise(Errc::syntax_error, "empty canonical form");
  const std::size_t n = static_cast<unsigned char>(form[0]);
  if (form.size() != 1 + (n * n + 7) / 8)
    raise(Errc::syntax_error, "canonical form length mismatch");
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t bit = i * n + j;
      if ((form[1 + bit / 8] >> (bit % 8)) & 1) down[j].set(i);
    }
  return Poset::from_down_sets(std::move(names), std::move(down));
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace funayama
