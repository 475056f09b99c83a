#pragma once

// Brute-force reference computations used only by tests. Everything here
// works on RawInstance tier lists by linear search and never calls the
// library's election, preference, or equilibrium code.

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "leapfrog/model.hpp"

namespace oracle {

using leapfrog::PolicyIndex;
using leapfrog::RawInstance;
using leapfrog::Tiers;

inline int position(const Tiers& tiers, PolicyIndex x) {
  for (int k = 0; k < static_cast<int>(tiers.size()); ++k) {
    if (std::find(tiers[k].begin(), tiers[k].end(), x) != tiers[k].end()) return k;
  }
  return -1;
}

inline bool better(const Tiers& tiers, PolicyIndex a, PolicyIndex b) {
  return position(tiers, a) < position(tiers, b);
}

inline bool at_least(const Tiers& tiers, PolicyIndex a, PolicyIndex b) {
  return position(tiers, a) <= position(tiers, b);
}

/// 'A', 'B' or 'T'.
inline char outcome(const RawInstance& raw, PolicyIndex s, PolicyIndex t) {
  int n_a = 0, n_b = 0;
  for (const auto& v : raw.voters) {
    bool active = false;
    for (PolicyIndex x = v.lo; x <= v.hi; ++x) active = active || x == s || x == t;
    if (!active) continue;
    if (better(v.ranking, s, t)) ++n_a;
    if (better(v.ranking, t, s)) ++n_b;
  }
  return n_a > n_b ? 'A' : n_b > n_a ? 'B' : 'T';
}

inline std::vector<int> active_set(const RawInstance& raw, PolicyIndex s, PolicyIndex t) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(raw.voters.size()); ++k) {
    const auto& v = raw.voters[k];
    if ((v.lo <= s && s <= v.hi) || (v.lo <= t && t <= v.hi)) out.push_back(k);
  }
  return out;
}

// (electoral class, -tier of own platform): larger tuple is better.
inline std::pair<int, int> value_for_a(const RawInstance& raw, PolicyIndex s, PolicyIndex t) {
  const char g = outcome(raw, s, t);
  return {g == 'A' ? 2 : g == 'T' ? 1 : 0, -position(raw.party_a.ranking, s)};
}

inline std::pair<int, int> value_for_b(const RawInstance& raw, PolicyIndex s, PolicyIndex t) {
  const char g = outcome(raw, s, t);
  return {g == 'B' ? 2 : g == 'T' ? 1 : 0, -position(raw.party_b.ranking, t)};
}

inline bool nash(const RawInstance& raw, PolicyIndex s, PolicyIndex t) {
  for (PolicyIndex d = 1; d <= raw.policies; ++d) {
    if (value_for_a(raw, d, t) > value_for_a(raw, s, t)) return false;
    if (value_for_b(raw, s, d) > value_for_b(raw, s, t)) return false;
  }
  return true;
}

inline std::vector<std::pair<PolicyIndex, PolicyIndex>> equilibria(const RawInstance& raw) {
  std::vector<std::pair<PolicyIndex, PolicyIndex>> out;
  for (PolicyIndex s = 1; s <= raw.policies; ++s)
    for (PolicyIndex t = 1; t <= raw.policies; ++t)
      if (nash(raw, s, t)) out.emplace_back(s, t);
  return out;
}

/// All-pairs same-side check (not just adjacent steps).
inline bool single_peaked(const Tiers& tiers, int m, PolicyIndex peak) {
  for (PolicyIndex a = 1; a <= m; ++a) {
    for (PolicyIndex b = 1; b <= m; ++b) {
      if (a < b && b <= peak && !better(tiers, b, a)) return false;
      if (peak <= b && b < a && !better(tiers, b, a)) return false;
    }
  }
  return true;
}

struct CrossSideFailure {
  int a;
  int b;
  int which;  // 0: right-over-left, 1: left-over-right
};

/// Scans all a, b in 1..m and skips pairs where any displaced policy is off
/// the line.
inline std::optional<CrossSideFailure> cross_side_failure(const RawInstance& raw) {
  const int m = raw.policies;
  const int p = raw.party_a.ideal, q = raw.party_b.ideal;
  auto in = [m](int j) { return j >= 1 && j <= m; };
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      if (!in(p + a) || !in(p - b) || !in(q + a) || !in(q - b)) continue;
      const auto& ta = raw.party_a.ranking;
      const auto& tb = raw.party_b.ranking;
      if (at_least(ta, p + a, p - b) != at_least(tb, q + a, q - b)) return CrossSideFailure{a, b, 0};
      if (at_least(ta, p - b, p + a) != at_least(tb, q - b, q + a)) return CrossSideFailure{a, b, 1};
    }
  }
  return std::nullopt;
}

inline bool fixed_participation(const RawInstance& raw) {
  std::optional<std::vector<int>> first;
  for (PolicyIndex s = 1; s <= raw.policies; ++s) {
    for (PolicyIndex t = 1; t <= raw.policies; ++t) {
      if (s == t) continue;
      auto set = active_set(raw, s, t);
      if (!first) first = set;
      if (*first != set) return false;
    }
  }
  return true;
}

}  // namespace oracle
