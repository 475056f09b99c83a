#pragma once

#include <cstdint>

#include "leapfrog/model.hpp"
#include "leapfrog/search.hpp"

namespace testing_support {

using namespace leapfrog;

/// The 7-policy, 4-voter leapfrogging example, written out literally.
inline RawInstance example_raw() {
  RawInstance raw;
  raw.policies = 7;
  raw.party_a = {3, {{3}, {4}, {5}, {6}, {2}, {1}, {7}}};
  raw.party_b = {5, {{5}, {4}, {3}, {2}, {6}, {1}, {7}}};
  raw.voters = {
      {1, {{1}, {2}, {3}, {4}, {5}, {6}, {7}}, 1, 2},
      {2, {{2}, {1}, {3}, {4}, {5}, {6}, {7}}, 1, 3},
      {6, {{6}, {5}, {7}, {4}, {3}, {2}, {1}}, 5, 7},
      {7, {{7}, {6}, {5}, {4}, {3}, {2}, {1}}, 6, 7},
  };
  return raw;
}

inline Instance example() { return validate_instance(example_raw()); }

inline RawInstance widened_example_raw() {
  RawInstance raw = example_raw();
  for (auto& v : raw.voters) {
    v.lo = 1;
    v.hi = raw.policies;
  }
  return raw;
}

inline Instance no_voters(int m, PolicyIndex p, PolicyIndex q) {
  RawInstance raw;
  raw.policies = m;
  Rng rng(static_cast<std::uint64_t>(m * 131 + p * 17 + q));
  raw.party_a = {p, random_single_peaked_tiers(rng, m, p, true)};
  raw.party_b = {q, random_single_peaked_tiers(rng, m, q, true)};
  return validate_instance(raw);
}

/// Small instances for exhaustive property checks.
inline GenConfig small_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.m_range = {2, 7};
  cfg.n_range = {0, 6};
  cfg.seed = seed;
  return cfg;
}

}  // namespace testing_support
