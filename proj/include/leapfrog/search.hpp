#pragma once

// Seeded instance generation and falsification campaigns. Every trial draws
// from its own RNG seeded by (config seed, trial index), so campaign results
// do not depend on the number of threads.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leapfrog/model.hpp"
#include "leapfrog/preferences.hpp"

namespace leapfrog {

enum class PartyMode { kFreeSinglePeaked, kSymmetric, kCommonShape };
enum class AttractionMode { kRandomInterval, kFull };

struct IntRange {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct GenConfig {
  IntRange m_range{5, 9};
  IntRange n_range{2, 6};
  PartyMode party_mode = PartyMode::kFreeSinglePeaked;
  AttractionMode attraction_mode = AttractionMode::kRandomInterval;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument for empty ranges, m < 2, m above
/// kMaxPolicies, or a negative voter count.
void validate_config(const GenConfig& cfg);

using Rng = std::mt19937_64;

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Uniform on [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// A random single-peaked tier list: the left chain (ideal-1, ..., 1) and the
/// right chain (ideal+1, ..., m) interleaved at random. With `allow_ties`,
/// the next element of each chain may share a tier.
Tiers random_single_peaked_tiers(Rng& rng, int m, PolicyIndex ideal, bool allow_ties);

/// Random common utility shape covering displacements -(m-1)..(m-1), strictly
/// decreasing away from 0 on each side. Small integer steps make cross-side
/// ties likely.
UtilityShape random_shape(Rng& rng, int m);

RawInstance gen_raw_instance(const GenConfig& cfg, std::uint64_t trial);

/// Deterministic in (cfg.seed, trial).
Instance gen_instance(const GenConfig& cfg, std::uint64_t trial);

/// True iff the active-voter set is the same at every profile with s != t.
bool has_fixed_participation(const Instance& inst);

struct AxiomReport {
  bool party_a_single_peaked = true;
  bool party_b_single_peaked = true;
  std::vector<bool> voters_single_peaked;
  CrossSideCheck cross_side;
  bool fixed_participation = false;
};

AxiomReport check_axioms(const Instance& inst);

enum class Conjecture {
  kProp1,            // reversed order => tied and mutually leapfrogged
  kProp2,            // fixed participation => no mutual leapfrog
  kThm1,             // cross-side agreement => no mutual leapfrog
  kProp4ImpliesAx2,  // symmetric / common-shape orders => cross-side agreement
};

const char* to_string(Conjecture c);
std::optional<Conjecture> parse_conjecture(const std::string& name);

struct CampaignOptions {
  bool apply_precondition = true;
  /// Replace trial 0 with the built-in example.
  bool inject_builtin_example = false;
  /// OpenMP thread count; 0 uses the runtime default.
  int threads = 0;
  std::size_t max_witnesses = 100;
};

struct Violation {
  std::uint64_t trial = 0;
  RawInstance instance;
  std::optional<Profile> profile;
  std::string detail;
  bool constructed_by_prop4 = false;
};

/// Result of checking one instance against one conjecture.
struct TrialResult {
  bool precondition = false;
  int equilibria = 0;
  int reversed_order = 0;
  int mutual_leapfrog = 0;
  bool violated = false;
  std::optional<Profile> profile;
  std::string detail;
};

/// `constructed_by_prop4` states whether the party orders came from the
/// symmetric or common-shape constructors; only prop4 reads it.
TrialResult check_conjecture(Conjecture c, const Instance& inst, bool apply_precondition,
                             bool constructed_by_prop4);

struct CampaignReport {
  Conjecture conjecture = Conjecture::kThm1;
  GenConfig config;
  std::uint64_t trials = 0;
  bool precondition_applied = true;
  bool builtin_example_injected = false;
  std::uint64_t precondition_count = 0;
  std::uint64_t equilibria = 0;
  std::uint64_t reversed_order_equilibria = 0;
  std::uint64_t mutual_leapfrog_equilibria = 0;
  std::uint64_t violation_count = 0;
  /// First max_witnesses violations in trial order.
  std::vector<Violation> violations;
  double wall_seconds = 0.0;
};

/// Trial-parallel campaign (OpenMP).
CampaignReport falsify(Conjecture c, const GenConfig& cfg, std::uint64_t trials,
                       const CampaignOptions& opts = {});

/// Single-threaded reference with identical semantics.
CampaignReport falsify_serial(Conjecture c, const GenConfig& cfg, std::uint64_t trials,
                              const CampaignOptions& opts = {});

}  // namespace leapfrog
