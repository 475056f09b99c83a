#pragma once

// Domain types for the two-party ordinal spatial game: a finite policy line,
// party and voter preference orders, attraction intervals, and the validated
// Instance bundle every other module consumes.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leapfrog {

/// 1-based position on the policy line; x_j is addressed by j.
using PolicyIndex = int;

/// Ranked tiers of policy indices, best tier first.
using Tiers = std::vector<std::vector<PolicyIndex>>;

/// Upper bound on the number of policies accepted by validation.
inline constexpr int kMaxPolicies = 4096;

enum class Party { A, B };

enum class Outcome { A, B, Tie };

inline Party opponent(Party p) { return p == Party::A ? Party::B : Party::A; }

struct PolicySpace {
  int size = 0;

  bool contains(PolicyIndex j) const { return j >= 1 && j <= size; }
};

/// Platform profile: s is party A's platform, t is party B's.
struct Profile {
  PolicyIndex s = 0;
  PolicyIndex t = 0;

  friend bool operator==(const Profile&, const Profile&) = default;
};

using IndexPair = std::pair<PolicyIndex, PolicyIndex>;

enum class ErrorCode {
  kTooFewPolicies,
  kTooManyPolicies,
  kIndexOutOfRange,
  kNotPartition,
  kPeakNotUnique,
  kNotSinglePeaked,
  kNotStrict,
  kAttractionNotInterval,
  kPartyOrder,
  kBadShape,
};

const char* to_string(ErrorCode code);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrorCode code, const std::string& what,
                  std::optional<IndexPair> witness = std::nullopt)
      : std::runtime_error(what), code_(code), witness_(witness) {}

  ErrorCode code() const { return code_; }
  const std::optional<IndexPair>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::optional<IndexPair> witness_;
};

/// A complete preorder over {1..m} stored as a tier list. Earlier tiers are
/// strictly better; members of one tier are indifferent.
class WeakOrder {
 public:
  WeakOrder() = default;

  /// Throws ValidationError unless `tiers` partitions {1..m} into nonempty
  /// tiers.
  static WeakOrder from_tiers(int m, Tiers tiers);

  int size() const { return static_cast<int>(tier_of_.size()) - 1; }
  const Tiers& tiers() const { return tiers_; }
  int tier_of(PolicyIndex j) const { return tier_of_[j]; }

  bool prefers(PolicyIndex a, PolicyIndex b) const { return tier_of_[a] < tier_of_[b]; }
  bool weakly_prefers(PolicyIndex a, PolicyIndex b) const { return tier_of_[a] <= tier_of_[b]; }
  bool indifferent(PolicyIndex a, PolicyIndex b) const { return tier_of_[a] == tier_of_[b]; }

  /// True when every tier is a singleton.
  bool is_strict() const { return static_cast<int>(tiers_.size()) == size(); }

  friend bool operator==(const WeakOrder& l, const WeakOrder& r) { return l.tiers_ == r.tiers_; }

 private:
  Tiers tiers_;
  std::vector<int> tier_of_;  // indexed by policy, slot 0 unused
};

struct PartySpec {
  PolicyIndex ideal = 0;
  WeakOrder order;
};

struct VoterSpec {
  PolicyIndex ideal = 0;
  WeakOrder order;  // strict
  PolicyIndex lo = 0;
  PolicyIndex hi = 0;

  bool accepts(PolicyIndex j) const { return lo <= j && j <= hi; }
};

struct SinglePeakCheck {
  bool ok = true;
  /// A violating pair (lower index, higher index) when !ok.
  std::optional<IndexPair> witness;
};

/// Same-side monotonicity around `peak`: for a < b <= peak, b is strictly
/// better than a; for peak <= b < a, b is strictly better than a. With
/// `strict`, the order must additionally have no indifferences.
SinglePeakCheck is_single_peaked(const WeakOrder& order, PolicyIndex peak, bool strict);

// Unvalidated input, as produced by the parser or by generators.
struct RawActor {
  PolicyIndex ideal = 0;
  Tiers ranking;

  friend bool operator==(const RawActor&, const RawActor&) = default;
};

struct RawVoter {
  PolicyIndex ideal = 0;
  Tiers ranking;
  PolicyIndex lo = 0;
  PolicyIndex hi = 0;

  friend bool operator==(const RawVoter&, const RawVoter&) = default;
};

struct RawInstance {
  int policies = 0;
  RawActor party_a;
  RawActor party_b;
  std::vector<RawVoter> voters;

  friend bool operator==(const RawInstance&, const RawInstance&) = default;
};

/// The validated game. Only validate_instance constructs one, and nothing
/// mutates it afterwards.
class Instance {
 public:
  const PolicySpace& space() const { return space_; }
  int num_policies() const { return space_.size; }
  const PartySpec& party(Party p) const { return p == Party::A ? party_a_ : party_b_; }
  std::span<const VoterSpec> voters() const { return voters_; }
  int num_voters() const { return static_cast<int>(voters_.size()); }

  friend Instance validate_instance(const RawInstance& raw);

 private:
  Instance() = default;

  PolicySpace space_;
  PartySpec party_a_;
  PartySpec party_b_;
  std::vector<VoterSpec> voters_;
};

/// Converts an explicit member set of an attraction set into its [lo, hi]
/// bounds. Throws kAttractionNotInterval if the members have a gap.
IndexPair attraction_bounds(std::span<const PolicyIndex> members);

/// Throws ValidationError with a specific ErrorCode on the first violated
/// invariant.
Instance validate_instance(const RawInstance& raw);

RawInstance to_raw(const Instance& inst);

/// Reflects the line (j -> m+1-j) and swaps the party roles so that the new
/// party A is the reflected old party B.
Instance mirror(const Instance& inst);

bool operator==(const Instance& l, const Instance& r);

}  // namespace leapfrog
