#include "leapfrog/model.hpp"

#include <algorithm>
#include <sstream>

namespace leapfrog {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooFewPolicies: return "too-few-policies";
    case ErrorCode::kTooManyPolicies: return "too-many-policies";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kNotPartition: return "not-a-partition";
    case ErrorCode::kPeakNotUnique: return "peak-not-unique";
    case ErrorCode::kNotSinglePeaked: return "not-single-peaked";
    case ErrorCode::kNotStrict: return "voter-order-not-strict";
    case ErrorCode::kAttractionNotInterval: return "attraction-not-interval";
    case ErrorCode::kPartyOrder: return "party-order";
    case ErrorCode::kBadShape: return "bad-shape";
  }
  return "unknown";
}

WeakOrder WeakOrder::from_tiers(int m, Tiers tiers) {
  WeakOrder order;
  order.tier_of_.assign(static_cast<std::size_t>(m) + 1, -1);
  for (std::size_t k = 0; k < tiers.size(); ++k) {
    if (tiers[k].empty()) {
      throw ValidationError(ErrorCode::kNotPartition, "tier " + std::to_string(k + 1) + " is empty");
    }
    for (PolicyIndex j : tiers[k]) {
      if (j < 1 || j > m) {
        throw ValidationError(ErrorCode::kIndexOutOfRange,
                              "policy index " + std::to_string(j) + " outside [1," +
                                  std::to_string(m) + "]");
      }
      if (order.tier_of_[j] != -1) {
        throw ValidationError(ErrorCode::kNotPartition,
                              "policy " + std::to_string(j) + " appears in more than one place");
      }
      order.tier_of_[j] = static_cast<int>(k);
    }
  }
  for (PolicyIndex j = 1; j <= m; ++j) {
    if (order.tier_of_[j] == -1) {
      throw ValidationError(ErrorCode::kNotPartition,
                            "policy " + std::to_string(j) + " is not ranked");
    }
  }
  for (auto& tier : tiers) std::sort(tier.begin(), tier.end());
  order.tiers_ = std::move(tiers);
  return order;
}

SinglePeakCheck is_single_peaked(const WeakOrder& order, PolicyIndex peak, bool strict) {
  if (strict && !order.is_strict()) {
    for (const auto& tier : order.tiers()) {
      if (tier.size() > 1) return {false, IndexPair{tier[0], tier[1]}};
    }
  }
  // Adjacent steps outward from the peak suffice; the strict relation is
  // transitive along each side.
  for (PolicyIndex j = peak - 1; j >= 1; --j) {
    if (!order.prefers(j + 1, j)) return {false, IndexPair{j, j + 1}};
  }
  for (PolicyIndex j = peak + 1; j <= order.size(); ++j) {
    if (!order.prefers(j - 1, j)) return {false, IndexPair{j - 1, j}};
  }
  return {true, std::nullopt};
}

IndexPair attraction_bounds(std::span<const PolicyIndex> members) {
  if (members.empty()) {
    throw ValidationError(ErrorCode::kAttractionNotInterval, "attraction set is empty");
  }
  std::vector<PolicyIndex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] != sorted[k - 1] + 1) {
      throw ValidationError(ErrorCode::kAttractionNotInterval,
                            "attraction set skips x_" + std::to_string(sorted[k - 1] + 1),
                            IndexPair{sorted[k - 1], sorted[k]});
    }
  }
  return {sorted.front(), sorted.back()};
}

namespace {

void check_index(int m, PolicyIndex j, const std::string& who, const char* field) {
  if (j < 1 || j > m) {
    throw ValidationError(ErrorCode::kIndexOutOfRange,
                          who + ": " + field + " " + std::to_string(j) + " outside [1," +
                              std::to_string(m) + "]");
  }
}

WeakOrder checked_order(int m, const Tiers& ranking, PolicyIndex ideal, bool strict,
                        const std::string& who) {
  WeakOrder order;
  try {
    order = WeakOrder::from_tiers(m, ranking);
  } catch (const ValidationError& e) {
    throw ValidationError(e.code(), who + ": " + e.what(), e.witness());
  }
  if (strict && !order.is_strict()) {
    throw ValidationError(ErrorCode::kNotStrict, who + ": ranking has a tie");
  }
  const auto& top = order.tiers().front();
  if (top.size() != 1 || top[0] != ideal) {
    throw ValidationError(ErrorCode::kPeakNotUnique,
                          who + ": top tier is not exactly {x_" + std::to_string(ideal) + "}");
  }
  auto sp = is_single_peaked(order, ideal, strict);
  if (!sp.ok) {
    std::ostringstream msg;
    msg << who << ": not single-peaked at x_" << ideal << " (pair x_" << sp.witness->first
        << ", x_" << sp.witness->second << ")";
    throw ValidationError(ErrorCode::kNotSinglePeaked, msg.str(), sp.witness);
  }
  return order;
}

}  // namespace

Instance validate_instance(const RawInstance& raw) {
  const int m = raw.policies;
  if (m < 2) {
    throw ValidationError(ErrorCode::kTooFewPolicies,
                          "need at least 2 policies, got " + std::to_string(m));
  }
  if (m > kMaxPolicies) {
    throw ValidationError(ErrorCode::kTooManyPolicies,
                          "at most " + std::to_string(kMaxPolicies) + " policies supported");
  }
  check_index(m, raw.party_a.ideal, "party A", "ideal");
  check_index(m, raw.party_b.ideal, "party B", "ideal");
  if (raw.party_a.ideal >= raw.party_b.ideal) {
    throw ValidationError(ErrorCode::kPartyOrder,
                          "party A's ideal must lie strictly left of party B's",
                          IndexPair{raw.party_a.ideal, raw.party_b.ideal});
  }

  Instance inst;
  inst.space_ = PolicySpace{m};
  inst.party_a_ = {raw.party_a.ideal,
                   checked_order(m, raw.party_a.ranking, raw.party_a.ideal, false, "party A")};
  inst.party_b_ = {raw.party_b.ideal,
                   checked_order(m, raw.party_b.ranking, raw.party_b.ideal, false, "party B")};

  inst.voters_.reserve(raw.voters.size());
  for (std::size_t k = 0; k < raw.voters.size(); ++k) {
    const RawVoter& rv = raw.voters[k];
    const std::string who = "voter " + std::to_string(k + 1);
    check_index(m, rv.ideal, who, "ideal");
    check_index(m, rv.lo, who, "attraction lo");
    check_index(m, rv.hi, who, "attraction hi");
    if (rv.lo > rv.hi) {
      throw ValidationError(ErrorCode::kAttractionNotInterval,
                            who + ": attraction lo > hi", IndexPair{rv.lo, rv.hi});
    }
    if (rv.ideal < rv.lo || rv.ideal > rv.hi) {
      throw ValidationError(ErrorCode::kAttractionNotInterval,
                            who + ": attraction interval does not contain the ideal point",
                            IndexPair{rv.lo, rv.hi});
    }
    inst.voters_.push_back(
        VoterSpec{rv.ideal, checked_order(m, rv.ranking, rv.ideal, true, who), rv.lo, rv.hi});
  }
  return inst;
}

RawInstance to_raw(const Instance& inst) {
  RawInstance raw;
  raw.policies = inst.num_policies();
  raw.party_a = {inst.party(Party::A).ideal, inst.party(Party::A).order.tiers()};
  raw.party_b = {inst.party(Party::B).ideal, inst.party(Party::B).order.tiers()};
  for (const VoterSpec& v : inst.voters()) {
    raw.voters.push_back({v.ideal, v.order.tiers(), v.lo, v.hi});
  }
  return raw;
}

Instance mirror(const Instance& inst) {
  const int m = inst.num_policies();
  auto flip = [m](PolicyIndex j) { return m + 1 - j; };
  auto flip_tiers = [&](Tiers tiers) {
    for (auto& tier : tiers)
      for (auto& j : tier) j = flip(j);
    return tiers;
  };
  RawInstance raw = to_raw(inst);
  RawInstance out;
  out.policies = m;
  out.party_a = {flip(raw.party_b.ideal), flip_tiers(raw.party_b.ranking)};
  out.party_b = {flip(raw.party_a.ideal), flip_tiers(raw.party_a.ranking)};
  for (const RawVoter& v : raw.voters) {
    out.voters.push_back({flip(v.ideal), flip_tiers(v.ranking), flip(v.hi), flip(v.lo)});
  }
  return validate_instance(out);
}

bool operator==(const Instance& l, const Instance& r) { return to_raw(l) == to_raw(r); }

}  // namespace leapfrog
