#include "leapfrog/preferences.hpp"

#include <algorithm>

namespace leapfrog {

std::optional<PolicyIndex> displace(const Instance& inst, Party party, Displacement d) {
  const PolicyIndex ideal = inst.party(party).ideal;
  const PolicyIndex j = d.side == Side::Right ? ideal + d.steps : ideal - d.steps;
  if (!inst.space().contains(j)) return std::nullopt;
  return j;
}

CrossSideCheck check_cross_side_agreement(const Instance& inst) {
  const int m = inst.num_policies();
  const PartySpec& pa = inst.party(Party::A);
  const PartySpec& pb = inst.party(Party::B);
  // A sits left of B, so A bounds the leftward steps and B the rightward ones.
  const int max_right = m - pb.ideal;
  const int max_left = pa.ideal - 1;
  for (int a = 1; a <= max_right; ++a) {
    for (int b = 1; b <= max_left; ++b) {
      const PolicyIndex ra = pa.ideal + a, la = pa.ideal - b;
      const PolicyIndex rb = pb.ideal + a, lb = pb.ideal - b;
      if (pa.order.weakly_prefers(ra, la) != pb.order.weakly_prefers(rb, lb)) {
        return {false, CrossSideWitness{a, b, Biconditional::kRightOverLeft}};
      }
      if (pa.order.weakly_prefers(la, ra) != pb.order.weakly_prefers(lb, rb)) {
        return {false, CrossSideWitness{a, b, Biconditional::kLeftOverRight}};
      }
    }
  }
  return {true, std::nullopt};
}

WeakOrder from_symmetric_utility(int m, PolicyIndex ideal) {
  if (m < 1 || m > kMaxPolicies || ideal < 1 || ideal > m) {
    throw ValidationError(ErrorCode::kIndexOutOfRange, "ideal outside [1, m]");
  }
  Tiers tiers;
  for (int dist = 0; dist < m; ++dist) {
    std::vector<PolicyIndex> tier;
    if (ideal - dist >= 1 && dist > 0) tier.push_back(ideal - dist);
    if (ideal + dist <= m) tier.push_back(ideal + dist);
    if (!tier.empty()) tiers.push_back(std::move(tier));
  }
  return WeakOrder::from_tiers(m, std::move(tiers));
}

WeakOrder from_common_shape(int m, PolicyIndex ideal, const UtilityShape& shape) {
  if (m < 1 || m > kMaxPolicies || ideal < 1 || ideal > m) {
    throw ValidationError(ErrorCode::kIndexOutOfRange, "ideal outside [1, m]");
  }
  std::vector<std::pair<double, PolicyIndex>> scored;
  for (PolicyIndex j = 1; j <= m; ++j) {
    auto it = shape.find(j - ideal);
    if (it == shape.end()) {
      throw ValidationError(ErrorCode::kBadShape,
                            "shape has no score for displacement " + std::to_string(j - ideal));
    }
    scored.emplace_back(it->second, j);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  Tiers tiers;
  for (std::size_t k = 0; k < scored.size(); ++k) {
    if (k == 0 || scored[k].first != scored[k - 1].first) tiers.emplace_back();
    tiers.back().push_back(scored[k].second);
  }
  WeakOrder order = WeakOrder::from_tiers(m, std::move(tiers));
  const auto& top = order.tiers().front();
  if (top.size() != 1 || top[0] != ideal) {
    throw ValidationError(ErrorCode::kPeakNotUnique, "shape(0) is not the unique maximum");
  }
  auto sp = is_single_peaked(order, ideal, false);
  if (!sp.ok) {
    throw ValidationError(ErrorCode::kNotSinglePeaked,
                          "shape is not strictly decreasing away from 0 on each side",
                          sp.witness);
  }
  return order;
}

int outcome_class(Party party, Outcome o) {
  if (o == Outcome::Tie) return 1;
  const bool won = (o == Outcome::A) == (party == Party::A);
  return won ? 2 : 0;
}

Comparison compare_for_party(const Instance& inst, Party party, Profile p1, Outcome o1,
                             Profile p2, Outcome o2) {
  const int c1 = outcome_class(party, o1);
  const int c2 = outcome_class(party, o2);
  if (c1 != c2) return c1 > c2 ? Comparison::Better : Comparison::Worse;
  const WeakOrder& order = inst.party(party).order;
  const PolicyIndex x1 = own_platform(party, p1);
  const PolicyIndex x2 = own_platform(party, p2);
  if (order.prefers(x1, x2)) return Comparison::Better;
  if (order.prefers(x2, x1)) return Comparison::Worse;
  return Comparison::Equal;
}

}  // namespace leapfrog
