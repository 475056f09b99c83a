#include "leapfrog/equilibrium.hpp"

#include <algorithm>

#include "leapfrog/election.hpp"
#include "leapfrog/preferences.hpp"

namespace leapfrog {

namespace {

Profile with_own(Party party, PolicyIndex own, PolicyIndex other) {
  return party == Party::A ? Profile{own, other} : Profile{other, own};
}

// Larger is better: outcome class dominates, then ideological tier.
int objective_key(const Instance& inst, Party party, PolicyIndex own, Outcome o) {
  const int m = inst.num_policies();
  return outcome_class(party, o) * (m + 1) + (m - inst.party(party).order.tier_of(own));
}

// Cells below this many voter evaluations are not worth a thread team.
constexpr long kParallelGridWork = 1L << 16;

}  // namespace

std::vector<PolicyIndex> best_responses(const Instance& inst, Party party,
                                        PolicyIndex opponent_platform) {
  const int m = inst.num_policies();
  std::vector<PolicyIndex> best;
  Profile best_profile{};
  Outcome best_outcome = Outcome::Tie;
  for (PolicyIndex j = 1; j <= m; ++j) {
    const Profile p = with_own(party, j, opponent_platform);
    const Outcome o = outcome(inst, p);
    if (best.empty()) {
      best = {j};
      best_profile = p;
      best_outcome = o;
      continue;
    }
    switch (compare_for_party(inst, party, p, o, best_profile, best_outcome)) {
      case Comparison::Better:
        best = {j};
        best_profile = p;
        best_outcome = o;
        break;
      case Comparison::Equal:
        best.push_back(j);
        break;
      case Comparison::Worse:
        break;
    }
  }
  return best;
}

NashCheck is_nash(const Instance& inst, Profile p) {
  const int m = inst.num_policies();
  const Outcome current = outcome(inst, p);
  for (Party party : {Party::A, Party::B}) {
    const PolicyIndex other = party == Party::A ? p.t : p.s;
    for (PolicyIndex j = 1; j <= m; ++j) {
      const Profile q = with_own(party, j, other);
      if (compare_for_party(inst, party, q, outcome(inst, q), p, current) == Comparison::Better) {
        return {false, Deviation{party, j}};
      }
    }
  }
  return {true, std::nullopt};
}

EquilibriumRecord classify(const Instance& inst, Profile p) {
  EquilibriumRecord rec;
  rec.profile = p;
  rec.outcome = outcome(inst, p);
  rec.tied = rec.outcome == Outcome::Tie;
  rec.reversed_order = p.t < p.s;
  rec.mutual_leapfrog =
      p.t < inst.party(Party::A).ideal && inst.party(Party::B).ideal < p.s;
  return rec;
}

OutcomeGrid compute_outcome_grid(const Instance& inst) {
  const int m = inst.num_policies();
  OutcomeGrid grid{m, std::vector<Outcome>(static_cast<std::size_t>(m) * m, Outcome::Tie)};
  const long work = static_cast<long>(m) * m * (inst.num_voters() + 1);
#pragma omp parallel for schedule(static) if (work >= kParallelGridWork)
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= m; ++t) {
      grid.cells[(s - 1) * m + (t - 1)] = outcome(inst, {s, t});
    }
  }
  return grid;
}

std::vector<EquilibriumRecord> enumerate_equilibria(const Instance& inst) {
  const int m = inst.num_policies();
  const OutcomeGrid grid = compute_outcome_grid(inst);

  // best_key_a[t]: A's best objective against t; best_key_b[s] likewise.
  std::vector<int> best_key_a(m + 1, -1), best_key_b(m + 1, -1);
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= m; ++t) {
      const Outcome o = grid.at({s, t});
      best_key_a[t] = std::max(best_key_a[t], objective_key(inst, Party::A, s, o));
      best_key_b[s] = std::max(best_key_b[s], objective_key(inst, Party::B, t, o));
    }
  }

  std::vector<EquilibriumRecord> out;
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= m; ++t) {
      const Outcome o = grid.at({s, t});
      if (objective_key(inst, Party::A, s, o) == best_key_a[t] &&
          objective_key(inst, Party::B, t, o) == best_key_b[s]) {
        out.push_back(classify(inst, {s, t}));
      }
    }
  }
  return out;
}

std::vector<EquilibriumRecord> enumerate_equilibria_reference(const Instance& inst) {
  const int m = inst.num_policies();
  std::vector<EquilibriumRecord> out;
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= m; ++t) {
      if (is_nash(inst, {s, t}).nash) out.push_back(classify(inst, {s, t}));
    }
  }
  return out;
}

}  // namespace leapfrog
