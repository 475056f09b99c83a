#pragma once

#include <optional>
#include <vector>

#include "leapfrog/model.hpp"

namespace leapfrog {

struct EquilibriumRecord {
  Profile profile;
  Outcome outcome = Outcome::Tie;
  bool reversed_order = false;   // t < s
  bool mutual_leapfrog = false;  // t < ideal_A and ideal_B < s
  bool tied = false;
};

/// Platforms in the top class of `party`'s lexicographic objective against
/// the fixed opponent platform. Ascending; never empty.
std::vector<PolicyIndex> best_responses(const Instance& inst, Party party,
                                        PolicyIndex opponent_platform);

struct Deviation {
  Party party = Party::A;
  PolicyIndex platform = 0;
};

struct NashCheck {
  bool nash = true;
  /// Smallest strictly improving platform, party A examined first.
  std::optional<Deviation> deviation;
};

NashCheck is_nash(const Instance& inst, Profile p);

/// Flags for any profile; does not check the Nash property.
EquilibriumRecord classify(const Instance& inst, Profile p);

/// Row-major m x m table of g(s, t); entry (s, t) at (s-1)*m + (t-1).
struct OutcomeGrid {
  int m = 0;
  std::vector<Outcome> cells;

  Outcome at(Profile p) const { return cells[(p.s - 1) * m + (p.t - 1)]; }
};

OutcomeGrid compute_outcome_grid(const Instance& inst);

/// All Nash profiles in lexicographic (s, t) order. Evaluates g once per
/// profile and reads best responses off the grid.
std::vector<EquilibriumRecord> enumerate_equilibria(const Instance& inst);

/// Serial brute force: is_nash at each of the m^2 profiles. Kept as the
/// reference for enumerate_equilibria.
std::vector<EquilibriumRecord> enumerate_equilibria_reference(const Instance& inst);

}  // namespace leapfrog
