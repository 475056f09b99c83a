#pragma once

// Ordinal displacements from a party's ideal point, the cross-side agreement
// check between the two parties, constructors for orders induced by
// symmetric or common-shape utilities, and the lexicographic party objective.

#include <map>
#include <optional>

#include "leapfrog/model.hpp"

namespace leapfrog {

enum class Side { Left, Right };

struct Displacement {
  Side side = Side::Right;
  int steps = 1;  // >= 1
};

/// R_i(k) or L_i(k); nullopt when the displaced policy leaves [1, m].
std::optional<PolicyIndex> displace(const Instance& inst, Party party, Displacement d);

enum class Biconditional {
  kRightOverLeft,  // R_A(a) >=_A L_A(b)  <=>  R_B(a) >=_B L_B(b)
  kLeftOverRight,  // L_A(b) >=_A R_A(a)  <=>  L_B(b) >=_B R_B(a)
};

struct CrossSideWitness {
  int a = 0;  // rightward steps
  int b = 0;  // leftward steps
  Biconditional failed = Biconditional::kRightOverLeft;

  friend bool operator==(const CrossSideWitness&, const CrossSideWitness&) = default;
};

struct CrossSideCheck {
  bool holds = true;
  std::optional<CrossSideWitness> witness;
};

/// Checks every (a, b) for which R_A(a), L_A(b), R_B(a), L_B(b) all exist.
/// The witness is the lexicographically smallest failing (a, b).
CrossSideCheck check_cross_side_agreement(const Instance& inst);

/// Tiers by |j - ideal|. Every strictly decreasing symmetric utility induces
/// this same order.
WeakOrder from_symmetric_utility(int m, PolicyIndex ideal);

/// Signed displacement (j - ideal) to score; higher is better.
using UtilityShape = std::map<int, double>;

/// Ranks j by shape(j - ideal), equal scores sharing a tier. Throws
/// ValidationError(kBadShape) if a needed displacement is missing, and the
/// usual peak/single-peakedness codes if the induced order violates them.
WeakOrder from_common_shape(int m, PolicyIndex ideal, const UtilityShape& shape);

enum class Comparison { Worse, Equal, Better };

/// Win > Tie > Lose from `party`'s side, then the party's own platform under
/// its order. Outcomes are the caller's g values for the two profiles.
Comparison compare_for_party(const Instance& inst, Party party, Profile p1, Outcome o1,
                             Profile p2, Outcome o2);

/// 2 = win, 1 = tie, 0 = lose.
int outcome_class(Party party, Outcome o);

inline PolicyIndex own_platform(Party party, Profile p) { return party == Party::A ? p.s : p.t; }

}  // namespace leapfrog
