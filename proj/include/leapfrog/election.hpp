#pragma once

#include <vector>

#include "leapfrog/model.hpp"

namespace leapfrog {

/// Vote counts at one profile. Voter indices are 0-based positions in
/// Instance::voters().
struct Tally {
  int n_a = 0;
  int n_b = 0;
  std::vector<int> active;
  std::vector<int> abstaining_active;
};

/// Voters with s or t inside their attraction interval.
std::vector<int> active_voters(const Instance& inst, Profile p);

Tally tally(const Instance& inst, Profile p);

/// g(s, t): strict majority among active voters, T on equal counts.
Outcome outcome(const Instance& inst, Profile p);

struct DeviationTable {
  /// g(x_j, t) for j = 1..m, stored at [j - 1].
  std::vector<Outcome> party_a_row;
  /// g(s, x_j) for j = 1..m.
  std::vector<Outcome> party_b_row;
};

DeviationTable deviation_table(const Instance& inst, Profile p);

char outcome_letter(Outcome o);

}  // namespace leapfrog
