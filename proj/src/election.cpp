#include "leapfrog/election.hpp"

namespace leapfrog {

namespace {

bool is_active(const VoterSpec& v, Profile p) { return v.accepts(p.s) || v.accepts(p.t); }

Outcome decide(int n_a, int n_b) {
  if (n_a > n_b) return Outcome::A;
  if (n_b > n_a) return Outcome::B;
  return Outcome::Tie;
}

}  // namespace

std::vector<int> active_voters(const Instance& inst, Profile p) {
  std::vector<int> out;
  const auto voters = inst.voters();
  for (int k = 0; k < static_cast<int>(voters.size()); ++k) {
    if (is_active(voters[k], p)) out.push_back(k);
  }
  return out;
}

Tally tally(const Instance& inst, Profile p) {
  Tally result;
  result.active = active_voters(inst, p);
  const auto voters = inst.voters();
  for (int k : result.active) {
    const WeakOrder& order = voters[k].order;
    if (order.prefers(p.s, p.t)) {
      ++result.n_a;
    } else if (order.prefers(p.t, p.s)) {
      ++result.n_b;
    } else {
      result.abstaining_active.push_back(k);
    }
  }
  return result;
}

Outcome outcome(const Instance& inst, Profile p) {
  if (p.s == p.t) return Outcome::Tie;
  int n_a = 0;
  int n_b = 0;
  for (const VoterSpec& v : inst.voters()) {
    if (!is_active(v, p)) continue;
    if (v.order.prefers(p.s, p.t)) {
      ++n_a;
    } else if (v.order.prefers(p.t, p.s)) {
      ++n_b;
    }
  }
  return decide(n_a, n_b);
}

DeviationTable deviation_table(const Instance& inst, Profile p) {
  const int m = inst.num_policies();
  DeviationTable table;
  table.party_a_row.reserve(m);
  table.party_b_row.reserve(m);
  for (PolicyIndex j = 1; j <= m; ++j) {
    table.party_a_row.push_back(outcome(inst, {j, p.t}));
    table.party_b_row.push_back(outcome(inst, {p.s, j}));
  }
  return table;
}

char outcome_letter(Outcome o) {
  switch (o) {
    case Outcome::A: return 'A';
    case Outcome::B: return 'B';
    case Outcome::Tie: return 'T';
  }
  return '?';
}

}  // namespace leapfrog
