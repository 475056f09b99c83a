#include "leapfrog/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "leapfrog/election.hpp"
#include "leapfrog/equilibrium.hpp"
#include "leapfrog/io.hpp"

namespace leapfrog {

void validate_config(const GenConfig& cfg) {
  if (cfg.m_range.lo > cfg.m_range.hi) throw std::invalid_argument("empty policy-count range");
  if (cfg.n_range.lo > cfg.n_range.hi) throw std::invalid_argument("empty voter-count range");
  if (cfg.m_range.lo < 2) throw std::invalid_argument("policy count must be at least 2");
  if (cfg.m_range.hi > kMaxPolicies) throw std::invalid_argument("policy count too large");
  if (cfg.n_range.lo < 0) throw std::invalid_argument("voter count must be non-negative");
  if (cfg.n_range.hi > 100000) throw std::invalid_argument("voter count too large");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

int uniform_int(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Tiers random_single_peaked_tiers(Rng& rng, int m, PolicyIndex ideal, bool allow_ties) {
  Tiers tiers{{ideal}};
  PolicyIndex left = ideal - 1;
  PolicyIndex right = ideal + 1;
  while (left >= 1 || right <= m) {
    const int n_left = left;
    const int n_right = m - right + 1;
    if (n_left > 0 && n_right > 0 && allow_ties && uniform_int(rng, 0, 3) == 0) {
      tiers.push_back({left--, right++});
    } else if (uniform_int(rng, 1, n_left + n_right) <= n_left) {
      tiers.push_back({left--});
    } else {
      tiers.push_back({right++});
    }
  }
  return tiers;
}

UtilityShape random_shape(Rng& rng, int m) {
  UtilityShape shape{{0, 100.0 * m}};
  double right = shape[0];
  double left = shape[0];
  for (int k = 1; k < m; ++k) {
    right -= uniform_int(rng, 1, 3);
    left -= uniform_int(rng, 1, 3);
    shape[k] = right;
    shape[-k] = left;
  }
  return shape;
}

RawInstance gen_raw_instance(const GenConfig& cfg, std::uint64_t trial) {
  validate_config(cfg);
  Rng rng(trial_seed(cfg.seed, trial));
  const int m = uniform_int(rng, cfg.m_range.lo, cfg.m_range.hi);
  const int n = uniform_int(rng, cfg.n_range.lo, cfg.n_range.hi);

  RawInstance raw;
  raw.policies = m;
  PolicyIndex p = uniform_int(rng, 1, m);
  PolicyIndex q = uniform_int(rng, 1, m - 1);
  if (q >= p) ++q;
  if (q < p) std::swap(p, q);
  raw.party_a.ideal = p;
  raw.party_b.ideal = q;

  switch (cfg.party_mode) {
    case PartyMode::kFreeSinglePeaked:
      raw.party_a.ranking = random_single_peaked_tiers(rng, m, p, true);
      raw.party_b.ranking = random_single_peaked_tiers(rng, m, q, true);
      break;
    case PartyMode::kSymmetric:
      raw.party_a.ranking = from_symmetric_utility(m, p).tiers();
      raw.party_b.ranking = from_symmetric_utility(m, q).tiers();
      break;
    case PartyMode::kCommonShape: {
      const UtilityShape shape = random_shape(rng, m);
      raw.party_a.ranking = from_common_shape(m, p, shape).tiers();
      raw.party_b.ranking = from_common_shape(m, q, shape).tiers();
      break;
    }
  }

  for (int k = 0; k < n; ++k) {
    RawVoter v;
    v.ideal = uniform_int(rng, 1, m);
    v.ranking = random_single_peaked_tiers(rng, m, v.ideal, false);
    if (cfg.attraction_mode == AttractionMode::kFull) {
      v.lo = 1;
      v.hi = m;
    } else {
      v.lo = uniform_int(rng, 1, v.ideal);
      v.hi = uniform_int(rng, v.ideal, m);
    }
    raw.voters.push_back(std::move(v));
  }
  return raw;
}

Instance gen_instance(const GenConfig& cfg, std::uint64_t trial) {
  return validate_instance(gen_raw_instance(cfg, trial));
}

bool has_fixed_participation(const Instance& inst) {
  const int m = inst.num_policies();
  const auto voters = inst.voters();
  // Participation is fixed iff each voter is either active at every s != t or
  // at none of them.
  for (const VoterSpec& v : voters) {
    bool seen_active = false;
    bool seen_inactive = false;
    for (PolicyIndex s = 1; s <= m; ++s) {
      for (PolicyIndex t = 1; t <= m; ++t) {
        if (s == t) continue;
        if (v.accepts(s) || v.accepts(t)) {
          seen_active = true;
        } else {
          seen_inactive = true;
        }
        if (seen_active && seen_inactive) return false;
      }
    }
  }
  return true;
}

AxiomReport check_axioms(const Instance& inst) {
  AxiomReport report;
  const PartySpec& a = inst.party(Party::A);
  const PartySpec& b = inst.party(Party::B);
  report.party_a_single_peaked = is_single_peaked(a.order, a.ideal, false).ok;
  report.party_b_single_peaked = is_single_peaked(b.order, b.ideal, false).ok;
  for (const VoterSpec& v : inst.voters()) {
    report.voters_single_peaked.push_back(is_single_peaked(v.order, v.ideal, true).ok);
  }
  report.cross_side = check_cross_side_agreement(inst);
  report.fixed_participation = has_fixed_participation(inst);
  return report;
}

const char* to_string(Conjecture c) {
  switch (c) {
    case Conjecture::kProp1: return "prop1";
    case Conjecture::kProp2: return "prop2";
    case Conjecture::kThm1: return "thm1";
    case Conjecture::kProp4ImpliesAx2: return "prop4";
  }
  return "unknown";
}

std::optional<Conjecture> parse_conjecture(const std::string& name) {
  if (name == "prop1") return Conjecture::kProp1;
  if (name == "prop2") return Conjecture::kProp2;
  if (name == "thm1") return Conjecture::kThm1;
  if (name == "prop4" || name == "prop4_implies_ax2") return Conjecture::kProp4ImpliesAx2;
  return std::nullopt;
}

namespace {

std::string profile_text(Profile p) {
  std::ostringstream os;
  os << "(x" << p.s << ",x" << p.t << ")";
  return os.str();
}

}  // namespace

TrialResult check_conjecture(Conjecture c, const Instance& inst, bool apply_precondition,
                             bool constructed_by_prop4) {
  TrialResult r;
  switch (c) {
    case Conjecture::kProp1: r.precondition = true; break;
    case Conjecture::kProp2: r.precondition = has_fixed_participation(inst); break;
    case Conjecture::kThm1: r.precondition = check_cross_side_agreement(inst).holds; break;
    case Conjecture::kProp4ImpliesAx2: r.precondition = constructed_by_prop4; break;
  }
  if (apply_precondition && !r.precondition) return r;

  if (c == Conjecture::kProp4ImpliesAx2) {
    const CrossSideCheck check = check_cross_side_agreement(inst);
    if (!check.holds) {
      r.violated = true;
      std::ostringstream os;
      os << "cross-side agreement fails at (a,b)=(" << check.witness->a << ","
         << check.witness->b << ")";
      r.detail = os.str();
    }
    return r;
  }

  for (const EquilibriumRecord& rec : enumerate_equilibria(inst)) {
    ++r.equilibria;
    if (rec.reversed_order) ++r.reversed_order;
    if (rec.mutual_leapfrog) ++r.mutual_leapfrog;
    if (r.violated) continue;
    if (c == Conjecture::kProp1) {
      if (rec.reversed_order && !(rec.tied && rec.mutual_leapfrog)) {
        r.violated = true;
        r.profile = rec.profile;
        r.detail = "reversed-order equilibrium " + profile_text(rec.profile) +
                   (rec.tied ? " is not mutually leapfrogged" : " is not tied");
      }
    } else if (rec.mutual_leapfrog) {
      r.violated = true;
      r.profile = rec.profile;
      r.detail = "mutual-leapfrog equilibrium " + profile_text(rec.profile);
    }
  }
  return r;
}

namespace {

struct TrialSlot {
  TrialResult result;
  RawInstance instance;  // kept only for violations
  bool constructed_by_prop4 = false;
};

TrialSlot run_trial(Conjecture c, const GenConfig& cfg, std::uint64_t trial,
                    const CampaignOptions& opts) {
  TrialSlot slot;
  const bool injected = opts.inject_builtin_example && trial == 0;
  RawInstance raw = injected ? to_raw(builtin_example()) : gen_raw_instance(cfg, trial);
  slot.constructed_by_prop4 = !injected && cfg.party_mode != PartyMode::kFreeSinglePeaked;
  const Instance inst = validate_instance(raw);
  slot.result = check_conjecture(c, inst, opts.apply_precondition, slot.constructed_by_prop4);
  if (slot.result.violated) slot.instance = std::move(raw);
  return slot;
}

void accumulate(CampaignReport& report, std::uint64_t trial, TrialSlot&& slot,
                std::size_t max_witnesses) {
  const TrialResult& r = slot.result;
  if (r.precondition) ++report.precondition_count;
  report.equilibria += r.equilibria;
  report.reversed_order_equilibria += r.reversed_order;
  report.mutual_leapfrog_equilibria += r.mutual_leapfrog;
  if (!r.violated) return;
  ++report.violation_count;
  if (report.violations.size() < max_witnesses) {
    report.violations.push_back(
        Violation{trial, std::move(slot.instance), r.profile, r.detail, slot.constructed_by_prop4});
  }
}

CampaignReport empty_report(Conjecture c, const GenConfig& cfg, std::uint64_t trials,
                            const CampaignOptions& opts) {
  validate_config(cfg);
  CampaignReport report;
  report.conjecture = c;
  report.config = cfg;
  report.trials = trials;
  report.precondition_applied = opts.apply_precondition;
  report.builtin_example_injected = opts.inject_builtin_example;
  return report;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Trials are processed in blocks so memory stays bounded for long campaigns.
constexpr std::uint64_t kBlock = 1 << 14;

}  // namespace

CampaignReport falsify(Conjecture c, const GenConfig& cfg, std::uint64_t trials,
                       const CampaignOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report = empty_report(c, cfg, trials, opts);
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

  std::vector<TrialSlot> slots;
  for (std::uint64_t base = 0; base < trials; base += kBlock) {
    const std::int64_t count = static_cast<std::int64_t>(std::min(kBlock, trials - base));
    slots.assign(static_cast<std::size_t>(count), TrialSlot{});
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (std::int64_t k = 0; k < count; ++k) {
      slots[k] = run_trial(c, cfg, base + static_cast<std::uint64_t>(k), opts);
    }
    for (std::int64_t k = 0; k < count; ++k) {
      accumulate(report, base + static_cast<std::uint64_t>(k), std::move(slots[k]),
                 opts.max_witnesses);
    }
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

CampaignReport falsify_serial(Conjecture c, const GenConfig& cfg, std::uint64_t trials,
                              const CampaignOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report = empty_report(c, cfg, trials, opts);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    accumulate(report, trial, run_trial(c, cfg, trial, opts), opts.max_witnesses);
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

}  // namespace leapfrog
