#include "doctest.h"
#include "leapfrog/equilibrium.hpp"
#include "leapfrog/io.hpp"
#include "leapfrog/preferences.hpp"
#include "leapfrog/search.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace leapfrog;

TEST_CASE("generation is deterministic in (seed, trial)") {
  GenConfig cfg;
  cfg.seed = 77;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    CHECK(gen_raw_instance(cfg, trial) == gen_raw_instance(cfg, trial));
  }
  CHECK_FALSE(gen_raw_instance(cfg, 0) == gen_raw_instance(cfg, 1));
  GenConfig other = cfg;
  other.seed = 78;
  CHECK_FALSE(gen_raw_instance(cfg, 0) == gen_raw_instance(other, 0));
}

TEST_CASE("generated instances respect the configuration") {
  for (PartyMode mode :
       {PartyMode::kFreeSinglePeaked, PartyMode::kSymmetric, PartyMode::kCommonShape}) {
    GenConfig cfg;
    cfg.party_mode = mode;
    cfg.seed = 3;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
      const RawInstance raw = gen_raw_instance(cfg, trial);
      REQUIRE(raw.policies >= 5);
      REQUIRE(raw.policies <= 9);
      REQUIRE(raw.voters.size() >= 2);
      REQUIRE(raw.voters.size() <= 6);
      const Instance inst = validate_instance(raw);
      for (Party party : {Party::A, Party::B}) {
        const auto& spec = inst.party(party);
        REQUIRE(is_single_peaked(spec.order, spec.ideal, false).ok);
      }
      for (const auto& v : inst.voters()) REQUIRE(is_single_peaked(v.order, v.ideal, true).ok);
      if (mode != PartyMode::kFreeSinglePeaked) {
        REQUIRE(check_cross_side_agreement(inst).holds);
      }
    }
  }
}

TEST_CASE("free mode produces cross-side ties and disagreements") {
  GenConfig cfg;
  cfg.seed = 4;
  int ties = 0, disagreements = 0;
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    const Instance inst = gen_instance(cfg, trial);
    if (!inst.party(Party::A).order.is_strict()) ++ties;
    if (!check_cross_side_agreement(inst).holds) ++disagreements;
  }
  CHECK(ties > 0);
  CHECK(disagreements > 0);
}

TEST_CASE("config validation") {
  GenConfig cfg;
  cfg.m_range = {1, 4};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg.m_range = {6, 5};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg.m_range = {5, 9};
  cfg.n_range = {-1, 2};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
}

TEST_CASE("fixed participation") {
  CHECK_FALSE(has_fixed_participation(testing_support::example()));
  CHECK(has_fixed_participation(validate_instance(testing_support::widened_example_raw())));

  GenConfig cfg = testing_support::small_config(41);
  int fixed = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    cfg.attraction_mode = trial % 2 ? AttractionMode::kFull : AttractionMode::kRandomInterval;
    const RawInstance raw = gen_raw_instance(cfg, trial);
    const bool got = has_fixed_participation(validate_instance(raw));
    REQUIRE(got == oracle::fixed_participation(raw));
    if (cfg.attraction_mode == AttractionMode::kFull) REQUIRE(got);
    fixed += got;
  }
  CHECK(fixed > 500);
}

TEST_CASE("axiom report on the built-in example") {
  const AxiomReport report = check_axioms(testing_support::example());
  CHECK(report.party_a_single_peaked);
  CHECK(report.party_b_single_peaked);
  CHECK(report.voters_single_peaked == std::vector<bool>{true, true, true, true});
  CHECK_FALSE(report.cross_side.holds);
  CHECK(report.cross_side.witness == CrossSideWitness{1, 1, Biconditional::kRightOverLeft});
  CHECK_FALSE(report.fixed_participation);
}

TEST_CASE("conjecture names") {
  CHECK(parse_conjecture("prop1") == Conjecture::kProp1);
  CHECK(parse_conjecture("prop2") == Conjecture::kProp2);
  CHECK(parse_conjecture("thm1") == Conjecture::kThm1);
  CHECK(parse_conjecture("prop4") == Conjecture::kProp4ImpliesAx2);
  CHECK(parse_conjecture("prop4_implies_ax2") == Conjecture::kProp4ImpliesAx2);
  CHECK_FALSE(parse_conjecture("thm2").has_value());
  for (Conjecture c : {Conjecture::kProp1, Conjecture::kProp2, Conjecture::kThm1,
                       Conjecture::kProp4ImpliesAx2}) {
    CHECK(parse_conjecture(to_string(c)) == c);
  }
}

TEST_CASE("check_conjecture on the built-in example") {
  const Instance inst = testing_support::example();
  const TrialResult filtered = check_conjecture(Conjecture::kThm1, inst, true, false);
  CHECK_FALSE(filtered.precondition);
  CHECK_FALSE(filtered.violated);
  CHECK(filtered.equilibria == 0);

  const TrialResult unfiltered = check_conjecture(Conjecture::kThm1, inst, false, false);
  CHECK(unfiltered.violated);
  CHECK(unfiltered.mutual_leapfrog == 1);
  CHECK(unfiltered.profile == Profile{6, 2});

  const TrialResult prop1 = check_conjecture(Conjecture::kProp1, inst, true, false);
  CHECK(prop1.precondition);
  CHECK_FALSE(prop1.violated);
  CHECK(prop1.reversed_order == 1);

  // Fixed participation fails here, so the leapfrog does not count against prop2.
  CHECK_FALSE(check_conjecture(Conjecture::kProp2, inst, true, false).precondition);
}

TEST_CASE("serial and parallel campaigns give identical reports") {
  GenConfig cfg;
  cfg.seed = 123;
  for (Conjecture c : {Conjecture::kProp1, Conjecture::kThm1}) {
    CampaignOptions opts;
    opts.apply_precondition = false;
    opts.inject_builtin_example = true;
    const std::string serial =
        render_campaign(falsify_serial(c, cfg, 3000, opts), Format::kMachine);
    for (int threads : {1, 2, 3, 8}) {
      opts.threads = threads;
      REQUIRE(render_campaign(falsify(c, cfg, 3000, opts), Format::kMachine) == serial);
    }
  }
}

TEST_CASE("campaigns spanning several blocks are reproducible") {
  GenConfig cfg;
  cfg.seed = 5;
  CampaignOptions opts;
  opts.threads = 4;
  const auto a = falsify(Conjecture::kThm1, cfg, 40000, opts);
  opts.threads = 1;
  const auto b = falsify(Conjecture::kThm1, cfg, 40000, opts);
  CHECK(render_campaign(a, Format::kMachine) == render_campaign(b, Format::kMachine));
  CHECK(a.violation_count == 0);
  CHECK(a.precondition_count > 0);
}

TEST_CASE("injected built-in example is caught without the axiom filter and replays") {
  GenConfig cfg;
  cfg.seed = 9;
  CampaignOptions opts;
  opts.apply_precondition = false;
  opts.inject_builtin_example = true;
  const CampaignReport report = falsify(Conjecture::kThm1, cfg, 2000, opts);
  REQUIRE(report.violation_count >= 1);
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations[0].trial == 0);
  CHECK(report.violations[0].profile == Profile{6, 2});
  CHECK(report.violations[0].instance == testing_support::example_raw());

  for (const Violation& v : report.violations) {
    const Instance replay = validate_instance(v.instance);
    const TrialResult r = check_conjecture(Conjecture::kThm1, replay, false, v.constructed_by_prop4);
    REQUIRE(r.violated);
    REQUIRE(r.profile == v.profile);
    REQUIRE_FALSE(check_cross_side_agreement(replay).holds);
  }
}

TEST_CASE("witness list is capped but the count is not") {
  GenConfig cfg;
  cfg.seed = 9;
  CampaignOptions opts;
  opts.apply_precondition = false;
  opts.inject_builtin_example = true;
  opts.max_witnesses = 0;
  const CampaignReport report = falsify(Conjecture::kThm1, cfg, 100, opts);
  CHECK(report.violation_count >= 1);
  CHECK(report.violations.empty());
}

TEST_CASE("precondition soundness") {
  GenConfig cfg;
  cfg.seed = 10;
  std::uint64_t counted = 0;
  for (std::uint64_t trial = 0; trial < 3000; ++trial) {
    const Instance inst = gen_instance(cfg, trial);
    const TrialResult r = check_conjecture(Conjecture::kThm1, inst, true, false);
    if (r.precondition) {
      ++counted;
      REQUIRE(check_cross_side_agreement(inst).holds);
    }
  }
  const CampaignReport report = falsify(Conjecture::kThm1, cfg, 3000);
  CHECK(report.precondition_count == counted);
}

TEST_CASE("prop4 precondition depends on the party mode") {
  GenConfig cfg;
  cfg.party_mode = PartyMode::kFreeSinglePeaked;
  const auto vacuous = falsify(Conjecture::kProp4ImpliesAx2, cfg, 200);
  CHECK(vacuous.precondition_count == 0);
  cfg.party_mode = PartyMode::kCommonShape;
  const auto real = falsify(Conjecture::kProp4ImpliesAx2, cfg, 200);
  CHECK(real.precondition_count == 200);
  CHECK(real.violation_count == 0);
}
