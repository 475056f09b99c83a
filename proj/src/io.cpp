#include "leapfrog/io.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "leapfrog/preferences.hpp"

namespace leapfrog {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- parsing

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

void require_object(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) schema_error(path, "unknown key \"" + key + "\"");
  }
}

const json& require_key(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing key \"") + key + "\"");
  return *it;
}

int get_int(const json& j, const std::string& path) {
  constexpr auto lo = std::numeric_limits<int>::min();
  constexpr auto hi = std::numeric_limits<int>::max();
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(hi)) schema_error(path, "integer out of range");
    return static_cast<int>(v);
  }
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < lo || v > hi) schema_error(path, "integer out of range");
    return static_cast<int>(v);
  }
  schema_error(path, "expected an integer");
}

Tiers get_tiers(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected a list of tiers");
  Tiers tiers;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string tier_path = path + "/" + std::to_string(k);
    if (!j[k].is_array()) schema_error(tier_path, "expected a tier (list of indices)");
    std::vector<PolicyIndex> tier;
    for (std::size_t e = 0; e < j[k].size(); ++e) {
      tier.push_back(get_int(j[k][e], tier_path + "/" + std::to_string(e)));
    }
    tiers.push_back(std::move(tier));
  }
  return tiers;
}

UtilityShape get_shape(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object of displacement -> score");
  UtilityShape shape;
  for (const auto& [key, value] : j.items()) {
    int k = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    if (!key.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr != last || first == last) {
      schema_error(path, "shape key \"" + key + "\" is not a signed integer");
    }
    if (!value.is_number() || !std::isfinite(value.get<double>())) {
      schema_error(path + "/" + key, "expected a finite number");
    }
    if (!shape.emplace(k, value.get<double>()).second) {
      schema_error(path, "duplicate displacement " + key);
    }
  }
  return shape;
}

Tiers get_construct(const json& j, const std::string& path, int m, PolicyIndex ideal) {
  require_object(j, path, {"mode", "shape"});
  const json& mode = require_key(j, path, "mode");
  if (!mode.is_string()) schema_error(path + "/mode", "expected a string");
  if (m < 1 || m > kMaxPolicies) {
    throw ValidationError(ErrorCode::kTooManyPolicies, "policy count out of range for construct");
  }
  if (ideal < 1 || ideal > m) {
    throw ValidationError(ErrorCode::kIndexOutOfRange, path + ": ideal outside [1, m]");
  }
  const auto name = mode.get<std::string>();
  if (name == "symmetric") {
    if (j.contains("shape")) schema_error(path, "symmetric mode takes no shape");
    return from_symmetric_utility(m, ideal).tiers();
  }
  if (name == "common_shape") {
    const UtilityShape shape = get_shape(require_key(j, path, "shape"), path + "/shape");
    try {
      return from_common_shape(m, ideal, shape).tiers();
    } catch (const ValidationError& e) {
      throw ValidationError(e.code(), path + ": " + e.what(), e.witness());
    }
  }
  schema_error(path + "/mode", "unknown mode \"" + name + "\"");
}

Tiers get_ranking(const json& j, const std::string& path, int m, PolicyIndex ideal) {
  const bool has_ranking = j.contains("ranking");
  const bool has_construct = j.contains("construct");
  if (has_ranking == has_construct) {
    schema_error(path, "exactly one of \"ranking\" or \"construct\" is required");
  }
  if (has_ranking) return get_tiers(j.at("ranking"), path + "/ranking");
  return get_construct(j.at("construct"), path + "/construct", m, ideal);
}

RawActor get_party(const json& j, const std::string& path, int m) {
  require_object(j, path, {"ideal", "ranking", "construct"});
  RawActor actor;
  actor.ideal = get_int(require_key(j, path, "ideal"), path + "/ideal");
  actor.ranking = get_ranking(j, path, m, actor.ideal);
  return actor;
}

RawVoter get_voter(const json& j, const std::string& path, int m) {
  require_object(j, path, {"ideal", "ranking", "construct", "attraction"});
  RawVoter voter;
  voter.ideal = get_int(require_key(j, path, "ideal"), path + "/ideal");
  voter.ranking = get_ranking(j, path, m, voter.ideal);
  const json& att = require_key(j, path, "attraction");
  if (!att.is_array() || att.size() != 2) schema_error(path + "/attraction", "expected [lo, hi]");
  voter.lo = get_int(att[0], path + "/attraction/0");
  voter.hi = get_int(att[1], path + "/attraction/1");
  return voter;
}

// ---------------------------------------------------------------- writing

json tiers_json(const Tiers& tiers) {
  json out = json::array();
  for (const auto& tier : tiers) out.push_back(tier);
  return out;
}

json instance_json(const RawInstance& raw) {
  json doc;
  doc["policies"] = raw.policies;
  doc["parties"]["A"] = {{"ideal", raw.party_a.ideal}, {"ranking", tiers_json(raw.party_a.ranking)}};
  doc["parties"]["B"] = {{"ideal", raw.party_b.ideal}, {"ranking", tiers_json(raw.party_b.ranking)}};
  doc["voters"] = json::array();
  for (const RawVoter& v : raw.voters) {
    doc["voters"].push_back({{"ideal", v.ideal},
                             {"ranking", tiers_json(v.ranking)},
                             {"attraction", {v.lo, v.hi}}});
  }
  return doc;
}

bool is_flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array()) {
      for (const auto& x : e)
        if (x.is_structured()) return false;
    }
  }
  return true;
}

// Objects one key per line; arrays of scalars or of scalar arrays stay inline.
void write_json(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      os << pad << json(key).dump() << ": ";
      write_json(os, value, indent + 2);
      os << (++k < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "}";
  } else if (j.is_array() && !is_flat(j)) {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << pad;
      write_json(os, j[k], indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "]";
  } else if (j.is_array()) {
    os << "[";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) os << ", ";
      write_json(os, j[k], indent);
    }
    os << "]";
  } else {
    os << j.dump();
  }
}

std::string canonical(const json& j) {
  std::ostringstream os;
  write_json(os, j, 0);
  os << "\n";
  return os.str();
}

std::string letter(Outcome o) { return std::string(1, outcome_letter(o)); }

json record_json(const EquilibriumRecord& rec) {
  return {{"s", rec.profile.s},
          {"t", rec.profile.t},
          {"outcome", letter(rec.outcome)},
          {"tied", rec.tied},
          {"reversed_order", rec.reversed_order},
          {"mutual_leapfrog", rec.mutual_leapfrog}};
}

std::string profile_name(Profile p) {
  return "(" + policy_name(p.s) + "," + policy_name(p.t) + ")";
}

std::string flags_text(const EquilibriumRecord& rec) {
  std::string out;
  if (rec.tied) out += " TIED";
  if (rec.reversed_order) out += " REVERSED-ORDER";
  if (rec.mutual_leapfrog) out += " MUTUAL-LEAPFROG";
  return out;
}

void write_table(std::ostream& os, const Instance& inst, Profile p) {
  const int m = inst.num_policies();
  const DeviationTable table = deviation_table(inst, p);
  const std::string row_a = "g(.," + policy_name(p.t) + ")";
  const std::string row_b = "g(" + policy_name(p.s) + ",.)";
  const int label = static_cast<int>(std::max(row_a.size(), row_b.size()));
  const int width = static_cast<int>(policy_name(m).size()) + 1;
  os << std::setw(label) << "";
  for (int j = 1; j <= m; ++j) os << std::setw(width) << policy_name(j);
  os << "\n" << std::left << std::setw(label) << row_a << std::right;
  for (Outcome o : table.party_a_row) os << std::setw(width) << outcome_letter(o);
  os << "\n" << std::left << std::setw(label) << row_b << std::right;
  for (Outcome o : table.party_b_row) os << std::setw(width) << outcome_letter(o);
  os << "\n";
}

const char* party_mode_name(PartyMode m) {
  switch (m) {
    case PartyMode::kFreeSinglePeaked: return "free";
    case PartyMode::kSymmetric: return "symmetric";
    case PartyMode::kCommonShape: return "common_shape";
  }
  return "?";
}

const char* attraction_mode_name(AttractionMode m) {
  return m == AttractionMode::kFull ? "full" : "random";
}

}  // namespace

RawInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " tag.
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(what);
  }
  require_object(doc, "", {"policies", "parties", "voters"});
  RawInstance raw;
  raw.policies = get_int(require_key(doc, "", "policies"), "/policies");
  const json& parties = require_key(doc, "", "parties");
  require_object(parties, "/parties", {"A", "B"});
  raw.party_a = get_party(require_key(parties, "/parties", "A"), "/parties/A", raw.policies);
  raw.party_b = get_party(require_key(parties, "/parties", "B"), "/parties/B", raw.policies);
  const json& voters = require_key(doc, "", "voters");
  if (!voters.is_array()) schema_error("/voters", "expected a list");
  for (std::size_t k = 0; k < voters.size(); ++k) {
    raw.voters.push_back(get_voter(voters[k], "/voters/" + std::to_string(k), raw.policies));
  }
  return raw;
}

std::string serialize_instance(const RawInstance& raw) { return canonical(instance_json(raw)); }

std::string serialize_instance(const Instance& inst) { return serialize_instance(to_raw(inst)); }

const std::string& builtin_example_document() {
  static const std::string doc = R"({
  "parties": {
    "A": {
      "ideal": 3,
      "ranking": [[3], [4], [5], [6], [2], [1], [7]]
    },
    "B": {
      "ideal": 5,
      "ranking": [[5], [4], [3], [2], [6], [1], [7]]
    }
  },
  "policies": 7,
  "voters": [
    {
      "attraction": [1, 2],
      "ideal": 1,
      "ranking": [[1], [2], [3], [4], [5], [6], [7]]
    },
    {
      "attraction": [1, 3],
      "ideal": 2,
      "ranking": [[2], [1], [3], [4], [5], [6], [7]]
    },
    {
      "attraction": [5, 7],
      "ideal": 6,
      "ranking": [[6], [5], [7], [4], [3], [2], [1]]
    },
    {
      "attraction": [6, 7],
      "ideal": 7,
      "ranking": [[7], [6], [5], [4], [3], [2], [1]]
    }
  ]
}
)";
  return doc;
}

Instance builtin_example() {
  static const Instance inst = validate_instance(parse_instance(builtin_example_document()));
  return inst;
}

std::string policy_name(PolicyIndex j) { return "x" + std::to_string(j); }

std::string render_validation(const Instance& inst, Format fmt) {
  if (fmt == Format::kMachine) {
    return canonical({{"valid", true},
                      {"policies", inst.num_policies()},
                      {"voters", inst.num_voters()}});
  }
  std::ostringstream os;
  os << "valid: " << inst.num_policies() << " policies, " << inst.num_voters()
     << " voters, ideal points A=" << policy_name(inst.party(Party::A).ideal)
     << " B=" << policy_name(inst.party(Party::B).ideal) << "\n";
  return os.str();
}

std::string render_table(const Instance& inst, Profile p, Format fmt) {
  if (fmt == Format::kMachine) {
    const DeviationTable table = deviation_table(inst, p);
    json a = json::array(), b = json::array();
    for (Outcome o : table.party_a_row) a.push_back(letter(o));
    for (Outcome o : table.party_b_row) b.push_back(letter(o));
    return canonical({{"profile", {{"s", p.s}, {"t", p.t}}},
                      {"outcome", letter(outcome(inst, p))},
                      {"party_a_row", a},
                      {"party_b_row", b}});
  }
  std::ostringstream os;
  os << "deviation table at " << profile_name(p) << ", g = " << letter(outcome(inst, p)) << "\n";
  write_table(os, inst, p);
  return os.str();
}

std::string render_equilibria(const Instance& inst, const std::vector<EquilibriumRecord>& records,
                              Format fmt) {
  if (fmt == Format::kMachine) {
    json list = json::array();
    for (const auto& rec : records) list.push_back(record_json(rec));
    return canonical({{"equilibria", list}});
  }
  std::ostringstream os;
  if (records.empty()) {
    os << "no equilibria\n";
    return os.str();
  }
  os << records.size() << (records.size() == 1 ? " equilibrium" : " equilibria") << "\n";
  for (const auto& rec : records) {
    os << "\n" << profile_name(rec.profile) << "  g = " << letter(rec.outcome)
       << flags_text(rec) << "\n";
    write_table(os, inst, rec.profile);
  }
  return os.str();
}

std::string render_classification(const EquilibriumRecord& rec, const NashCheck& nash,
                                   Format fmt) {
  if (fmt == Format::kMachine) {
    json j = record_json(rec);
    j["nash"] = nash.nash;
    if (nash.deviation) {
      j["deviation"] = {{"party", nash.deviation->party == Party::A ? "A" : "B"},
                        {"platform", nash.deviation->platform}};
    }
    return canonical(j);
  }
  std::ostringstream os;
  os << profile_name(rec.profile) << "  g = " << letter(rec.outcome) << flags_text(rec) << "\n";
  os << "reversed order: " << (rec.reversed_order ? "yes" : "no")
     << ", mutual leapfrog: " << (rec.mutual_leapfrog ? "yes" : "no") << "\n";
  if (nash.nash) {
    os << "Nash equilibrium: yes\n";
  } else {
    os << "Nash equilibrium: no (party " << (nash.deviation->party == Party::A ? "A" : "B")
       << " deviates to " << policy_name(nash.deviation->platform) << ")\n";
  }
  return os.str();
}

std::string render_axioms(const Instance& inst, const AxiomReport& report, Format fmt) {
  const auto& cs = report.cross_side;
  if (fmt == Format::kMachine) {
    json voters = json::array();
    for (bool ok : report.voters_single_peaked) voters.push_back(ok);
    json cross = {{"holds", cs.holds}};
    if (cs.witness) {
      cross["witness"] = {
          {"a", cs.witness->a},
          {"b", cs.witness->b},
          {"failed",
           cs.witness->failed == Biconditional::kRightOverLeft ? "right_over_left"
                                                               : "left_over_right"}};
    }
    return canonical({{"single_peaked",
                       {{"A", report.party_a_single_peaked},
                        {"B", report.party_b_single_peaked},
                        {"voters", voters}}},
                      {"cross_side_agreement", cross},
                      {"fixed_participation", report.fixed_participation}});
  }
  auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "Axiom 1 (single-peakedness)\n";
  os << "  party A: " << verdict(report.party_a_single_peaked) << "\n";
  os << "  party B: " << verdict(report.party_b_single_peaked) << "\n";
  for (std::size_t k = 0; k < report.voters_single_peaked.size(); ++k) {
    os << "  voter " << k + 1 << ": " << verdict(report.voters_single_peaked[k]) << "\n";
  }
  os << "Axiom 2 (cross-side agreement): " << verdict(cs.holds);
  if (cs.witness) {
    const int a = cs.witness->a, b = cs.witness->b;
    const auto& pa = inst.party(Party::A);
    const auto& pb = inst.party(Party::B);
    const PolicyIndex ra = pa.ideal + a, la = pa.ideal - b, rb = pb.ideal + a, lb = pb.ideal - b;
    const bool right_over_left = cs.witness->failed == Biconditional::kRightOverLeft;
    auto rel = [&](const WeakOrder& o, PolicyIndex x, PolicyIndex y) {
      return right_over_left ? o.weakly_prefers(x, y) : o.weakly_prefers(y, x);
    };
    const char* op = right_over_left ? " >= " : " <= ";
    os << " witness (a,b)=(" << a << "," << b << "): R_A(" << a << ")=" << policy_name(ra) << op
       << "L_A(" << b << ")=" << policy_name(la) << " is " << (rel(pa.order, ra, la) ? "true" : "false")
       << " for A, R_B(" << a << ")=" << policy_name(rb) << op << "L_B(" << b
       << ")=" << policy_name(lb) << " is " << (rel(pb.order, rb, lb) ? "true" : "false")
       << " for B";
  }
  os << "\nfixed participation: " << (report.fixed_participation ? "true" : "false") << "\n";
  return os.str();
}

std::string render_campaign(const CampaignReport& r, Format fmt) {
  if (fmt == Format::kMachine) {
    json violations = json::array();
    for (const Violation& v : r.violations) {
      json entry = {{"trial", v.trial}, {"detail", v.detail}, {"instance", instance_json(v.instance)}};
      if (v.profile) entry["profile"] = {{"s", v.profile->s}, {"t", v.profile->t}};
      violations.push_back(entry);
    }
    const GenConfig& c = r.config;
    return canonical(
        {{"conjecture", to_string(r.conjecture)},
         {"config",
          {{"m", {c.m_range.lo, c.m_range.hi}},
           {"n", {c.n_range.lo, c.n_range.hi}},
           {"party_mode", party_mode_name(c.party_mode)},
           {"attraction_mode", attraction_mode_name(c.attraction_mode)},
           {"seed", c.seed}}},
         {"trials", r.trials},
         {"precondition_applied", r.precondition_applied},
         {"builtin_example_injected", r.builtin_example_injected},
         {"instances_satisfying_precondition", r.precondition_count},
         {"equilibria", r.equilibria},
         {"reversed_order_equilibria", r.reversed_order_equilibria},
         {"mutual_leapfrog_equilibria", r.mutual_leapfrog_equilibria},
         {"violation_count", r.violation_count},
         {"violations", violations}});
  }
  const GenConfig& c = r.config;
  std::ostringstream os;
  os << "conjecture: " << to_string(r.conjecture) << "\n";
  os << "config: m=" << c.m_range.lo << ".." << c.m_range.hi << " n=" << c.n_range.lo << ".."
     << c.n_range.hi << " party-mode=" << party_mode_name(c.party_mode)
     << " attraction-mode=" << attraction_mode_name(c.attraction_mode) << " seed=" << c.seed
     << "\n";
  os << "trials: " << r.trials << (r.builtin_example_injected ? " (trial 0 = paper-example)" : "")
     << "\n";
  os << "precondition: " << (r.precondition_applied ? "applied" : "ignored")
     << ", satisfied by " << r.precondition_count << " instances\n";
  if (r.conjecture != Conjecture::kProp4ImpliesAx2) {
    os << "equilibria: " << r.equilibria << " (reversed order " << r.reversed_order_equilibria
       << ", mutual leapfrog " << r.mutual_leapfrog_equilibria << ")\n";
  }
  os << "violations: " << r.violation_count << "\n";
  for (const Violation& v : r.violations) {
    os << "  trial " << v.trial << ": " << v.detail << "\n";
  }
  if (r.violation_count > r.violations.size()) {
    os << "  ... " << r.violation_count - r.violations.size() << " more not shown\n";
  }
  os << "wall clock: " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
  return os.str();
}

}  // namespace leapfrog
