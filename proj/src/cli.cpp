#include "leapfrog/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "leapfrog/equilibrium.hpp"
#include "leapfrog/io.hpp"
#include "leapfrog/search.hpp"

namespace leapfrog::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Profile parse_profile(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--profile expects s,t");
  auto strip = [](std::string_view s) {
    if (!s.empty() && (s.front() == 'x' || s.front() == 'X')) s.remove_prefix(1);
    return s;
  };
  auto s = to_int(strip(std::string_view(text).substr(0, comma)));
  auto t = to_int(strip(std::string_view(text).substr(comma + 1)));
  if (!s || !t) throw UsageError("--profile expects two integers s,t");
  return {*s, *t};
}

IntRange parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  std::optional<int> lo, hi;
  if (dots == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(std::string_view(text).substr(0, dots));
    hi = to_int(std::string_view(text).substr(dots + 2));
  }
  if (!lo || !hi) throw UsageError(std::string(flag) + " expects a..b");
  return {*lo, *hi};
}

PartyMode parse_party_mode(const std::string& s) {
  if (s == "free" || s == "free_single_peaked") return PartyMode::kFreeSinglePeaked;
  if (s == "symmetric") return PartyMode::kSymmetric;
  if (s == "common_shape") return PartyMode::kCommonShape;
  throw UsageError("unknown party mode \"" + s + "\"");
}

AttractionMode parse_attraction_mode(const std::string& s) {
  if (s == "random" || s == "random_interval") return AttractionMode::kRandomInterval;
  if (s == "full") return AttractionMode::kFull;
  throw UsageError("unknown attraction mode \"" + s + "\"");
}

struct Options {
  std::string format = "human";
  std::string builtin;
  std::string file;
  std::string profile;
  std::string conjecture;
  std::string m_range;
  std::string n_range;
  std::string party_mode;
  std::string attraction_mode;
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  std::uint64_t trial = 0;
};

Instance load_instance(const Options& opt) {
  if (!opt.builtin.empty() && !opt.file.empty()) {
    throw UsageError("give either a file or --builtin, not both");
  }
  if (!opt.builtin.empty()) return builtin_example();
  if (opt.file.empty()) throw UsageError("an instance file or --builtin paper-example is required");
  std::ifstream in(opt.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + opt.file);
  std::ostringstream text;
  text << in.rdbuf();
  return validate_instance(parse_instance(text.str()));
}

Profile checked_profile(const Instance& inst, const std::string& text) {
  const Profile p = parse_profile(text);
  if (!inst.space().contains(p.s) || !inst.space().contains(p.t)) {
    throw UsageError("--profile outside [1," + std::to_string(inst.num_policies()) + "]");
  }
  return p;
}

GenConfig gen_config(const Options& opt, std::optional<Conjecture> conj) {
  GenConfig cfg;
  cfg.seed = opt.seed;
  if (!opt.m_range.empty()) cfg.m_range = parse_range(opt.m_range, "--m");
  if (!opt.n_range.empty()) cfg.n_range = parse_range(opt.n_range, "--n");
  if (!opt.party_mode.empty()) {
    cfg.party_mode = parse_party_mode(opt.party_mode);
  } else if (conj == Conjecture::kProp4ImpliesAx2) {
    cfg.party_mode = PartyMode::kSymmetric;
  }
  if (!opt.attraction_mode.empty()) {
    cfg.attraction_mode = parse_attraction_mode(opt.attraction_mode);
  } else if (conj == Conjecture::kProp2) {
    cfg.attraction_mode = AttractionMode::kFull;
  }
  validate_config(cfg);
  return cfg;
}

void add_generator_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--seed", opt.seed, "RNG seed");
  cmd->add_option("--m", opt.m_range, "policy-count range a..b (default 5..9)");
  cmd->add_option("--n", opt.n_range, "voter-count range a..b (default 2..6)");
  cmd->add_option("--party-mode", opt.party_mode, "free | symmetric | common_shape");
  cmd->add_option("--attraction-mode", opt.attraction_mode, "random | full");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of two-party spatial competition with alienation abstention", "leapfrog"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--builtin", opt.builtin, "use a built-in instance instead of a file")
      ->check(CLI::IsMember({"paper-example"}));

  auto* validate = app.add_subcommand("validate", "check an instance file");
  validate->add_option("file", opt.file, "instance document");

  auto* table = app.add_subcommand("table", "deviation table at a profile");
  table->add_option("file", opt.file, "instance document");
  table->add_option("--profile", opt.profile, "s,t")->required();

  auto* equilibria = app.add_subcommand("equilibria", "enumerate pure-strategy Nash equilibria");
  equilibria->add_option("file", opt.file, "instance document");

  auto* classify_cmd = app.add_subcommand("classify", "order flags and Nash check at a profile");
  classify_cmd->add_option("file", opt.file, "instance document");
  classify_cmd->add_option("--profile", opt.profile, "s,t")->required();

  auto* axioms = app.add_subcommand("axioms", "single-peakedness, cross-side agreement, participation");
  axioms->add_option("file", opt.file, "instance document");

  auto* falsify_cmd = app.add_subcommand("falsify", "seeded falsification campaign");
  falsify_cmd->add_option("conjecture", opt.conjecture, "prop1 | prop2 | thm1 | prop4")->required();
  falsify_cmd->add_option("--trials", opt.trials, "number of trials (default 10000)");
  add_generator_flags(falsify_cmd, opt);

  auto* gen = app.add_subcommand("gen", "write one generated instance");
  add_generator_flags(gen, opt);
  gen->add_option("--trial", opt.trial, "trial index to generate (default 0)");
  gen->add_option("--out", opt.out_path, "output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Format fmt = opt.format == "machine" ? Format::kMachine : Format::kHuman;
  try {
    if (validate->parsed()) {
      out << render_validation(load_instance(opt), fmt);
      return kExitOk;
    }
    if (table->parsed()) {
      const Instance inst = load_instance(opt);
      out << render_table(inst, checked_profile(inst, opt.profile), fmt);
      return kExitOk;
    }
    if (equilibria->parsed()) {
      const Instance inst = load_instance(opt);
      out << render_equilibria(inst, enumerate_equilibria(inst), fmt);
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      const Instance inst = load_instance(opt);
      const Profile p = checked_profile(inst, opt.profile);
      out << render_classification(classify(inst, p), is_nash(inst, p), fmt);
      return kExitOk;
    }
    if (axioms->parsed()) {
      const Instance inst = load_instance(opt);
      const AxiomReport report = check_axioms(inst);
      out << render_axioms(inst, report, fmt);
      return report.cross_side.holds ? kExitOk : kExitViolation;
    }
    if (falsify_cmd->parsed()) {
      if (!opt.builtin.empty()) throw UsageError("falsify does not take --builtin");
      const auto conj = parse_conjecture(opt.conjecture);
      if (!conj) throw UsageError("unknown conjecture \"" + opt.conjecture + "\"");
      const CampaignReport report = falsify(*conj, gen_config(opt, conj), opt.trials);
      out << render_campaign(report, fmt);
      if (report.precondition_applied && report.precondition_count == 0) {
        err << "warning: no generated instance satisfied the precondition of "
            << to_string(*conj) << "; the campaign is vacuous\n";
      }
      return report.violation_count == 0 ? kExitOk : kExitViolation;
    }
    if (gen->parsed()) {
      if (!opt.builtin.empty()) throw UsageError("gen does not take --builtin");
      const Instance inst = gen_instance(gen_config(opt, std::nullopt), opt.trial);
      std::ofstream file(opt.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + opt.out_path);
      file << serialize_instance(inst);
      if (!file) throw UsageError("write failed for " + opt.out_path);
      if (fmt == Format::kHuman) out << "wrote " << opt.out_path << "\n";
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    err << "invalid instance [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace leapfrog::cli
