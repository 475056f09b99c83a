#pragma once

// Instance documents (JSON) and report rendering. Documents use 1-based
// policy indices. Human reports print policies as x_j; machine reports are
// canonical JSON with sorted keys.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leapfrog/election.hpp"
#include "leapfrog/equilibrium.hpp"
#include "leapfrog/model.hpp"
#include "leapfrog/search.hpp"

namespace leapfrog {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural parse. Throws ParseError on malformed JSON (with line and
/// column), on unknown keys (naming the key), or on wrong field types. A
/// `construct` entry is expanded into a ranking here, which can throw
/// ValidationError for a bad shape.
RawInstance parse_instance(std::string_view text);

/// Canonical document text; parse_instance(serialize_instance(x)) == to_raw(x).
std::string serialize_instance(const RawInstance& raw);
std::string serialize_instance(const Instance& inst);

/// Built-in 7-policy, 4-voter instance with an equilibrium at (x6, x2).
Instance builtin_example();
const std::string& builtin_example_document();

enum class Format { kHuman, kMachine };

std::string policy_name(PolicyIndex j);

std::string render_validation(const Instance& inst, Format fmt);
std::string render_table(const Instance& inst, Profile p, Format fmt);
std::string render_equilibria(const Instance& inst, const std::vector<EquilibriumRecord>& records,
                              Format fmt);
std::string render_classification(const EquilibriumRecord& rec, const NashCheck& nash,
                                   Format fmt);
std::string render_axioms(const Instance& inst, const AxiomReport& report, Format fmt);

/// The machine form omits wall-clock time so equal campaigns render
/// byte-identically.
std::string render_campaign(const CampaignReport& report, Format fmt);

}  // namespace leapfrog
