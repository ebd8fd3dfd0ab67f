#pragma once

// Registry of executable theorem checks and the universes they run over.
// A universe is either an exhaustive finite carrier family, a seeded random
// matrix sample, or the fixed 2 x 2 transpose fixture.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stardmp/finite/finite_ring.hpp"

namespace stardmp::suite {

using json = nlohmann::ordered_json;

enum class Outcome { pass, fail, vacuous };
std::string_view to_string(Outcome o);

/// What a check consumes from a universe.
enum class Role { unary, pair, triple, fixture };

struct TheoremInfo {
  std::string id;
  std::string statement;  // our own one-line summary
  Role role;
};

/// Every registered check, in catalog order.
const std::vector<TheoremInfo>& catalog();
/// DomainError for an unknown id.
const TheoremInfo& find_theorem(std::string_view id);
/// Comma-separated ids or prefixes ("T4." selects T4.2-T4.5). A token that
/// selects nothing is a DomainError.
std::vector<std::string> select_ids(std::string_view filter);

struct RunConfig {
  std::uint64_t seed = 20240611;
  std::size_t budget = finite::kDefaultBudget;
  std::size_t samples = 100;        // random matrices per size and involution
  std::size_t pair_samples = 48;    // random pairs per size and involution
  std::size_t triple_samples = 16;  // random chains per size and involution
  std::vector<std::string> universes;  // empty: per-role defaults
  std::vector<std::string> ids;        // empty: whole catalog
};

json config_to_json(const RunConfig& c);

struct UniverseSpec {
  enum class Kind { zn, zp_matrix, random_matrix, fixture };
  Kind kind = Kind::zn;
  std::string name;            // canonical text, e.g. "zn:2-24"
  std::vector<int> moduli;     // zn
  int prime = 2;               // zp_matrix
  int dim = 2;                 // zp_matrix
  std::vector<int> sizes;      // random_matrix

  bool finite() const { return kind == Kind::zn || kind == Kind::zp_matrix; }
};

/// "zn:N", "zn:A-B", "zp:P:K", "random", "random:N", "fixture".
UniverseSpec parse_universe(std::string_view text);
std::vector<std::string> default_universes(Role role);

struct TheoremCheckResult {
  std::string id;
  json universe;  // summary of what was enumerated
  std::size_t instances = 0;   // instances enumerated
  std::size_t applicable = 0;  // instances meeting the hypotheses
  std::size_t violation_count = 0;
  std::vector<json> violations;  // first few, serialized
  std::vector<std::string> notes;
  json witness;  // e.g. the anti-symmetry pair, null otherwise
  Outcome verdict = Outcome::vacuous;
};

json result_to_json(const TheoremCheckResult& r);

TheoremCheckResult run_theorem(std::string_view id, const UniverseSpec& universe, const RunConfig& config);

struct TheoremSummary {
  std::string id;
  std::string statement;
  Outcome verdict = Outcome::vacuous;
  std::vector<TheoremCheckResult> runs;
};

struct SuiteReport {
  RunConfig config;
  std::vector<TheoremSummary> theorems;

  /// No failures (vacuous entries are allowed but reported).
  bool all_pass() const;
  std::size_t count(Outcome o) const;
};

/// Runs the selected ids over their universes, sharing per-element work
/// between checks on the same universe.
SuiteReport run_suite(const RunConfig& config);
json report_to_json(const SuiteReport& r);

/// A universe-independent cross check: every constructive inverse of every
/// element against the exhaustive oracle. Finite universes only.
TheoremCheckResult oracle_agreement(const UniverseSpec& universe, const RunConfig& config);

/// Property ids accepted by search_counterexample.
const std::vector<std::string>& counterexample_properties();
/// First instance in enumeration order, serialized; std::nullopt if none.
std::optional<json> search_counterexample(std::string_view property, const UniverseSpec& universe,
                                          const RunConfig& config);

}  // namespace stardmp::suite
