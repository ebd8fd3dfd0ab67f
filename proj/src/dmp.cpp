#include <algorithm>

#include "stardmp/dmp/analysis.hpp"

namespace stardmp::dmp {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inapplicable:
      return "inapplicable";
  }
  return "?";
}

const std::vector<std::string>& characterization_ids() {
  static const std::vector<std::string> ids{
      "T2.4-1",  "T2.4-2",  "T2.6-1",  "T2.6-2",  "T2.6-3",  "T2.9-2",  "T2.9-3",  "T2.10-1",
      "T2.10-2", "T2.10-3", "T2.10-4", "T2.10-5", "T2.10-6", "T2.10-7", "T2.11-2", "T2.11-3",
      "C5.3-2",  "C5.3-3",  "C5.3-4",  "C5.3-5",  "C5.3-6",  "C5.3-7",
  };
  return ids;
}

bool is_characterization_id(std::string_view id) {
  const auto& ids = characterization_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string_view to_string(Relation r) { return r == Relation::core ? "core" : "pseudo-core"; }

Relation parse_relation(std::string_view text) {
  if (text == "pseudo-core") return Relation::pseudo_core;
  if (text == "core") return Relation::core;
  throw DomainError("unknown relation '" + std::string(text) + "' (expected pseudo-core or core)");
}

}  // namespace stardmp::dmp
