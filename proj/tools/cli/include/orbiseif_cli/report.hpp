#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbiseif/engine.hpp"
#include "orbiseif/oracle.hpp"

namespace orbiseif::cli {

struct Verification {
  bool passed = true;
  std::vector<std::string> diffs;

  friend bool operator==(const Verification&, const Verification&) = default;
};

struct Report {
  FamilySpec spec;
  SeifertData seifert;
  SeifertData normalized;
  TopologyReport topology;
  std::string provenance;
  std::optional<Verification> verification;

  friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const EngineReport& e);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& r);

nlohmann::ordered_json to_json(const SeifertData& d);
SeifertData seifert_from_json(const nlohmann::json& j);

}  // namespace orbiseif::cli
