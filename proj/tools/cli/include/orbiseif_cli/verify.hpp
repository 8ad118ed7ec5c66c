#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbiseif/engine.hpp"
#include "orbiseif/oracle.hpp"

namespace orbiseif::cli {

// Differences between the closed forms and the brute-force oracle; empty
// means the spec passes. Also checks somma integrality on both sides.
std::vector<std::string> compare(const EngineReport& engine, const OracleReport& oracle);

struct SpecOutcome {
  FamilySpec spec;
  bool passed = true;
  bool somma_ok = true;
  std::vector<std::string> diffs;
  // Filled on a mismatch: the comparison redone under each reading.
  std::vector<std::pair<std::string, std::vector<std::string>>> readings;
};

SpecOutcome verify_spec(const FamilySpec& spec, Reading reading = default_reading());

struct SweepSummary {
  std::vector<SpecOutcome> outcomes;  // in input order
  std::size_t failures = 0;
  std::size_t somma_failures = 0;
};

SweepSummary verify_sweep(const std::vector<FamilySpec>& specs, unsigned workers,
                          Reading reading = default_reading());

// ORBISEIF_WORKERS if set and positive, else the hardware concurrency.
unsigned default_workers();

// Comma separated family names; "table4", "abelian", "dihedral", "fibered"
// and "all" expand to groups. Throws PreconditionError on unknown names.
std::vector<FamilyId> parse_family_list(const std::string& s);

}  // namespace orbiseif::cli
