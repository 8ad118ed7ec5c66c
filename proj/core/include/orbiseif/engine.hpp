#pragma once

#include <cstdint>
#include <string>

#include "orbiseif/groups.hpp"
#include "orbiseif/seifert.hpp"

namespace orbiseif {

// The closed forms for families 1/1p/11/11p circulate in two variants: one for
// the gcd that defines a, one for which of b1, b2 pairs with n'-sm' in family 1.
struct Reading {
  bool a_cross = false;      // a = gcd(n'-sm', m'+sn', .) instead of gcd(n'+sm', n'-sm', .)
  bool b1_from_sum = false;  // family 1: b1 = gcd((n'+sm')/a, .) and b2 from n'-sm'

  friend bool operator==(const Reading&, const Reading&) = default;
  std::string str() const;
};

Reading default_reading();

struct DerivedQuantities {
  std::int64_t h = 0, mPrime = 0, nPrime = 0, a = 0, b1 = 0, b2 = 0, nu = 0;
  std::int64_t d = 0, g = 0, e = 0, gBar = 0, fBar = 0;
  std::int64_t e1 = 1, e2 = 1;
};

// Families 1, 1p, 11, 11p (the dihedral ones reuse the abelian quantities).
DerivedQuantities derived_quantities(const FamilySpec& spec, Reading reading = default_reading());

SeifertData seifert_abelian(const FamilySpec& spec, Reading reading = default_reading());
SeifertData seifert_dihedral(const FamilySpec& spec, Reading reading = default_reading());
SeifertData seifert_polyhedral(const FamilySpec& spec);
// Dispatch on the family; the spec is validated and canonicalized first.
SeifertData seifert_data(const FamilySpec& spec, Reading reading = default_reading());

Underlying underlying_space(const SeifertData& d, const FamilySpec& spec, Reading reading = default_reading());
std::vector<std::int64_t> singular_set(const SeifertData& d, const FamilySpec& spec,
                                       Reading reading = default_reading());

// Which closed-form branch produced the data, e.g. "abelian-1:odd-product".
std::string provenance(const FamilySpec& spec);

struct EngineReport {
  FamilySpec spec;  // canonical
  SeifertData seifert;
  TopologyReport topology;
  std::string provenance;
};

EngineReport engine_report(const FamilySpec& spec, Reading reading = default_reading());

}  // namespace orbiseif
