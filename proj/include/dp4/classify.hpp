#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp4/weyl.hpp"

namespace dp4 {

// The four field conditions that drive the classification. Validity:
// has_i or has_eps3 forces sum2sq_minus3 (explicit witnesses exist in both
// cases), so profiles violating that are rejected.
struct FieldProfile {
  bool has_i = false;
  bool has_eps3 = false;
  bool has_sqrt5 = false;
  bool sum2sq_minus3 = false;

  bool valid() const;
  bool operator==(const FieldProfile& o) const = default;
};

// Throws std::invalid_argument on inconsistent profiles.
void validate_profile(const FieldProfile& p);

// Built-in catalog: Q, Q(i), Q(eps3), Q(sqrt5), Q(sqrt2).
std::optional<FieldProfile> profile_of_field(const std::string& name);
std::vector<std::string> known_fields();

// Named classes present in M_k^qs / M_k for the profile (not reduced).
std::vector<ClassName> present_qs(const FieldProfile& p);
std::vector<ClassName> present_m(const FieldProfile& p);

// Inclusion-maximal elements, computed via conjugate_into (not transcribed).
std::vector<ClassName> maximal_qs(const FieldProfile& p);
std::vector<ClassName> maximal_m(const FieldProfile& p);

// Membership in M_k: conjugates into some maximal class of the profile.
bool in_mk(const Subgroup& g, const FieldProfile& p);

// Membership in M_k^rat per the rationality theorem: equals in_mk except
// that the two non-split classes are excluded when sum2sq holds and eps3
// does not.
bool in_mk_rat(const Subgroup& g, const FieldProfile& p);

// The classes acting only on non-quasi-split surfaces.
std::vector<ClassName> non_qs_only_classes();

enum class StableWindow { excluded, possible };

// 'possible' iff the splitting group is conjugate onto one of I1, I2, I3 and
// centralizes aut; callers supply the Picard-rank side condition.
StableWindow stable_window(const Subgroup& splitting, const Subgroup& aut);

// All valid profiles (10 of the 16 boolean combinations).
std::vector<FieldProfile> all_valid_profiles();

}  // namespace dp4
