#pragma once

#include <set>
#include <string>
#include <vector>

#include "unicas/harness/report.hpp"
#include "unicas/rootdata/algebra.hpp"

namespace unicas::harness {

inline constexpr const char* kSuites[] = {"all", "casimir", "vogel", "deligne", "duality"};

struct VerifyOptions {
  std::string suite = "all";
  unsigned long long seed = 7;
  int profiles = 200;
  int order = 6;
  /// Families to include; empty means every family.
  std::set<rootdata::Family> scope;
  unsigned workers = 0;
};

/// "A,B,E" or "sl,so,sp,exc"; throws std::invalid_argument.
std::set<rootdata::Family> parse_scope(const std::string& text);

/// Classical families at ranks min..min+4 of the validated X2 range, then the
/// exceptional algebras, filtered by scope.
std::vector<rootdata::AlgebraId> sweep_algebras(const std::set<rootdata::Family>& scope);

/// One representative per Cartan type: A2 B4 C3 D5 G2 F4 E6 E7 E8.
std::vector<rootdata::AlgebraId> table_points();

/// Throws std::invalid_argument for an unknown suite or out-of-range option.
Report run_verify(const VerifyOptions& options);

std::string tool_version();

}  // namespace unicas::harness
