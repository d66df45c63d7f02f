#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbifold/mpoly.hpp"

namespace orbifold {

/// Outcome of one mechanical check.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<std::string> first_discrepancy;
};

struct Report {
  std::vector<Check> checks;
  /// Free-form notes (conventions used, byproduct counts) rendered alongside checks.
  std::vector<std::string> notes;

  bool all_pass() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const Report& other);
  const Check* find(const std::string& name) const;
};

/// Compares two series termwise and produces a Check naming the first differing monomial.
Check compare_series(const std::string& name, const TruncatedSeries& lhs, const TruncatedSeries& rhs);

}  // namespace orbifold
