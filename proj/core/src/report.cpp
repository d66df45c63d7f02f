#include "orbifold/report.hpp"

#include <algorithm>

namespace orbifold {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

const Check* Report::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Check compare_series(const std::string& name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  Check c{name, true, {}, {}};
  const TruncatedSeries a = lhs.truncated(std::min(lhs.bound(), rhs.bound()));
  const TruncatedSeries b = rhs.truncated(std::min(lhs.bound(), rhs.bound()));
  if (auto diff = first_difference(a, b)) {
    c.pass = false;
    c.first_discrepancy = diff->to_string();
    c.detail = "lhs " + a.coeff(*diff).get_str() + " vs rhs " + b.coeff(*diff).get_str();
  } else {
    c.detail = std::to_string(a.size()) + " terms agree to degree " + std::to_string(a.bound());
  }
  return c;
}

}  // namespace orbifold
