#pragma once

#include <vector>

#include "orbifold/mpoly.hpp"
#include "orbifold/qtorus.hpp"
#include "orbifold/report.hpp"

namespace orbifold {

/// Integer partition as weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

using WeightVector = std::vector<long>;

/// All partitions of n, in reverse lexicographic order of parts.
std::vector<Partition> enum_partitions(int n);

/// Per-colour box counts; box (c, s) in row s, column c has colour (c - s) mod r.
WeightVector weight2d(int r, const Partition& lambda);

/// sum over |lambda| <= bound of t^{w(lambda)}, in r variables.
TruncatedSeries z2d(int r, int bound);

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotients;
};

/// r-core and r-quotient via beta-numbers, padded to a length divisible by r.
CoreQuotient core_quotient(const Partition& lambda, int r);
/// Inverse of core_quotient. Throws std::invalid_argument if `core` is not an r-core.
Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotients, int r);

bool is_core_by_hooks(const Partition& lambda, int r);
std::vector<int> hook_lengths(const Partition& lambda);

/// Theta sum of the A_{r-1} lattice with t = t_0 ... t_{r-1}; constant 1 when r = 1.
TruncatedSeries theta_sum_A(int r, int bound);

/// Coloured generating function of r-cores of size <= bound.
TruncatedSeries r_core_series(int r, int bound);

Report verify_2d(int r, int bound);

/// prod_m (1 - t^m q^{m-1})^{-1} (1 - t^m q^m)^{-(r-1)} times the A_{r-1} theta sum.
QSeries refined_2d_product(int r, int bound, int qbound);

}  // namespace orbifold
