#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbifold/mpoly.hpp"

namespace orbifold {

/// A simply-laced root lattice, given by its Cartan matrix.
struct RootLattice {
  char type = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;

  /// A_n: path Dynkin diagram 1 - 2 - ... - n.
  static RootLattice type_a(int n);
  /// D_n (n >= 4): path 1 - ... - (n-2), with n-1 and n both attached to n-2.
  static RootLattice type_d(int n);

  std::string name() const { return std::string(1, type) + std::to_string(rank); }

  /// <m, m> = m^T C m (always even).
  long norm(const std::vector<int>& m) const;

  /// Exact diagonal of C^{-1}, as reduced fractions.
  std::vector<mpq_class> inverse_diagonal() const;

  /// Largest |m_i| possible when <m,m>/2 <= half_norm_bound: floor(sqrt(2 B (C^-1)_ii)).
  std::vector<int> coordinate_bounds(long half_norm_bound) const;

  /// Every m with <m,m>/2 <= half_norm_bound, in lexicographic order.
  std::vector<std::vector<int>> vectors_up_to(long half_norm_bound) const;
};

/// sum_m t^{<m,m>/2} prod_i x_{coord_var[i]}^{m_i}, truncated at total degree `bound`.
/// `t` must have a variable outside `coord_var` with exponent >= 1 so that the total
/// degree of a term bounds <m,m>/2; this is what makes the finite window complete.
TruncatedSeries theta_sum(const RootLattice& lattice, const Monomial& t,
                          const std::vector<std::size_t>& coord_var, std::size_t nvars, int bound);

}  // namespace orbifold
