#pragma once

#include <random>
#include <vector>

#include "orbifold/mpoly.hpp"

namespace testing_helpers {

// one-variable series from a coefficient list
inline orbifold::TruncatedSeries univariate(const std::vector<long>& coeffs, int bound) {
  orbifold::TruncatedSeries s(1, bound);
  for (std::size_t k = 0; k < coeffs.size(); ++k) s.add_term(orbifold::Monomial{static_cast<int>(k)}, coeffs[k]);
  return s;
}

inline std::vector<long> coefficients(const orbifold::TruncatedSeries& s) {
  std::vector<long> out(s.bound() + 1, 0);
  for (const auto& [m, c] : s.terms()) out[m.degree()] = c.get_si();
  return out;
}

inline orbifold::TruncatedSeries random_series(std::mt19937& rng, std::size_t nvars, int bound, int terms,
                                               int max_coeff, bool zero_constant = false) {
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> var(0, static_cast<int>(nvars) - 1);
  std::uniform_int_distribution<int> deg(zero_constant ? 1 : 0, bound);
  orbifold::TruncatedSeries s(nvars, bound);
  for (int k = 0; k < terms; ++k) {
    orbifold::Monomial m = orbifold::Monomial::zero(nvars);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) m.exps[var(rng)] += 1;
    s.add_term(m, coeff(rng));
  }
  return s;
}

// partitions of n by direct recursion on the largest part
inline long count_partitions(int n, int cap) {
  if (n == 0) return 1;
  long total = 0;
  for (int k = std::min(n, cap); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

// plane partitions of n as weakly decreasing matrices filled cell by cell
inline long count_plane_partitions(int n) {
  const int dim = std::max(n, 1);
  std::vector<int> h(dim * dim, 0);
  long total = 0;
  auto rec = [&](auto&& self, int cell, int left) -> void {
    if (left == 0) {
      ++total;
      return;
    }
    if (cell == dim * dim) return;
    const int i = cell / dim;
    const int j = cell % dim;
    int cap = left;
    if (i > 0) cap = std::min(cap, h[(i - 1) * dim + j]);
    if (j > 0) cap = std::min(cap, h[i * dim + j - 1]);
    for (int v = cap; v >= 0; --v) {
      h[cell] = v;
      if (v == 0) {
        // rest of this row is zero; jump to the next row
        const int next = (i + 1) * dim;
        if (j == 0) {
          h[cell] = 0;
          return;  // an empty first column ends the matrix
        }
        self(self, next, left);
      } else {
        self(self, cell + 1, left - v);
      }
    }
    h[cell] = 0;
  };
  rec(rec, 0, n);
  return total;
}

}  // namespace testing_helpers
