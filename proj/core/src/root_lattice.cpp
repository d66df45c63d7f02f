#include "orbifold/root_lattice.hpp"

#include <stdexcept>

namespace orbifold {

RootLattice RootLattice::type_a(int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  RootLattice l{'A', n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (int i = 0; i < n; ++i) {
    l.cartan[i][i] = 2;
    if (i + 1 < n) l.cartan[i][i + 1] = l.cartan[i + 1][i] = -1;
  }
  return l;
}

RootLattice RootLattice::type_d(int n) {
  if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
  RootLattice l{'D', n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (int i = 0; i < n; ++i) l.cartan[i][i] = 2;
  auto edge = [&](int a, int b) { l.cartan[a - 1][b - 1] = l.cartan[b - 1][a - 1] = -1; };
  for (int k = 1; k + 1 <= n - 2; ++k) edge(k, k + 1);
  edge(n - 2, n - 1);
  edge(n - 2, n);
  return l;
}

long RootLattice::norm(const std::vector<int>& m) const {
  long s = 0;
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) s += static_cast<long>(m[i]) * cartan[i][j] * m[j];
  }
  return s;
}

std::vector<mpq_class> RootLattice::inverse_diagonal() const {
  const int n = rank;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cartan[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const mpq_class p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const mpq_class f = a[row][col];
      for (int k = 0; k < 2 * n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<mpq_class> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a[i][n + i];
  return diag;
}

std::vector<int> RootLattice::coordinate_bounds(long half_norm_bound) const {
  // m_i^2 <= (m^T C m) (C^-1)_ii by Cauchy-Schwarz in the C-inner product.
  std::vector<int> out;
  for (const mpq_class& d : inverse_diagonal()) {
    const mpq_class cap = mpq_class(2 * half_norm_bound) * d;
    int k = 0;
    while (mpq_class((k + 1) * (k + 1)) <= cap) ++k;
    out.push_back(k);
  }
  return out;
}

std::vector<std::vector<int>> RootLattice::vectors_up_to(long half_norm_bound) const {
  std::vector<std::vector<int>> out;
  if (half_norm_bound < 0) return out;
  const std::vector<int> lim = coordinate_bounds(half_norm_bound);
  std::vector<int> m(rank);
  for (int i = 0; i < rank; ++i) m[i] = -lim[i];
  while (true) {
    if (norm(m) <= 2 * half_norm_bound) out.push_back(m);
    int i = rank - 1;
    while (i >= 0 && m[i] == lim[i]) {
      m[i] = -lim[i];
      --i;
    }
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

TruncatedSeries theta_sum(const RootLattice& lattice, const Monomial& t,
                          const std::vector<std::size_t>& coord_var, std::size_t nvars, int bound) {
  if (coord_var.size() != static_cast<std::size_t>(lattice.rank) || t.nvars() != nvars)
    throw SeriesError("theta_sum: arity mismatch");
  bool has_free = false;
  for (std::size_t v = 0; v < nvars; ++v) {
    bool used = false;
    for (std::size_t c : coord_var) used = used || c == v;
    if (!used && t.exps[v] >= 1) has_free = true;
  }
  if (!has_free) throw SeriesError("theta_sum: window would not be provably complete");

  TruncatedSeries out(nvars, bound);
  for (const std::vector<int>& m : lattice.vectors_up_to(bound)) {
    Monomial e = t.pow(static_cast<int>(lattice.norm(m) / 2));
    for (int i = 0; i < lattice.rank; ++i) e.exps[coord_var[i]] += m[i];
    if (!e.non_negative()) throw SeriesError("theta_sum: negative exponent " + e.to_string());
    out.add_term(e, 1);
  }
  return out;
}

}  // namespace orbifold
