#include "orbifold/part2d.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "orbifold/root_lattice.hpp"

namespace orbifold {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (parts[s] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (s > 0 && parts[s] > parts[s - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Partition> enum_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(std::move(p));
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

WeightVector weight2d(int r, const Partition& lambda) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  WeightVector w(r, 0);
  for (int s = 0; s < lambda.length(); ++s) {
    for (int c = 0; c < lambda.parts[s]; ++c) w[((c - s) % r + r) % r] += 1;
  }
  return w;
}

namespace {

Monomial weight_monomial(const WeightVector& w) {
  return Monomial(std::vector<int>(w.begin(), w.end()));
}

int padded_length(int len, int r) { return (len + r - 1) / r * r; }

std::vector<int> beta_numbers(const Partition& lambda, int L) {
  std::vector<int> beta(L);
  for (int s = 0; s < L; ++s) beta[s] = (s < lambda.length() ? lambda.parts[s] : 0) + L - 1 - s;
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int L = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int s = 0; s < L; ++s) {
    const int part = beta[s] - (L - 1 - s);
    if (part > 0) parts.push_back(part);
  }
  return Partition(parts);
}

}  // namespace

CoreQuotient core_quotient(const Partition& lambda, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  const int L = padded_length(lambda.length(), r);
  std::vector<std::vector<int>> runner(r);  // bead positions, descending
  for (int b : beta_numbers(lambda, L)) runner[b % r].push_back(b / r);
  CoreQuotient out;
  std::vector<int> core_beta;
  for (int j = 0; j < r; ++j) {
    const int n = static_cast<int>(runner[j].size());
    std::vector<int> q;
    for (int s = 0; s < n; ++s) {
      const int part = runner[j][s] - (n - 1 - s);
      if (part > 0) q.push_back(part);
    }
    out.quotients.emplace_back(q);
    for (int p = 0; p < n; ++p) core_beta.push_back(p * r + j);
  }
  out.core = from_beta(core_beta);
  return out;
}

Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotients, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (static_cast<int>(quotients.size()) != r) throw std::invalid_argument("need exactly r quotient partitions");
  const CoreQuotient check = core_quotient(core, r);
  if (!(check.core == core)) throw std::invalid_argument("core argument is not an r-core");

  int L = padded_length(core.length(), r);
  std::vector<int> count(r);
  auto recount = [&] {
    std::fill(count.begin(), count.end(), 0);
    for (int b : beta_numbers(core, L)) count[b % r] += 1;
  };
  recount();
  auto enough = [&] {
    for (int j = 0; j < r; ++j) {
      if (count[j] < quotients[j].length()) return false;
    }
    return true;
  };
  while (!enough()) {
    L += r;
    recount();
  }
  std::vector<int> beta;
  for (int j = 0; j < r; ++j) {
    for (int s = 0; s < count[j]; ++s) {
      const int part = s < quotients[j].length() ? quotients[j].parts[s] : 0;
      beta.push_back((part + count[j] - 1 - s) * r + j);
    }
  }
  return from_beta(beta);
}

std::vector<int> hook_lengths(const Partition& lambda) {
  std::vector<int> hooks;
  for (int s = 0; s < lambda.length(); ++s) {
    for (int c = 0; c < lambda.parts[s]; ++c) {
      int leg = 0;
      for (int u = s + 1; u < lambda.length() && lambda.parts[u] > c; ++u) ++leg;
      hooks.push_back(lambda.parts[s] - c - 1 + leg + 1);
    }
  }
  return hooks;
}

bool is_core_by_hooks(const Partition& lambda, int r) {
  for (int h : hook_lengths(lambda)) {
    if (h % r == 0) return false;
  }
  return true;
}

TruncatedSeries z2d(int r, int bound) {
  TruncatedSeries out(r, bound);
  for (int n = 0; n <= bound; ++n) {
    for (const Partition& p : enum_partitions(n)) out.add_term(weight_monomial(weight2d(r, p)), 1);
  }
  return out;
}

TruncatedSeries theta_sum_A(int r, int bound) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (r == 1) return TruncatedSeries::constant(1, bound, 1);
  std::vector<std::size_t> coord(r - 1);
  std::iota(coord.begin(), coord.end(), std::size_t{1});
  return theta_sum(RootLattice::type_a(r - 1), Monomial(std::vector<int>(r, 1)), coord, r, bound);
}

TruncatedSeries r_core_series(int r, int bound) {
  TruncatedSeries out(r, bound);
  for (int n = 0; n <= bound; ++n) {
    for (const Partition& p : enum_partitions(n)) {
      if (core_quotient(p, r).core == p) out.add_term(weight_monomial(weight2d(r, p)), 1);
    }
  }
  return out;
}

Report verify_2d(int r, int bound) {
  Report rep;
  const Monomial t(std::vector<int>(r, 1));
  const TruncatedSeries lhs = z2d(r, bound);
  const TruncatedSeries theta = theta_sum_A(r, bound);
  const TruncatedSeries rhs = pow(std_series(StdSeries::E, t, r, bound), r) * theta;
  rep.add(compare_series("factorisation", lhs, rhs));
  rep.add(compare_series("theta_equals_cores", theta, r_core_series(r, bound)));

  Check rt{"core_quotient_roundtrip", true, {}, {}};
  long tested = 0;
  for (int n = 0; n <= std::min(bound, 12); ++n) {
    for (const Partition& p : enum_partitions(n)) {
      const CoreQuotient cq = core_quotient(p, r);
      int qsize = 0;
      for (const Partition& q : cq.quotients) qsize += q.size();
      const bool ok = from_core_quotient(cq.core, cq.quotients, r) == p &&
                      cq.core.size() + r * qsize == p.size() &&
                      is_core_by_hooks(cq.core, r);
      ++tested;
      if (!ok && rt.pass) {
        rt.pass = false;
        std::string s;
        for (int x : p.parts) s += (s.empty() ? "" : ",") + std::to_string(x);
        rt.first_discrepancy = "(" + s + ")";
      }
    }
  }
  rt.detail = std::to_string(tested) + " partitions of size <= " + std::to_string(std::min(bound, 12));
  rep.add(rt);
  rep.notes.push_back("theta base read as t = t0*...*t" + std::to_string(r - 1));
  return rep;
}

QSeries refined_2d_product(int r, int bound, int qbound) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  const std::size_t nv = r;
  const Monomial t(std::vector<int>(r, 1));
  QSeries acc = QSeries::from_series(theta_sum_A(r, bound), Pairing::zero(), qbound);
  for (int m = 1; static_cast<long>(m) * r <= bound; ++m) {
    const Monomial tm = t.pow(m);
    acc = qt_mul(acc, q_binomial_factor(nv, bound, qbound, tm, 2 * (m - 1), 1));
    if (r > 1) acc = qt_mul(acc, q_binomial_factor(nv, bound, qbound, tm, 2 * m, r - 1));
  }
  return acc;
}

}  // namespace orbifold
