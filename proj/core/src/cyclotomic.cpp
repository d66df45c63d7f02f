#include "orbifold/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace orbifold {

namespace {

// exact division of polynomials (constant term first), divisor monic
std::vector<Integer> poly_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<Integer> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer lead = num[k];
    q[k - dn] = lead;
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= lead * den[i];
  }
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Integer> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

Cyclotomic::Cyclotomic(int order) : order_(order), c_(order, 0) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

Cyclotomic Cyclotomic::integer(int order, const Integer& c) {
  Cyclotomic z(order);
  z.c_[0] = c;
  return z;
}

Cyclotomic Cyclotomic::root(int order, long k) {
  Cyclotomic z(order);
  z.c_[((k % order) + order) % order] = 1;
  z.reduce();
  return z;
}

void Cyclotomic::reduce() {
  const std::vector<Integer> phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c_.size(); k-- > deg;) {
    const Integer lead = c_[k];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) c_[k - deg + i] -= lead * phi[i];
  }
}

void Cyclotomic::check(const Cyclotomic& o) const {
  if (o.order_ != order_) throw std::invalid_argument("cyclotomic order mismatch");
}

bool Cyclotomic::is_integer() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] != 0) return false;
  }
  return true;
}

Integer Cyclotomic::to_integer() const {
  if (!is_integer()) throw std::domain_error("cyclotomic value is not a rational integer: " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic z(order_);
  for (int k = 0; k < order_; ++k) z.c_[(order_ - k) % order_] += c_[k];
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check(o);
  Cyclotomic z = *this;
  for (int k = 0; k < order_; ++k) z.c_[k] += o.c_[k];
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const { return scaled(-1); }

Cyclotomic Cyclotomic::scaled(const Integer& k) const {
  Cyclotomic z = *this;
  for (Integer& v : z.c_) v *= k;
  return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check(o);
  Cyclotomic z(order_);
  for (int a = 0; a < order_; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < order_; ++b) {
      if (o.c_[b] != 0) z.c_[(a + b) % order_] += c_[a] * o.c_[b];
    }
  }
  z.reduce();
  return z;
}

std::string Cyclotomic::to_string() const {
  std::string s;
  for (int k = 0; k < order_; ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += c_[k].get_str();
    if (k > 0) s += "*z^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace orbifold
