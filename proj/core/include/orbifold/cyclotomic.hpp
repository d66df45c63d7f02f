#pragma once

#include <string>
#include <vector>

#include "orbifold/mpoly.hpp"

namespace orbifold {

/// Element of Z[zeta_N], zeta_N = exp(2 pi i / N), stored as coefficients of
/// zeta^0 .. zeta^{N-1} and kept reduced modulo the N-th cyclotomic polynomial.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order);
  static Cyclotomic integer(int order, const Integer& c);
  /// zeta^k (k taken mod N).
  static Cyclotomic root(int order, long k);

  int order() const { return order_; }
  const std::vector<Integer>& coeffs() const { return c_; }

  bool is_integer() const;
  /// Value when is_integer(); throws otherwise.
  Integer to_integer() const;
  Cyclotomic conj() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic scaled(const Integer& k) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void reduce();
  void check(const Cyclotomic& o) const;

  int order_;
  std::vector<Integer> c_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(int n);

}  // namespace orbifold
