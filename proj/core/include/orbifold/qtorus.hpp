#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbifold/groups.hpp"
#include "orbifold/mpoly.hpp"

namespace orbifold {

/// Finitely supported Laurent polynomial in q^{1/2}; keys are doubled exponents.
class QLaurent {
 public:
  using TermMap = std::map<int, Integer>;

  QLaurent() = default;
  static QLaurent monomial(int qexp_doubled, const Integer& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int qexp_doubled) const;
  void add_term(int qexp_doubled, const Integer& c);

  /// Value at q^{1/2} = 1.
  Integer at_one() const;
  QLaurent shifted(int qexp_doubled) const;
  /// Drops terms with doubled exponent above `max_doubled`.
  QLaurent truncated(int max_doubled) const;

  friend bool operator==(const QLaurent&, const QLaurent&) = default;
  friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);

 private:
  TermMap terms_;
};

/// Bilinear form on exponent vectors, (d, e) = d^T B e. An empty matrix is the zero form.
struct Pairing {
  std::vector<std::vector<long>> matrix;

  static Pairing zero() { return {}; }
  static Pairing euler(const McKayQuiver& q) { return {euler_matrix(q)}; }

  bool is_zero() const;
  long operator()(const Monomial& d, const Monomial& e) const;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// Series in t_0..t_{k-1} with QLaurent coefficients, multiplied in the quantum torus
/// x^d x^e = q^{(d,e)/2} x^{d+e}. `qbound`, when set, truncates q-exponents above it.
class QSeries {
 public:
  using TermMap = std::map<Monomial, QLaurent, GradedLexLess>;

  QSeries(std::size_t nvars, int bound, Pairing pairing = {}, std::optional<int> qbound = {});

  static QSeries from_series(const TruncatedSeries& s, Pairing pairing = {},
                             std::optional<int> qbound = {});

  std::size_t nvars() const { return nvars_; }
  int bound() const { return bound_; }
  std::optional<int> qbound() const { return qbound_; }
  const Pairing& pairing() const { return pairing_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QLaurent coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const QLaurent& c);

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::size_t nvars_;
  int bound_;
  Pairing pairing_;
  std::optional<int> qbound_;
  TermMap terms_;
};

QSeries qt_mul(const QSeries& a, const QSeries& b);
QSeries qt_add(const QSeries& a, const QSeries& b);

/// Sets q^{1/2} = 1.
TruncatedSeries q_specialize(const QSeries& a);

/// (1 - x q^{e/2})^{-exponent} with x a monomial, as a commutative QSeries factor.
QSeries q_binomial_factor(std::size_t nvars, int bound, std::optional<int> qbound,
                          const Monomial& x, int qexp_doubled, int exponent);

/// Weight counts of a coloured generating function placed on (-q^{1/2})^{d_0 + (d,d)}.
QSeries signed_char(const McKayQuiver& quiver, const TruncatedSeries& coloured);

/// True when the all-ones vector pairs symmetrically with every unit vector.
bool ones_vector_is_central(const McKayQuiver& quiver);

std::string qseries_to_json(const QSeries& a, int indent = -1);
QSeries qseries_from_json(const std::string& text);

}  // namespace orbifold
