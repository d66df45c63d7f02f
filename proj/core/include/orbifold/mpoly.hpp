#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbifold {

using Integer = mpz_class;

/// Raised when two series (or a series and a monomial) disagree on arity or
/// halving, or an operation's algebraic precondition fails.
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector of t_0^{e_0} ... t_{k-1}^{e_{k-1}}. Negative entries
/// (Laurent monomials) are permitted in intermediate computations only.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  Monomial(std::initializer_list<int> e) : exps(e) {}

  static Monomial zero(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);
  /// Product of t_lo ... t_hi (inclusive), the common substitution t = prod t_j.
  static Monomial product_of(std::size_t nvars, std::size_t lo, std::size_t hi);

  std::size_t nvars() const { return exps.size(); }
  long degree() const;
  bool is_constant() const;
  bool non_negative() const;

  Monomial operator*(const Monomial& other) const;
  Monomial pow(int k) const;
  Monomial inverse() const { return pow(-1); }

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// lexicographically larger exponent vectors first (t_0 > t_1 > ...).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// One summand sigma_n * a_n * x^n of a series, with a_n > 0 and sigma_n = +-1.
struct SignedSummand {
  Monomial monomial;
  Integer magnitude;
  int sign = 1;
};

/// Sparse multivariate series with big-integer coefficients, truncated at total
/// degree `bound` (inclusive). When `halved` is set, stored exponents are twice
/// the true exponents, so that half-integer powers are represented exactly.
class TruncatedSeries {
 public:
  using TermMap = std::map<Monomial, Integer, GradedLexLess>;

  TruncatedSeries(std::size_t nvars, int bound, bool halved = false);

  static TruncatedSeries constant(std::size_t nvars, int bound, const Integer& c);
  static TruncatedSeries monomial(std::size_t nvars, int bound, const Monomial& m,
                                  const Integer& c = 1, bool halved = false);

  std::size_t nvars() const { return nvars_; }
  int bound() const { return bound_; }
  bool halved() const { return halved_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coeff(const Monomial& m) const;
  Integer constant_term() const { return coeff(Monomial::zero(nvars_)); }

  /// True when `m` has true total degree <= bound.
  bool in_range(const Monomial& m) const;
  /// Accumulates c*m; terms above the bound are dropped, zeros removed.
  void add_term(const Monomial& m, const Integer& c);

  TruncatedSeries truncated(int new_bound) const;
  /// Halves every stored exponent; fails if any is odd.
  TruncatedSeries with_halving_cleared() const;
  /// Doubles every stored exponent and sets the flag.
  TruncatedSeries as_halved() const;
  bool has_negative_exponent() const;

  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&);

 private:
  long stored_limit() const { return halved_ ? 2L * bound_ : bound_; }

  std::size_t nvars_;
  int bound_;
  bool halved_;
  TermMap terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Integer& c);
/// Multiplicative inverse up to the bound; the constant term must be +-1 and
/// every other term must have positive total degree.
TruncatedSeries inv(const TruncatedSeries& a);
/// a^k for any integer k (negative powers go through inv).
TruncatedSeries pow(const TruncatedSeries& a, int k);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

std::vector<SignedSummand> signed_summands(const TruncatedSeries& a);

/// Twisted plethystic exponential: prod_n (1 - sigma_n x^n)^(-sigma_n a_n) over
/// the signed summands of `a`. Requires zero constant term and non-negative
/// exponents; the result always has non-negative coefficients.
TruncatedSeries pexp_sigma(const TruncatedSeries& a);

enum class StdSeries { E, M, M_st, Mtilde_st };

/// Substitution for the s argument of M(s,t) / Mtilde(s,t): the monomial s
/// (possibly Laurent) with an overall sign, so that M(-s,t) is expressible.
struct SSubstitution {
  Monomial mono;
  int sign = 1;
};

/// Expansion of E(t), M(t), M(s,t) = prod (1 - s t^m)^(-m), or
/// Mtilde(s,t) = M(s,t) M(1/s,t), with t (and s) substituted by monomials in
/// `nvars` ambient variables. Throws SeriesError if an expanded factor would
/// carry a negative exponent.
TruncatedSeries std_series(StdSeries kind, const Monomial& t, std::size_t nvars, int bound,
                           const SSubstitution& s = {});

/// Substitutes t_i -> targets[i] termwise and truncates to `target_bound`.
TruncatedSeries specialize(const TruncatedSeries& a, const std::vector<Monomial>& targets,
                           int target_bound);

/// First monomial (in graded-lex order) where the coefficients differ.
std::optional<Monomial> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/// Canonical JSON: {"nvars","bound","halved","terms":[{"exp":[..],"coeff":"..."}]},
/// graded-lex term order, coefficients as decimal strings.
std::string series_to_json(const TruncatedSeries& a, int indent = -1);
TruncatedSeries series_from_json(const std::string& text);

/// Human-readable rendering, e.g. "1 + t0 + 3*t0*t1^2".
std::string series_to_string(const TruncatedSeries& a);

}  // namespace orbifold
