#include "orbifold/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbifold {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw SeriesError("variable index out of range");
  Monomial m = zero(nvars);
  m.exps[index] = power;
  return m;
}

Monomial Monomial::product_of(std::size_t nvars, std::size_t lo, std::size_t hi) {
  if (hi >= nvars || lo > hi) throw SeriesError("bad variable range");
  Monomial m = zero(nvars);
  for (std::size_t i = lo; i <= hi; ++i) m.exps[i] = 1;
  return m;
}

long Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0L);
}

bool Monomial::is_constant() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::non_negative() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e >= 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw SeriesError("monomial arity mismatch");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += other.exps[i];
  return out;
}

Monomial Monomial::pow(int k) const {
  Monomial out = *this;
  for (int& e : out.exps) e *= k;
  return out;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 't' << i;
    if (exps[i] != 1) os << '^' << exps[i];
  }
  if (first) os << '1';
  return os.str();
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const long da = a.degree();
  const long db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

TruncatedSeries::TruncatedSeries(std::size_t nvars, int bound, bool halved)
    : nvars_(nvars), bound_(bound), halved_(halved) {
  if (bound < 0) throw SeriesError("negative truncation bound");
}

TruncatedSeries TruncatedSeries::constant(std::size_t nvars, int bound, const Integer& c) {
  TruncatedSeries s(nvars, bound);
  s.add_term(Monomial::zero(nvars), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t nvars, int bound, const Monomial& m,
                                          const Integer& c, bool halved) {
  TruncatedSeries s(nvars, bound, halved);
  s.add_term(m, c);
  return s;
}

Integer TruncatedSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool TruncatedSeries::in_range(const Monomial& m) const { return m.degree() <= stored_limit(); }

void TruncatedSeries::add_term(const Monomial& m, const Integer& c) {
  if (m.nvars() != nvars_) throw SeriesError("monomial arity does not match series");
  if (c == 0 || !in_range(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(int new_bound) const {
  TruncatedSeries out(nvars_, new_bound, halved_);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

TruncatedSeries TruncatedSeries::with_halving_cleared() const {
  if (!halved_) return *this;
  TruncatedSeries out(nvars_, bound_, false);
  for (const auto& [m, c] : terms_) {
    Monomial h = m;
    for (int& e : h.exps) {
      if (e % 2 != 0) throw SeriesError("half-integer exponent survives in " + m.to_string());
      e /= 2;
    }
    out.add_term(h, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::as_halved() const {
  if (halved_) return *this;
  TruncatedSeries out(nvars_, bound_, true);
  for (const auto& [m, c] : terms_) out.add_term(m.pow(2), c);
  return out;
}

bool TruncatedSeries::has_negative_exponent() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return !t.first.non_negative(); });
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.nvars_ == b.nvars_ && a.bound_ == b.bound_ && a.halved_ == b.halved_ &&
         a.terms_ == b.terms_;
}

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars() != b.nvars()) throw SeriesError("series arity mismatch");
  if (a.halved() != b.halved()) throw SeriesError("cannot mix halved and plain series");
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries out(a.nvars(), std::min(a.bound(), b.bound()), a.halved());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, -b); }

TruncatedSeries scale(const TruncatedSeries& a, const Integer& c) {
  TruncatedSeries out(a.nvars(), a.bound(), a.halved());
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms()) out.add_term(m, v * c);
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries out(a.nvars(), std::min(a.bound(), b.bound()), a.halved());
  const long limit = a.halved() ? 2L * out.bound() : out.bound();

  struct Term {
    long degree;
    const Monomial* mono;
    const Integer* coeff;
  };
  std::vector<Term> rhs;
  rhs.reserve(b.size());
  for (const auto& [m, c] : b.terms()) rhs.push_back({m.degree(), &m, &c});

  Monomial prod = Monomial::zero(a.nvars());
  Integer tmp;
  for (const auto& [ma, ca] : a.terms()) {
    const long da = ma.degree();
    for (const Term& t : rhs) {
      // rhs is sorted by degree, so nothing further fits once one overshoots
      if (da + t.degree > limit) break;
      for (std::size_t i = 0; i < prod.exps.size(); ++i) prod.exps[i] = ma.exps[i] + t.mono->exps[i];
      tmp = ca * *t.coeff;
      out.add_term(prod, tmp);
    }
  }
  return out;
}

TruncatedSeries inv(const TruncatedSeries& a) {
  const Integer c0 = a.constant_term();
  if (c0 != 1 && c0 != -1) throw SeriesError("inverse requires constant term +-1");
  for (const auto& [m, c] : a.terms()) {
    if (!m.is_constant() && m.degree() <= 0)
      throw SeriesError("inverse requires positive-degree non-constant terms");
  }
  // a = c0 (1 - u) with u of positive degree; 1/a = c0 (1 + u + u^2 + ...)
  TruncatedSeries u = scale(a, -c0);
  u.add_term(Monomial::zero(a.nvars()), 1);
  const TruncatedSeries one = TruncatedSeries::constant(a.nvars(), a.bound(), 1);
  const TruncatedSeries unit = a.halved() ? one.as_halved() : one;
  TruncatedSeries acc = unit;
  const int steps = a.halved() ? 2 * a.bound() : a.bound();
  for (int k = 0; k < steps; ++k) acc = add(unit, mul(u, acc));
  return scale(acc, c0);
}

TruncatedSeries pow(const TruncatedSeries& a, int k) {
  if (k < 0) return pow(inv(a), -k);
  TruncatedSeries result = TruncatedSeries::constant(a.nvars(), a.bound(), 1);
  if (a.halved()) result = result.as_halved();
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::vector<SignedSummand> signed_summands(const TruncatedSeries& a) {
  std::vector<SignedSummand> out;
  out.reserve(a.size());
  for (const auto& [m, c] : a.terms()) {
    out.push_back({m, abs(c), sgn(c) > 0 ? 1 : -1});
  }
  return out;
}

namespace {

/// (1 - sign*x)^(-exponent) for a positive-degree monomial x, to the bound.
/// A negative exponent -e with sign -1 gives the polynomial (1 + x)^e.
TruncatedSeries binomial_factor(std::size_t nvars, int bound, const Monomial& x, int sign,
                                const Integer& exponent) {
  TruncatedSeries f(nvars, bound);
  const long deg = x.degree();
  Integer c = 1;
  Monomial power = Monomial::zero(nvars);
  for (long k = 0; k * deg <= bound; ++k) {
    if (c == 0) break;
    f.add_term(power, (sign < 0 && k % 2 == 1) ? Integer(-c) : c);
    // c_{k+1} = c_k * (exponent + k) / (k + 1)
    c *= exponent + k;
    c /= k + 1;
    power = power * x;
  }
  return f;
}

}  // namespace

TruncatedSeries pexp_sigma(const TruncatedSeries& a) {
  if (a.halved()) throw SeriesError("pexp_sigma requires integer exponents");
  if (a.constant_term() != 0) throw SeriesError("pexp_sigma requires zero constant term");
  if (a.has_negative_exponent()) throw SeriesError("pexp_sigma requires non-negative exponents");

  TruncatedSeries result = TruncatedSeries::constant(a.nvars(), a.bound(), 1);
  for (const SignedSummand& s : signed_summands(a)) {
    // (1 - sigma x)^(-sigma a): sigma = +1 is (1-x)^(-a), sigma = -1 is (1+x)^a
    const Integer exponent = s.sign > 0 ? s.magnitude : Integer(-s.magnitude);
    result = mul(result, binomial_factor(a.nvars(), a.bound(), s.monomial, s.sign, exponent));
  }
  return result;
}

namespace {

/// prod over m >= 1 of (1 - sign * s t^m)^(-power(m)), with s possibly Laurent.
TruncatedSeries euler_product(const Monomial& t, const Monomial& s, int sign, std::size_t nvars,
                              int bound, bool weighted) {
  if (t.nvars() != nvars || s.nvars() != nvars) throw SeriesError("substitution arity mismatch");
  if (!t.non_negative() || t.degree() <= 0)
    throw SeriesError("t must be a non-constant monomial with non-negative exponents");
  TruncatedSeries result = TruncatedSeries::constant(nvars, bound, 1);
  const long dt = t.degree();
  const long ds = s.degree();
  for (long m = 1; m * dt + ds <= bound; ++m) {
    const Monomial x = s * t.pow(static_cast<int>(m));
    if (x.degree() > bound) continue;
    if (x.degree() <= 0 || !x.non_negative())
      throw SeriesError("substitution produces negative exponent in " + x.to_string());
    result = mul(result, binomial_factor(nvars, bound, x, sign, Integer(weighted ? m : 1)));
  }
  return result;
}

}  // namespace

TruncatedSeries std_series(StdSeries kind, const Monomial& t, std::size_t nvars, int bound,
                           const SSubstitution& s) {
  const Monomial one = Monomial::zero(nvars);
  const Monomial& smono = s.mono.exps.empty() ? one : s.mono;
  if (s.sign != 1 && s.sign != -1) throw SeriesError("substitution sign must be +-1");
  switch (kind) {
    case StdSeries::E:
      return euler_product(t, one, 1, nvars, bound, false);
    case StdSeries::M:
      return euler_product(t, one, 1, nvars, bound, true);
    case StdSeries::M_st:
      return euler_product(t, smono, s.sign, nvars, bound, true);
    case StdSeries::Mtilde_st:
      return mul(euler_product(t, smono, s.sign, nvars, bound, true),
                 euler_product(t, smono.inverse(), s.sign, nvars, bound, true));
  }
  throw SeriesError("unknown standard series");
}

TruncatedSeries specialize(const TruncatedSeries& a, const std::vector<Monomial>& targets,
                           int target_bound) {
  if (targets.size() != a.nvars()) throw SeriesError("specialisation arity mismatch");
  const std::size_t out_vars = targets.empty() ? 0 : targets.front().nvars();
  for (const Monomial& m : targets) {
    if (m.nvars() != out_vars) throw SeriesError("specialisation targets disagree on arity");
  }
  TruncatedSeries out(out_vars, target_bound, a.halved());
  for (const auto& [m, c] : a.terms()) {
    Monomial image = Monomial::zero(out_vars);
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      for (std::size_t j = 0; j < out_vars; ++j) image.exps[j] += m.exps[i] * targets[i].exps[j];
    }
    out.add_term(image, c);
  }
  return out;
}

std::optional<Monomial> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars() != b.nvars()) throw SeriesError("series arity mismatch");
  GradedLexLess less;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first))) {
      return ia->first;
    }
    if (ia == a.terms().end() || less(ib->first, ia->first)) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string series_to_string(const TruncatedSeries& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_constant()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << m.to_string();
    }
  }
  if (a.halved()) os << "  [exponents doubled]";
  return os.str();
}

}  // namespace orbifold
