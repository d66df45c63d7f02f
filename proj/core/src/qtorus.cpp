#include "orbifold/qtorus.hpp"

#include <json.hpp>

namespace orbifold {

QLaurent QLaurent::monomial(int qexp_doubled, const Integer& c) {
  QLaurent l;
  l.add_term(qexp_doubled, c);
  return l;
}

Integer QLaurent::coeff(int qexp_doubled) const {
  auto it = terms_.find(qexp_doubled);
  return it == terms_.end() ? Integer(0) : it->second;
}

void QLaurent::add_term(int qexp_doubled, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(qexp_doubled, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer QLaurent::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QLaurent QLaurent::shifted(int qexp_doubled) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + qexp_doubled, c);
  return out;
}

QLaurent QLaurent::truncated(int max_doubled) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) {
    if (e <= max_doubled) out.terms_.emplace(e, c);
  }
  return out;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
  QLaurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

bool Pairing::is_zero() const {
  for (const auto& row : matrix) {
    for (long v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

long Pairing::operator()(const Monomial& d, const Monomial& e) const {
  if (matrix.empty()) return 0;
  if (d.nvars() != matrix.size() || e.nvars() != matrix.size())
    throw SeriesError("pairing: exponent vector length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (d.exps[i] == 0) continue;
    for (std::size_t j = 0; j < matrix.size(); ++j) s += d.exps[i] * matrix[i][j] * e.exps[j];
  }
  return s;
}

QSeries::QSeries(std::size_t nvars, int bound, Pairing pairing, std::optional<int> qbound)
    : nvars_(nvars), bound_(bound), pairing_(std::move(pairing)), qbound_(qbound) {
  if (bound < 0) throw SeriesError("negative truncation bound");
  if (!pairing_.matrix.empty() && pairing_.matrix.size() != nvars)
    throw SeriesError("pairing dimension does not match nvars");
}

QSeries QSeries::from_series(const TruncatedSeries& s, Pairing pairing, std::optional<int> qbound) {
  if (s.halved()) throw SeriesError("cannot lift a halved series");
  QSeries out(s.nvars(), s.bound(), std::move(pairing), qbound);
  for (const auto& [m, c] : s.terms()) out.add_term(m, QLaurent::monomial(0, c));
  return out;
}

QLaurent QSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QLaurent{} : it->second;
}

void QSeries::add_term(const Monomial& m, const QLaurent& c) {
  if (m.nvars() != nvars_) throw SeriesError("monomial arity mismatch");
  if (!m.non_negative()) throw SeriesError("QSeries exponents must be non-negative");
  if (m.degree() > bound_) return;
  const QLaurent add = qbound_ ? c.truncated(2 * *qbound_) : c;
  if (add.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, add);
    return;
  }
  it->second = it->second + add;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void check_compatible(const QSeries& a, const QSeries& b) {
  if (a.nvars() != b.nvars()) throw SeriesError("QSeries nvars mismatch");
  if (!(a.pairing() == b.pairing())) throw SeriesError("QSeries pairing mismatch");
  if (a.qbound() != b.qbound()) throw SeriesError("QSeries q-bound mismatch");
}

}  // namespace

QSeries qt_mul(const QSeries& a, const QSeries& b) {
  check_compatible(a, b);
  QSeries out(a.nvars(), std::min(a.bound(), b.bound()), a.pairing(), a.qbound());
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      if (da.degree() + db.degree() > out.bound()) continue;
      const long twist = a.pairing()(da, db);
      out.add_term(da * db, (ca * cb).shifted(static_cast<int>(twist)));
    }
  }
  return out;
}

QSeries qt_add(const QSeries& a, const QSeries& b) {
  check_compatible(a, b);
  QSeries out(a.nvars(), std::min(a.bound(), b.bound()), a.pairing(), a.qbound());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

TruncatedSeries q_specialize(const QSeries& a) {
  TruncatedSeries out(a.nvars(), a.bound());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c.at_one());
  return out;
}

QSeries q_binomial_factor(std::size_t nvars, int bound, std::optional<int> qbound,
                          const Monomial& x, int qexp_doubled, int exponent) {
  if (x.degree() <= 0 || !x.non_negative())
    throw SeriesError("q_binomial_factor: factor monomial must have positive degree");
  QSeries out(nvars, bound, Pairing::zero(), qbound);
  Integer c = 1;
  Monomial xk = Monomial::zero(nvars);
  for (int k = 0; xk.degree() <= bound; ++k) {
    out.add_term(xk, QLaurent::monomial(k * qexp_doubled, c));
    c = c * (exponent + k) / (k + 1);
    if (c == 0) break;
    xk = xk * x;
  }
  return out;
}

QSeries signed_char(const McKayQuiver& quiver, const TruncatedSeries& coloured) {
  if (coloured.nvars() != static_cast<std::size_t>(quiver.vertices))
    throw SeriesError("signed_char: series arity does not match quiver");
  QSeries out(coloured.nvars(), coloured.bound(), Pairing::euler(quiver));
  for (const auto& [m, c] : coloured.terms()) {
    const DimVector d(m.exps.begin(), m.exps.end());
    const long s = d[0] + euler_form(quiver, d, d);
    out.add_term(m, QLaurent::monomial(static_cast<int>(s), (s % 2 == 0) ? c : Integer(-c)));
  }
  return out;
}

bool ones_vector_is_central(const McKayQuiver& quiver) {
  const DimVector ones(quiver.vertices, 1);
  for (int i = 0; i < quiver.vertices; ++i) {
    DimVector e(quiver.vertices, 0);
    e[i] = 1;
    if (euler_form(quiver, ones, e) != euler_form(quiver, e, ones)) return false;
  }
  return true;
}

std::string qseries_to_json(const QSeries& a, int indent) {
  nlohmann::ordered_json j;
  j["nvars"] = a.nvars();
  j["bound"] = a.bound();
  if (a.qbound()) j["qbound"] = *a.qbound();
  j["halved"] = false;
  j["pairing"] = a.pairing().matrix;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : a.terms()) {
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& [e, v] : c.terms()) {
      nlohmann::ordered_json entry;
      entry["qexp_doubled"] = e;
      entry["coeff"] = v.get_str();
      coeffs.push_back(std::move(entry));
    }
    nlohmann::ordered_json t;
    t["exp"] = m.exps;
    t["coeff"] = std::move(coeffs);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(indent);
}

QSeries qseries_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::optional<int> qbound;
    if (j.contains("qbound")) qbound = j.at("qbound").get<int>();
    Pairing p{j.value("pairing", std::vector<std::vector<long>>{})};
    QSeries out(j.at("nvars").get<std::size_t>(), j.at("bound").get<int>(), p, qbound);
    for (const auto& t : j.at("terms")) {
      QLaurent c;
      for (const auto& e : t.at("coeff")) {
        c.add_term(e.at("qexp_doubled").get<int>(), Integer(e.at("coeff").get<std::string>()));
      }
      out.add_term(Monomial(t.at("exp").get<std::vector<int>>()), c);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw SeriesError(std::string("malformed qseries JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SeriesError(std::string("malformed qseries JSON: ") + e.what());
  }
}

}  // namespace orbifold
