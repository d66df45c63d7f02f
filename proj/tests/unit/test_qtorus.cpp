#include <doctest.h>

#include <algorithm>
#include <random>

#include "orbifold/part3d.hpp"
#include "orbifold/qtorus.hpp"
#include "series_helpers.hpp"

using namespace orbifold;

namespace {

QSeries mono(std::size_t nvars, int bound, const Pairing& p, const Monomial& m, const QLaurent& c = QLaurent::monomial(0)) {
  QSeries s(nvars, bound, p);
  s.add_term(m, c);
  return s;
}

QSeries random_qseries(std::mt19937& rng, std::size_t nvars, int bound, const Pairing& p) {
  std::uniform_int_distribution<int> coeff(-3, 3), qexp(-4, 4), deg(0, bound), var(0, static_cast<int>(nvars) - 1);
  QSeries s(nvars, bound, p);
  for (int k = 0; k < 6; ++k) {
    Monomial m = Monomial::zero(nvars);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) m.exps[var(rng)] += 1;
    s.add_term(m, QLaurent::monomial(qexp(rng), coeff(rng)));
  }
  return s;
}

// all exponent vectors in nvars variables with total degree <= d
std::vector<Monomial> monomials_up_to(std::size_t nvars, int d) {
  std::vector<Monomial> out{Monomial::zero(nvars)};
  for (int step = 0; step < d; ++step) {
    std::vector<Monomial> next;
    for (const Monomial& m : out) {
      if (m.degree() != step) continue;
      for (std::size_t v = 0; v < nvars; ++v) {
        Monomial n = m;
        n.exps[v] += 1;
        if (std::find(next.begin(), next.end(), n) == next.end()) next.push_back(n);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

}  // namespace

TEST_CASE("Laurent polynomials in the half power") {
  QLaurent a = QLaurent::monomial(1, 2);
  a.add_term(-3, 1);
  a.add_term(1, -2);
  CHECK(a == QLaurent::monomial(-3));
  CHECK(QLaurent::monomial(0, 0).is_zero());
  const QLaurent b = QLaurent::monomial(1) + QLaurent::monomial(-1);
  CHECK(b * b == QLaurent::monomial(2) + QLaurent::monomial(0, 2) + QLaurent::monomial(-2));
  CHECK(b.at_one() == 2);
  CHECK(b.shifted(3) == QLaurent::monomial(4) + QLaurent::monomial(2));
  CHECK(b.truncated(0) == QLaurent::monomial(-1));
}

TEST_CASE("qt_mul examples") {
  const McKayQuiver q = mckay_quiver(ColourGroup::cyclic(3, {1, 1, 1}));
  const Pairing p = Pairing::euler(q);
  const Monomial d{1, 1, 1};
  const QSeries x = mono(3, 8, p, d);
  const QSeries sq = qt_mul(x, x);
  CHECK(sq.terms().size() == 1);
  CHECK(sq.coeff({2, 2, 2}) == QLaurent::monomial(-6));  // q^{-3}

  const QSeries u = mono(3, 8, Pairing::zero(), {1, 0, 0}, QLaurent::monomial(1));
  const QSeries v = mono(3, 8, Pairing::zero(), {0, 2, 0}, QLaurent::monomial(-1, 3));
  CHECK(qt_mul(u, v) == qt_mul(v, u));
  CHECK(qt_mul(u, v).coeff({1, 2, 0}) == QLaurent::monomial(0, 3));

  CHECK_THROWS(qt_mul(x, u));
}

TEST_CASE("commutation defect on monomial pairs up to degree 4") {
  const McKayQuiver q = mckay_quiver(ColourGroup::cyclic(3, {1, 2, 0}));
  const Pairing p = Pairing::euler(q);
  const auto mons = monomials_up_to(3, 4);
  for (const Monomial& d : mons) {
    for (const Monomial& e : mons) {
      const QSeries de = qt_mul(mono(3, 8, p, d), mono(3, 8, p, e));
      const QSeries ed = qt_mul(mono(3, 8, p, e), mono(3, 8, p, d));
      const QLaurent lhs = de.coeff(d * e);
      const QLaurent rhs = ed.coeff(d * e).shifted(static_cast<int>(p(d, e) - p(e, d)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("qt_mul is associative and unital") {
  std::mt19937 rng(11);
  for (const ColourGroup& g : {ColourGroup::cyclic(3, {1, 1, 1}), ColourGroup::cyclic(4, {1, 1, 2})}) {
    const Pairing p = Pairing::euler(mckay_quiver(g));
    const std::size_t nv = g.order();
    const QSeries one = mono(nv, 6, p, Monomial::zero(nv));
    for (int trial = 0; trial < 15; ++trial) {
      const QSeries a = random_qseries(rng, nv, 6, p);
      const QSeries b = random_qseries(rng, nv, 6, p);
      const QSeries c = random_qseries(rng, nv, 6, p);
      CHECK(qt_mul(qt_mul(a, b), c) == qt_mul(a, qt_mul(b, c)));
      CHECK(qt_mul(a, one) == a);
      CHECK(qt_mul(one, a) == a);
      CHECK(qt_mul(a, qt_add(b, c)) == qt_add(qt_mul(a, b), qt_mul(a, c)));
    }
  }
}

TEST_CASE("the product of all variables is central") {
  for (const ColourGroup& g : builtin_3d_groups()) {
    const McKayQuiver q = mckay_quiver(g);
    CHECK(ones_vector_is_central(q));
    const Pairing p = Pairing::euler(q);
    const int r = g.order();
    const QSeries t = mono(r, 6, p, Monomial(std::vector<int>(r, 1)));
    std::mt19937 rng(r);
    for (int trial = 0; trial < 5; ++trial) {
      const QSeries a = random_qseries(rng, r, 6, p);
      CHECK(qt_mul(t, a) == qt_mul(a, t));
    }
  }
}

TEST_CASE("a non-McKay pairing need not have a central ones vector") {
  McKayQuiver lopsided;
  lopsided.vertices = 2;
  lopsided.arrows = {{'x', 0, 1}};
  CHECK_FALSE(ones_vector_is_central(lopsided));
}

TEST_CASE("q_specialize") {
  std::mt19937 rng(3);
  const auto plain = testing_helpers::random_series(rng, 2, 6, 8, 9);
  CHECK(q_specialize(QSeries::from_series(plain)) == plain);
  const auto other = testing_helpers::random_series(rng, 2, 6, 8, 9);
  CHECK(q_specialize(qt_mul(QSeries::from_series(plain), QSeries::from_series(other))) == plain * other);

  // ring map when the pairing takes even values
  const Pairing even{{{2, 0}, {4, -2}}};
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries a = random_qseries(rng, 2, 6, even);
    const QSeries b = random_qseries(rng, 2, 6, even);
    CHECK(q_specialize(qt_mul(a, b)) == q_specialize(a) * q_specialize(b));
  }
}

TEST_CASE("signed characteristic function") {
  const ColourGroup trivial = ColourGroup::cyclic(1, {0, 0, 0});
  const QSeries s = signed_char(mckay_quiver(trivial), z3d(trivial, 4));
  CHECK(s.coeff({0}) == QLaurent::monomial(0));
  CHECK(s.coeff({1}) == QLaurent::monomial(-1, -1));  // (-q^{1/2})^{-1}
  CHECK(s.coeff({2}) == QLaurent::monomial(-6, 3));   // 3 (-q^{1/2})^{2 - 8}

  for (const ColourGroup& g : builtin_3d_groups()) {
    CAPTURE(g.spec());
    const McKayQuiver q = mckay_quiver(g);
    CHECK(q_specialize(signed_char(q, z3d(g, 10))) == z3d_signed(g, 10));
  }
}

TEST_CASE("q-bound truncation") {
  QSeries s(1, 4, Pairing::zero(), 2);
  s.add_term({1}, QLaurent::monomial(4) + QLaurent::monomial(5));
  CHECK(s.coeff({1}) == QLaurent::monomial(4));
  const QSeries f = q_binomial_factor(1, 4, 3, Monomial{1}, 2, 1);  // (1 - t q)^{-1}
  for (int k = 0; k <= 3; ++k) CHECK(f.coeff({k}) == QLaurent::monomial(2 * k));
  CHECK(f.coeff({4}).is_zero());
}

TEST_CASE("JSON round-trip") {
  const Pairing p = Pairing::euler(mckay_quiver(ColourGroup::cyclic(3, {1, 1, 1})));
  std::mt19937 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const QSeries a = random_qseries(rng, 3, 6, p);
    CHECK(qseries_from_json(qseries_to_json(a)) == a);
  }
  QSeries bounded(2, 3, Pairing::zero(), 5);
  bounded.add_term({1, 1}, QLaurent::monomial(-3, Integer("98765432109876543210")));
  const std::string text = qseries_to_json(bounded);
  CHECK(text.find("\"qexp_doubled\":-3") != std::string::npos);
  CHECK(text.find("\"98765432109876543210\"") != std::string::npos);
  CHECK(qseries_from_json(text) == bounded);
  CHECK_THROWS(qseries_from_json("{}"));
}
