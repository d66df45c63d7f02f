#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "orbifold/dihedral.hpp"

using namespace orbifold;

namespace {

using UnitSet = std::set<DrUnit>;

std::multiset<int> cell_labels(const OctantCell& c) {
  std::multiset<int> out;
  for (Half h : c.units()) out.insert(c.label_of(h));
  return out;
}

std::multiset<int> module_labels(const BDCharacterTable& t, int i, int j) {
  std::multiset<int> out;
  const auto mult = t.decompose(monomial_module_character(t, i, j));
  for (std::size_t k = 0; k < mult.size(); ++k)
    for (long m = 0; m < mult[k].get_si(); ++m) out.insert(static_cast<int>(k));
  return out;
}

// Candidate units: every unit of every cell in the region, then all subsets of
// at most max_weight of them that the validator accepts.
std::set<UnitSet> brute_force(const OctantLayout& layout, int max_weight,
                              const std::vector<std::pair<int, int>>& cells) {
  std::vector<DrUnit> pool;
  for (auto [i, d] : cells)
    for (Half h : layout.cell(i, d).units()) pool.push_back({i, d, h});
  std::set<UnitSet> found;
  UnitSet current;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (satisfies_rules(layout, current)) found.insert(current);
    if (static_cast<int>(current.size()) == max_weight) return;
    for (std::size_t k = next; k < pool.size(); ++k) {
      current.insert(pool[k]);
      self(self, k + 1);
      current.erase(pool[k]);
    }
  };
  rec(rec, 0);
  return found;
}

std::set<UnitSet> generated(const OctantLayout& layout, int max_weight) {
  std::set<UnitSet> out;
  for (const DrPartition& p : enum_dr_partitions(layout, max_weight)) {
    const UnitSet u = p.units(layout);
    CHECK(satisfies_rules(layout, u));
    CHECK(out.insert(u).second);  // duplicate-free
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("character table for r = 4") {
  const BDCharacterTable t = bd_character_table(4);
  CHECK(t.order == 8);
  CHECK(t.classes.size() == 5);
  CHECK(t.dims == std::vector<int>{1, 1, 2, 1, 1});
  const auto sq = t.product(t.values[2], t.values[2]);
  CHECK(t.decompose(sq)[0] == 1);
  CHECK_THROWS(bd_character_table(3));
}

TEST_CASE("character table checks for r = 4..8") {
  for (int r = 4; r <= 8; ++r) {
    CAPTURE(r);
    const BDCharacterTable t = bd_character_table(r);
    CHECK(t.order == 4 * r - 8);
    CHECK(t.classes.size() == static_cast<std::size_t>(r + 1));
    long squares = 0;
    for (int d : t.dims) squares += d * d;
    CHECK(squares == t.order);
    for (int a = 0; a <= r; ++a)
      for (int b = 0; b <= r; ++b) CHECK(t.inner(t.values[a], t.values[b]) == (a == b ? 1 : 0));
    // tensor with rho_2 moves 2-dimensional labels by one
    for (int j = 3; j < r - 2; ++j) {
      std::vector<Integer> want(r + 1, 0);
      want[j - 1] = want[j + 1] = 1;
      CHECK(t.decompose(t.product(t.values[j], t.values[2])) == want);
    }
    if (r >= 5) {
      std::vector<Integer> want(r + 1, 0);
      want[r - 3] = want[r - 1] = want[r] = 1;
      CHECK(t.decompose(t.product(t.values[r - 2], t.values[2])) == want);
    }
    const Report rep = character_table_checks(t);
    for (const Check& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("cyclotomic arithmetic") {
  const Cyclotomic i = Cyclotomic::root(4, 1);
  CHECK(i * i == Cyclotomic::integer(4, -1));
  CHECK(i.conj() * i == Cyclotomic::integer(4, 1));
  const Cyclotomic z = Cyclotomic::root(12, 1);
  Cyclotomic sum(12);
  for (int k = 0; k < 12; ++k) sum = sum + Cyclotomic::root(12, k);
  CHECK(sum.is_integer());
  CHECK(sum.to_integer() == 0);
  CHECK_THROWS(z.to_integer());
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK_THROWS(Cyclotomic::root(4, 1) + Cyclotomic::root(8, 1));
}

TEST_CASE("cell classification examples") {
  const BDCharacterTable t = bd_character_table(4);
  const OctantCell origin = classify_cell(t, 0, 0);
  CHECK(origin.kind == CellKind::Diagonal);
  CHECK(origin.label == 0);

  const OctantLayout layout(4);
  CHECK(cell_labels(layout.cell(0, 1)) == std::multiset<int>{2});
  CHECK(cell_labels(layout.cell(0, 2)) == std::multiset<int>{3, 4});
  CHECK(cell_labels(layout.cell(0, 3)) == std::multiset<int>{2});
  CHECK(cell_labels(layout.cell(0, 4)) == std::multiset<int>{0, 1});
  CHECK(cell_labels(layout.cell(0, 6)) == std::multiset<int>{3, 4});

  for (int r = 4; r <= 7; ++r) {
    const OctantLayout l(r);
    for (int i = 0; i < 6; ++i) {
      for (int d = 0; d < 4 * r; ++d) {
        const OctantCell c = l.cell(i, d);
        if (c.kind != CellKind::Split) continue;
        const auto labels = cell_labels(c);
        CHECK((labels == std::multiset<int>{0, 1} || labels == std::multiset<int>{r - 1, r}));
      }
    }
  }
}

TEST_CASE("layout agrees with direct classification and module decomposition") {
  for (int r = 4; r <= 7; ++r) {
    const OctantLayout layout(r);
    for (int i = 0; i < 7; ++i) {
      for (int d = 0; d < 3 * (2 * r - 4); ++d) {
        CAPTURE(r);
        CAPTURE(i);
        CAPTURE(d);
        const OctantCell direct = classify_cell(layout.table(), i, d);
        const OctantCell cached = layout.cell(i, d);
        CHECK(direct.kind == cached.kind);
        CHECK(cell_labels(direct) == cell_labels(cached));
        CHECK(cell_labels(direct) == module_labels(layout.table(), i, i + d));
        CHECK(module_labels(layout.table(), i + d, i) == module_labels(layout.table(), i, i + d));
      }
    }
  }
}

TEST_CASE("layout golden file") {
  const std::string golden = read_file(std::string(ORBIFOLD_TEST_DATA_DIR) + "/golden/d4_layout.txt");
  REQUIRE_FALSE(golden.empty());
  CHECK(OctantLayout(4).golden_text(6, 12) == golden);
}

TEST_CASE("small D_r-partitions") {
  const OctantLayout layout(4);
  const auto w0 = enum_dr_partitions(layout, 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0].units(layout).empty());

  const auto w1 = enum_dr_partitions(layout, 1);
  REQUIRE(w1.size() == 2);
  int singles = 0;
  for (const DrPartition& p : w1) {
    if (p.units(layout).size() != 1) continue;
    ++singles;
    CHECK(p.weight(layout) == std::vector<long>{1, 0, 0, 0, 0});
  }
  CHECK(singles == 1);
}

TEST_CASE("a two-row D_4-partition with a split pair is generated") {
  const OctantLayout layout(4);
  const DrPartition fig{{{4, Half::Whole}, {1, Half::Whole}}};
  const UnitSet u = fig.units(layout);
  CHECK(satisfies_rules(layout, u));
  CHECK(fig.weight(layout) == std::vector<long>{1, 1, 2, 1, 1});
  CHECK(generated(layout, 6).count(u) == 1);
}

TEST_CASE("validator rejects broken shapes") {
  const OctantLayout layout(4);
  CHECK_FALSE(satisfies_rules(layout, {{0, 1, Half::Whole}}));             // gap to the left
  CHECK_FALSE(satisfies_rules(layout, {{0, 0, Half::Whole}, {1, 0, Half::Whole}}));  // above without support
  CHECK_FALSE(satisfies_rules(layout, {{0, 2, Half::Whole}}));             // split cell used whole
  CHECK_FALSE(satisfies_rules(layout, {{0, 0, Half::LowerLeft}}));         // half of a full cell
}

TEST_CASE("generator matches filtered subsets on a window that must contain every unit") {
  // A unit at (i, d) forces d + 1 + i (i + 3) / 2 units below and to its left.
  for (int r = 4; r <= 5; ++r) {
    CAPTURE(r);
    const OctantLayout layout(r);
    const int W = 8;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i <= W; ++i)
      for (int d = 0; d <= W; ++d)
        if (d + 1 + i * (i + 3) / 2 <= W) cells.push_back({i, d});
    const auto gen = generated(layout, W);
    CHECK(brute_force(layout, W, cells) == gen);
    for (const UnitSet& u : gen) {
      for (const DrUnit& x : u) CHECK(x.offset + 1 + x.row * (x.row + 3) / 2 <= W);
    }
  }
}

TEST_CASE("generator matches filtered subsets on the plain triangle") {
  // Weaker bound from the diagonal ray alone: (i, d) forces i + d + 1 units.
  for (int r = 4; r <= 6; ++r) {
    CAPTURE(r);
    const OctantLayout layout(r);
    const int W = 6;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < W; ++i)
      for (int d = 0; i + d < W; ++d) cells.push_back({i, d});
    CHECK(brute_force(layout, W, cells) == generated(layout, W));
  }
}

TEST_CASE("z_dr examples") {
  const TruncatedSeries z = z_dr(4, 6);
  CHECK(z.constant_term() == 1);
  CHECK(z.coeff({1, 0, 0, 0, 0}) == 1);
  // weight table equals the enumerated partitions
  const OctantLayout layout(4);
  TruncatedSeries direct(5, 6);
  for (const DrPartition& p : enum_dr_partitions(layout, 6)) {
    const auto w = p.weight(layout);
    direct.add_term(Monomial(std::vector<int>(w.begin(), w.end())), 1);
  }
  CHECK(z == direct);
}

TEST_CASE("D_r theta sum") {
  const TruncatedSeries th = theta_sum_D(4, 8);
  CHECK(th.constant_term() == 1);
  const Monomial t = dr_t_monomial(4);
  CHECK(t == Monomial{1, 1, 2, 1, 1});
  // m = e_i: t * t_i
  for (std::size_t i = 0; i < 4; ++i) {
    Monomial m = t;
    m.exps[i + 1] += 1;  // lattice coordinates live on t_1 .. t_r
    CHECK(th.coeff(m) == 1);
  }
  CHECK(dr_t_monomial(6) == Monomial{1, 1, 2, 2, 2, 1, 1});
}

TEST_CASE("factorisation holds") {
  for (auto [r, bound] : {std::pair{4, 10}, std::pair{5, 8}, std::pair{6, 8}}) {
    CAPTURE(r);
    const Report rep = verify_dr(r, bound);
    for (const Check& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.find("factorisation") != nullptr);
  }
}

TEST_CASE("dropping a rule is caught with a first discrepancy") {
  RuleSet loose;
  loose.rule4 = false;
  const Report rep = verify_dr(4, 8, loose);
  const Check* c = rep.find("factorisation");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->first_discrepancy.has_value());

  RuleSet other;
  other.rule2 = Rule2Reading::RayAndAbove;
  const Check* alt = verify_dr(4, 10, other).find("factorisation");
  REQUIRE(alt != nullptr);
  CHECK_FALSE(alt->pass);
}
