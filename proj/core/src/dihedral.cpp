#include "orbifold/dihedral.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "orbifold/root_lattice.hpp"

namespace orbifold {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

// B acts on the lower-left constituent span{x^i y^j + c x^j y^i} by c (-1)^j
Cyclotomic lower_left_coefficient(const BDCharacterTable& t, int offset) {
  const int N = t.order;
  if (mod(offset, 2 * t.n) == 0) return Cyclotomic::integer(N, -1);
  const Cyclotomic eps0 = (t.n % 2 == 0) ? Cyclotomic::integer(N, 1) : Cyclotomic::root(N, t.n);
  return eps0.conj();
}

}  // namespace

Integer BDCharacterTable::inner(const std::vector<Cyclotomic>& chi, const std::vector<Cyclotomic>& psi) const {
  Cyclotomic acc = Cyclotomic::integer(order, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) acc = acc + (chi[c] * psi[c].conj()).scaled(classes[c].size);
  const Integer total = acc.to_integer();
  if (total % order != 0) throw std::domain_error("class inner product is not an integer");
  return total / order;
}

std::vector<Cyclotomic> BDCharacterTable::product(const std::vector<Cyclotomic>& chi,
                                                  const std::vector<Cyclotomic>& psi) const {
  std::vector<Cyclotomic> out;
  for (std::size_t c = 0; c < classes.size(); ++c) out.push_back(chi[c] * psi[c]);
  return out;
}

std::vector<Integer> BDCharacterTable::decompose(const std::vector<Cyclotomic>& chi) const {
  std::vector<Integer> m;
  for (const auto& irr : values) m.push_back(inner(chi, irr));
  return m;
}

BDCharacterTable bd_character_table(int r) {
  if (r < 4) throw std::invalid_argument("binary dihedral table needs r >= 4");
  BDCharacterTable t;
  t.r = r;
  t.n = r - 2;
  t.order = 4 * t.n;
  const int n = t.n;
  const int N = t.order;

  t.classes.push_back({"I", 1, false, 0});
  for (int k = 1; k < n; ++k) t.classes.push_back({"A^" + std::to_string(k), 2, false, k});
  t.classes.push_back({"-I", 1, false, n});
  t.classes.push_back({"B", n, true, 0});
  t.classes.push_back({"AB", n, true, 1});

  const Cyclotomic one = Cyclotomic::integer(N, 1);
  const Cyclotomic zero = Cyclotomic::integer(N, 0);
  const Cyclotomic eps0 = (n % 2 == 0) ? one : Cyclotomic::root(N, n);
  auto sign_pow = [&](int k) { return k % 2 == 0 ? one : -one; };

  t.dims.assign(r + 1, 2);
  t.dims[0] = t.dims[1] = t.dims[r - 1] = t.dims[r] = 1;
  t.values.assign(r + 1, {});
  for (const BDClass& c : t.classes) {
    t.values[0].push_back(one);
    t.values[1].push_back(c.reflection ? -one : one);
    for (int j = 2; j <= r - 2; ++j) {
      const int m = j - 1;
      // A = diag(xi, xi^{-1}) with xi = zeta^2
      t.values[j].push_back(c.reflection ? zero
                                         : Cyclotomic::root(N, 2L * c.power * m) +
                                               Cyclotomic::root(N, -2L * c.power * m));
    }
    if (c.reflection) {
      const Cyclotomic b = c.power == 0 ? eps0 : -eps0;
      t.values[r - 1].push_back(b);
      t.values[r].push_back(-b);
    } else {
      t.values[r - 1].push_back(sign_pow(c.power));
      t.values[r].push_back(sign_pow(c.power));
    }
  }
  return t;
}

Report character_table_checks(const BDCharacterTable& t) {
  Report rep;
  long sq = 0;
  for (int d : t.dims) sq += static_cast<long>(d) * d;
  rep.add({"dimension_squares", sq == t.order, std::to_string(sq) + " vs order " + std::to_string(t.order), {}});

  Check ortho{"orthonormality", true, {}, {}};
  for (std::size_t a = 0; a < t.values.size(); ++a) {
    for (std::size_t b = 0; b < t.values.size(); ++b) {
      const Integer ip = t.inner(t.values[a], t.values[b]);
      if (ip != (a == b ? 1 : 0) && ortho.pass) {
        ortho.pass = false;
        ortho.first_discrepancy = "<rho" + std::to_string(a) + ",rho" + std::to_string(b) + "> = " + ip.get_str();
      }
    }
  }
  rep.add(ortho);

  Check tensor{"tensor_rho2_labelling", true, {}, {}};
  const int r = t.r;
  for (int j = 2; j <= r - 2; ++j) {
    std::vector<Integer> expect(r + 1, 0);
    if (j == 2) {
      expect[0] = expect[1] = 1;
      if (r == 4) {
        expect[3] = expect[4] = 1;
      } else {
        expect[3] = 1;
      }
    } else if (j < r - 2) {
      expect[j - 1] = expect[j + 1] = 1;
    } else {
      expect[r - 3] = expect[r - 1] = expect[r] = 1;
    }
    if (t.decompose(t.product(t.values[j], t.values[2])) != expect && tensor.pass) {
      tensor.pass = false;
      tensor.first_discrepancy = "rho" + std::to_string(j) + " x rho2";
    }
  }
  rep.add(tensor);
  return rep;
}

std::vector<Cyclotomic> monomial_module_character(const BDCharacterTable& t, int i, int j) {
  std::vector<Cyclotomic> out;
  const int N = t.order;
  for (const BDClass& c : t.classes) {
    if (i == j) {
      // x^i y^i: A fixes it, B multiplies by (-1)^i
      out.push_back(Cyclotomic::integer(N, c.reflection && i % 2 ? -1 : 1));
    } else if (c.reflection) {
      out.push_back(Cyclotomic::integer(N, 0));
    } else {
      out.push_back(Cyclotomic::root(N, 2L * c.power * (i - j)) + Cyclotomic::root(N, -2L * c.power * (i - j)));
    }
  }
  return out;
}

std::vector<Half> OctantCell::units() const {
  if (kind == CellKind::Split) return {Half::LowerLeft, Half::UpperRight};
  return {Half::Whole};
}

int OctantCell::label_of(Half h) const {
  switch (h) {
    case Half::Whole:
      if (kind == CellKind::Split) throw std::invalid_argument("split cell has no whole label");
      return label;
    case Half::LowerLeft:
      return lower_left;
    case Half::UpperRight:
      return upper_right;
  }
  return label;
}

OctantCell classify_cell(const BDCharacterTable& t, int row, int offset) {
  if (row < 0 || offset < 0) throw std::invalid_argument("octant cell needs 0 <= i <= j");
  const int i = row;
  const int j = row + offset;
  const std::vector<Integer> mult = t.decompose(monomial_module_character(t, i, j));
  std::vector<int> labels;
  for (int k = 0; k <= t.r; ++k) {
    for (Integer m = 0; m < mult[k]; ++m) labels.push_back(k);
  }
  OctantCell cell;
  cell.row = row;
  cell.offset = offset;
  if (offset == 0) {
    if (labels.size() != 1) throw std::logic_error("diagonal module is not one-dimensional");
    cell.kind = CellKind::Diagonal;
    cell.label = labels[0];
    return cell;
  }
  if (labels.size() == 1) {
    cell.kind = CellKind::Full;
    cell.label = labels[0];
    return cell;
  }
  if (labels.size() != 2) throw std::logic_error("unexpected decomposition of a monomial module");
  cell.kind = CellKind::Split;

  const int N = t.order;
  const Cyclotomic b_eigen = lower_left_coefficient(t, offset).scaled(j % 2 ? -1 : 1);
  const Cyclotomic a_eigen = Cyclotomic::root(N, -2L * offset);
  std::vector<Cyclotomic> chi;
  for (const BDClass& c : t.classes) {
    Cyclotomic v = Cyclotomic::integer(N, 1);
    for (int k = 0; k < c.power; ++k) v = v * a_eigen;
    chi.push_back(c.reflection ? v * b_eigen : v);
  }
  const std::vector<Integer> ll = t.decompose(chi);
  const auto it = std::find(ll.begin(), ll.end(), Integer(1));
  if (it == ll.end()) throw std::logic_error("lower-left half is not an irreducible constituent");
  cell.lower_left = static_cast<int>(it - ll.begin());
  cell.upper_right = labels[0] == cell.lower_left ? labels[1] : labels[0];
  return cell;
}

OctantLayout::OctantLayout(int r) : r_(r), table_(bd_character_table(r)) {
  const int period = 2 * table_.n;
  for (int p = 0; p < 2; ++p) {
    diagonal_[p] = classify_cell(table_, p, 0);
    for (int m = 0; m < period; ++m) period_[p].push_back(classify_cell(table_, p, m == 0 ? period : m));
  }
}

OctantCell OctantLayout::cell(int row, int offset) const {
  if (row < 0 || offset < 0) throw std::invalid_argument("octant cell needs 0 <= i <= j");
  OctantCell c = offset == 0 ? diagonal_[row % 2] : period_[row % 2][offset % period_[0].size()];
  c.row = row;
  c.offset = offset;
  return c;
}

std::string OctantLayout::golden_text(int rows, int offsets) const {
  std::ostringstream os;
  os << "octant-layout v1 r=" << r_ << " rows=" << rows << " offsets=" << offsets << '\n';
  os << "# per row, cells by offset j-i: D<label> diagonal, F<label> full, S<lower-left>/<upper-right> split\n";
  for (int i = 0; i < rows; ++i) {
    os << "row " << i << ':';
    for (int d = 0; d < offsets; ++d) {
      const OctantCell c = cell(i, d);
      switch (c.kind) {
        case CellKind::Diagonal: os << " D" << c.label; break;
        case CellKind::Full: os << " F" << c.label; break;
        case CellKind::Split: os << " S" << c.lower_left << '/' << c.upper_right; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::set<DrUnit> DrPartition::units(const OctantLayout& layout) const {
  std::set<DrUnit> out;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int d = 0; d < rows[i].length; ++d) {
      for (Half h : layout.cell(i, d).units()) out.insert({i, d, h});
    }
    if (rows[i].half != Half::Whole) out.insert({i, rows[i].length, rows[i].half});
  }
  return out;
}

std::vector<long> unit_weight(const OctantLayout& layout, const std::set<DrUnit>& units) {
  std::vector<long> w(layout.r() + 1, 0);
  for (const DrUnit& u : units) w[layout.cell(u.row, u.offset).label_of(u.half)] += 1;
  return w;
}

std::vector<long> DrPartition::weight(const OctantLayout& layout) const { return unit_weight(layout, units(layout)); }

bool satisfies_rules(const OctantLayout& layout, const std::set<DrUnit>& units, const RuleSet& rules) {
  int max_row = -1;
  int max_off = -1;
  for (const DrUnit& u : units) {
    if (u.row < 0 || u.offset < 0) return false;
    const OctantCell c = layout.cell(u.row, u.offset);
    if ((c.kind == CellKind::Split) == (u.half == Half::Whole)) return false;
    max_row = std::max(max_row, u.row);
    max_off = std::max(max_off, u.offset);
  }
  auto has = [&](int i, int d, Half h) { return d >= 0 && units.count({i, d, h}) > 0; };
  auto fully_present = [&](int i, int d) {
    if (d < 0) return false;
    for (Half h : layout.cell(i, d).units()) {
      if (!has(i, d, h)) return false;
    }
    return true;
  };
  auto any_present = [&](int i, int d) {
    if (d < 0) return false;
    for (Half h : layout.cell(i, d).units()) {
      if (has(i, d, h)) return true;
    }
    return false;
  };
  auto any_right = [&](int i, int d) {
    for (auto it = units.lower_bound({i, d + 1, Half::Whole}); it != units.end() && it->row == i; ++it) return true;
    return false;
  };
  auto any_on_ray = [&](int i, int d, Half h) {
    for (int k = i + 1; k <= max_row; ++k) {
      if (has(k, d, h)) return true;
    }
    return false;
  };

  for (int i = 0; i <= max_row + 1; ++i) {
    for (int d = 0; d <= max_off + 2; ++d) {
      const OctantCell c = layout.cell(i, d);
      for (Half h : c.units()) {
        if (has(i, d, h)) continue;
        if (c.kind != CellKind::Split) {
          if (any_right(i, d)) return false;
          if (rules.rule1_above && d >= 1 && fully_present(i + 1, d - 1)) return false;
        }
        if (any_on_ray(i, d, h)) return false;
        if (rules.rule2 == Rule2Reading::RayAndAbove && any_present(i + 1, d - 1)) return false;
        if (rules.rule3 && c.kind == CellKind::Split && layout.cell(i, d + 1).kind != CellKind::Split &&
            has(i, d + 1, Half::Whole))
          return false;
      }
      if (rules.rule4 && c.kind == CellKind::Split && !has(i, d, Half::LowerLeft) && !has(i, d, Half::UpperRight)) {
        const OctantCell above = layout.cell(i + 1, d - 1);
        if (above.kind != CellKind::Split && has(i + 1, d - 1, Half::Whole)) return false;
      }
    }
  }
  return true;
}

namespace {

struct RowShape {
  DrRow row;
  int units = 0;
};

CellKind kind_at(const OctantLayout& layout, int offset) { return layout.cell(0, offset).kind; }

// all prefix-plus-half rows with at most `budget` units, the empty row first
std::vector<RowShape> row_shapes(const OctantLayout& layout, int budget) {
  std::vector<RowShape> out{{{0, Half::Whole}, 0}};
  int used = 0;
  for (int L = 0;; ++L) {
    const bool split = kind_at(layout, L) == CellKind::Split;
    if (split && used + 1 <= budget) {
      out.push_back({{L, Half::LowerLeft}, used + 1});
      out.push_back({{L, Half::UpperRight}, used + 1});
    }
    used += split ? 2 : 1;
    if (used > budget) break;
    out.push_back({{L + 1, Half::Whole}, used});
  }
  return out;
}

bool row_has(const DrRow& row, int d, Half h) {
  if (d < row.length) return true;
  return d == row.length && row.half != Half::Whole && row.half == h;
}

// rules between a row (below) and the next row up (above)
bool rows_compatible(const OctantLayout& layout, const DrRow& below, const DrRow& above, const RuleSet& rules) {
  const int limit = std::max(below.length, above.length) + 2;
  auto full_at = [&](const DrRow& row, int d) {
    if (d < 0) return false;
    for (Half h : layout.cell(0, d).units()) {
      if (!row_has(row, d, h)) return false;
    }
    return true;
  };
  auto any_at = [&](const DrRow& row, int d) {
    if (d < 0) return false;
    for (Half h : layout.cell(0, d).units()) {
      if (row_has(row, d, h)) return true;
    }
    return false;
  };
  for (int d = 0; d <= limit; ++d) {
    const CellKind k = kind_at(layout, d);
    for (Half h : layout.cell(0, d).units()) {
      if (row_has(below, d, h)) continue;
      if (k != CellKind::Split && rules.rule1_above && d >= 1 && full_at(above, d - 1)) return false;
      if (row_has(above, d, h)) return false;
      if (rules.rule2 == Rule2Reading::RayAndAbove && any_at(above, d - 1)) return false;
    }
    if (rules.rule4 && k == CellKind::Split && !row_has(below, d, Half::LowerLeft) &&
        !row_has(below, d, Half::UpperRight) && kind_at(layout, d - 1) != CellKind::Split &&
        row_has(above, d - 1, Half::Whole))
      return false;
  }
  return true;
}

template <typename Visit>
void walk_dr(const OctantLayout& layout, int max_weight, const RuleSet& rules, Visit&& visit) {
  if (!rules.rule3) throw std::invalid_argument("row enumeration relies on the half-box rule");
  const std::vector<RowShape> shapes = row_shapes(layout, max_weight);
  // per row parity, per shape, the weight contribution
  std::array<std::vector<std::vector<long>>, 2> shape_weight;
  for (int p = 0; p < 2; ++p) {
    for (const RowShape& s : shapes) {
      DrPartition single;
      single.rows.assign(p + 1, DrRow{});
      single.rows[p] = s.row;
      std::vector<long> w(layout.r() + 1, 0);
      for (const DrUnit& u : single.units(layout)) w[layout.cell(u.row, u.offset).label_of(u.half)] += 1;
      shape_weight[p].push_back(std::move(w));
    }
  }
  DrPartition cur;
  std::vector<long> weight(layout.r() + 1, 0);
  std::function<void(int)> rec = [&](int used) {
    visit(cur, weight);
    const int i = static_cast<int>(cur.rows.size());
    for (std::size_t s = 1; s < shapes.size(); ++s) {
      if (used + shapes[s].units > max_weight) continue;
      if (i > 0 && !rows_compatible(layout, cur.rows.back(), shapes[s].row, rules)) continue;
      cur.rows.push_back(shapes[s].row);
      const auto& w = shape_weight[i % 2][s];
      for (std::size_t k = 0; k < w.size(); ++k) weight[k] += w[k];
      rec(used + shapes[s].units);
      for (std::size_t k = 0; k < w.size(); ++k) weight[k] -= w[k];
      cur.rows.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<DrPartition> enum_dr_partitions(const OctantLayout& layout, int max_weight, const RuleSet& rules) {
  std::vector<DrPartition> out;
  walk_dr(layout, max_weight, rules, [&](const DrPartition& p, const std::vector<long>&) { out.push_back(p); });
  return out;
}

TruncatedSeries z_dr(const OctantLayout& layout, int bound, const RuleSet& rules) {
  std::map<std::vector<long>, long> counts;
  walk_dr(layout, bound, rules, [&](const DrPartition&, const std::vector<long>& w) { counts[w] += 1; });
  TruncatedSeries out(layout.r() + 1, bound);
  for (const auto& [w, c] : counts) out.add_term(Monomial(std::vector<int>(w.begin(), w.end())), c);
  return out;
}

TruncatedSeries z_dr(int r, int bound) { return z_dr(OctantLayout(r), bound); }

Monomial dr_t_monomial(int r) {
  std::vector<int> e(r + 1, 2);
  e[0] = e[1] = e[r - 1] = e[r] = 1;
  return Monomial(e);
}

TruncatedSeries theta_sum_D(int r, int bound) {
  if (r < 4) throw std::invalid_argument("D_r theta sum needs r >= 4");
  std::vector<std::size_t> coord(r);
  std::iota(coord.begin(), coord.end(), std::size_t{1});
  return theta_sum(RootLattice::type_d(r), dr_t_monomial(r), coord, r + 1, bound);
}

Report verify_dr(int r, int bound, const RuleSet& rules) {
  const OctantLayout layout(r);
  Report rep = character_table_checks(layout.table());
  const TruncatedSeries theta = theta_sum_D(r, bound);
  const TruncatedSeries rhs = pow(std_series(StdSeries::E, dr_t_monomial(r), r + 1, bound), r + 1) * theta;
  rep.add(compare_series("factorisation", z_dr(layout, bound, rules), rhs));

  std::vector<long> cores(bound + 1, 0);
  for (const auto& [m, c] : theta.terms()) cores[m.degree()] += c.get_si();
  std::string line = "core D" + std::to_string(r) + "-partitions by weight:";
  for (int k = 0; k <= bound; ++k) line += " " + std::to_string(k) + ":" + std::to_string(cores[k]);
  rep.notes.push_back(line);

  RuleSet other = rules;
  other.rule2 = rules.rule2 == Rule2Reading::DiagonalRay ? Rule2Reading::RayAndAbove : Rule2Reading::DiagonalRay;
  const Check alt = compare_series("factorisation", z_dr(layout, bound, other), rhs);
  rep.notes.push_back(std::string("diagonal rule read as ") +
                      (other.rule2 == Rule2Reading::DiagonalRay ? "ray only" : "ray and box above") + ": " +
                      (alt.pass ? "also passes" : "fails at " + alt.first_discrepancy.value_or("?")));
  return rep;
}

}  // namespace orbifold
