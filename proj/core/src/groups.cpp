#include "orbifold/groups.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace orbifold {

namespace {

int mod(long x, int n) {
  long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

ColourGroup::ColourGroup(std::vector<int> moduli, std::vector<GroupElement> weights)
    : moduli_(std::move(moduli)), weights_(std::move(weights)) {
  if (moduli_.empty()) throw GroupError("group needs at least one cyclic factor");
  for (int n : moduli_) {
    if (n < 1) throw GroupError("cyclic factor orders must be positive");
    order_ *= n;
  }
  if (weights_.size() != 2 && weights_.size() != 3)
    throw GroupError("a colouring group needs 2 or 3 weights");
  GroupElement sum(moduli_.size(), 0);
  for (GroupElement& w : weights_) {
    if (w.size() != moduli_.size()) throw GroupError("weight has wrong number of components");
    for (std::size_t f = 0; f < w.size(); ++f) {
      w[f] = mod(w[f], moduli_[f]);
      sum[f] = mod(sum[f] + w[f], moduli_[f]);
    }
  }
  if (std::any_of(sum.begin(), sum.end(), [](int s) { return s != 0; }))
    throw GroupError("weights must sum to the identity (determinant-one condition)");

  add_table_.resize(static_cast<std::size_t>(order_) * order_);
  for (int x = 0; x < order_; ++x) {
    const GroupElement gx = element(x);
    for (int y = 0; y < order_; ++y) {
      GroupElement gy = element(y);
      for (std::size_t f = 0; f < gy.size(); ++f) gy[f] = mod(gx[f] + gy[f], moduli_[f]);
      add_table_[static_cast<std::size_t>(x) * order_ + y] = index_of(gy);
    }
  }
  for (const GroupElement& w : weights_) weight_index_.push_back(index_of(w));
}

ColourGroup ColourGroup::cyclic(int r, std::vector<int> weights) {
  std::vector<GroupElement> w;
  for (int x : weights) w.push_back({x});
  return ColourGroup({r}, std::move(w));
}

int ColourGroup::index_of(const GroupElement& g) const {
  if (g.size() != moduli_.size()) throw GroupError("element has wrong number of components");
  int idx = 0;
  for (std::size_t f = 0; f < g.size(); ++f) idx = idx * moduli_[f] + mod(g[f], moduli_[f]);
  return idx;
}

GroupElement ColourGroup::element(int index) const {
  GroupElement g(moduli_.size(), 0);
  for (std::size_t f = moduli_.size(); f-- > 0;) {
    g[f] = index % moduli_[f];
    index /= moduli_[f];
  }
  return g;
}

int ColourGroup::negate(int x) const {
  for (int y = 0; y < order_; ++y) {
    if (add(x, y) == 0) return y;
  }
  throw GroupError("no inverse");  // unreachable for a group
}

int ColourGroup::colour(const std::vector<int>& box) const {
  if (box.size() != weights_.size()) throw GroupError("box dimension does not match group");
  GroupElement acc(moduli_.size(), 0);
  for (std::size_t k = 0; k < box.size(); ++k) {
    for (std::size_t f = 0; f < acc.size(); ++f) {
      acc[f] = mod(acc[f] + static_cast<long>(box[k]) * weights_[k][f], moduli_[f]);
    }
  }
  return index_of(acc);
}

bool ColourGroup::is_symmetric() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const GroupElement& w) { return w == weights_.front(); });
}

std::string ColourGroup::spec() const {
  std::ostringstream os;
  if (is_cyclic()) {
    os << "cyclic:" << moduli_[0] << ':';
    for (std::size_t k = 0; k < weights_.size(); ++k) os << (k ? "," : "") << weights_[k][0];
    return os.str();
  }
  os << "product:";
  for (std::size_t f = 0; f < moduli_.size(); ++f) os << (f ? "x" : "") << moduli_[f];
  os << ':';
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    os << (k ? "," : "") << '(';
    for (std::size_t f = 0; f < weights_[k].size(); ++f) os << (f ? "," : "") << weights_[k][f];
    os << ')';
  }
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw GroupError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw GroupError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

ColourGroup parse_group_spec(const std::string& spec) {
  static const std::regex cyclic_re(R"(cyclic:(\d+):(-?\d+(?:,-?\d+){1,2}))");
  static const std::regex product_re(R"(product:(\d+(?:x\d+)+):(\(.*\)))");
  std::smatch m;
  if (std::regex_match(spec, m, cyclic_re)) {
    const int r = std::stoi(m[1].str());
    return ColourGroup::cyclic(r, parse_int_list(m[2].str(), ','));
  }
  if (std::regex_match(spec, m, product_re)) {
    const std::vector<int> moduli = parse_int_list(m[1].str(), 'x');
    static const std::regex tuple_re(R"(\(([^()]*)\))");
    std::vector<GroupElement> weights;
    std::string rest = m[2].str();
    std::string remainder;
    for (auto it = std::sregex_iterator(rest.begin(), rest.end(), tuple_re);
         it != std::sregex_iterator(); ++it) {
      weights.push_back(parse_int_list((*it)[1].str(), ','));
    }
    // reassemble to reject junk between tuples
    std::ostringstream rebuilt;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      rebuilt << (k ? "," : "") << '(';
      for (std::size_t f = 0; f < weights[k].size(); ++f) rebuilt << (f ? "," : "") << weights[k][f];
      rebuilt << ')';
    }
    if (rebuilt.str() != rest) throw GroupError("malformed weight tuples in '" + spec + "'");
    return ColourGroup(moduli, std::move(weights));
  }
  throw GroupError("unrecognised group spec '" + spec + "'");
}

std::vector<ColourGroup> builtin_3d_groups() {
  return {
      ColourGroup::cyclic(1, {0, 0, 0}),
      ColourGroup::cyclic(2, {1, 1, 0}),
      ColourGroup::cyclic(3, {1, 1, 1}),
      ColourGroup::cyclic(3, {1, 2, 0}),
      ColourGroup::cyclic(4, {1, 1, 2}),
      ColourGroup::cyclic(4, {1, 3, 0}),
      ColourGroup::cyclic(5, {1, 1, 3}),
      ColourGroup::cyclic(6, {1, 2, 3}),
      ColourGroup({2, 2}, {{1, 0}, {0, 1}, {1, 1}}),
      ColourGroup({3, 3}, {{1, 0}, {0, 1}, {2, 2}}),
  };
}

int McKayQuiver::arrow_count(int i, int j) const {
  return static_cast<int>(std::count_if(arrows.begin(), arrows.end(), [&](const Arrow& a) {
    return a.source == i && a.target == j;
  }));
}

bool PotentialTerm::is_cycle() const {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (path[k].target != path[k + 1].source) return false;
  }
  return path.back().target == path.front().source;
}

McKayQuiver mckay_quiver(const ColourGroup& g) {
  if (g.dimension() != 3) throw GroupError("McKay quiver construction needs a 3-dimensional action");
  McKayQuiver q;
  q.vertices = g.order();
  const char labels[3] = {'x', 'y', 'z'};
  for (int i = 0; i < g.order(); ++i) {
    for (int k = 0; k < 3; ++k) q.arrows.push_back({labels[k], i, g.add(i, g.weight_index(k))});
  }
  return q;
}

long euler_form(const McKayQuiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != static_cast<std::size_t>(q.vertices) || e.size() != d.size())
    throw GroupError("dimension vector length does not match quiver");
  long v = 0;
  for (int i = 0; i < q.vertices; ++i) v += d[i] * e[i];
  for (const Arrow& a : q.arrows) v -= d[a.source] * e[a.target];
  return v;
}

int sign_exponent(const McKayQuiver& q, const DimVector& d) {
  const long s = d.at(0) + euler_form(q, d, d);
  return static_cast<int>(((s % 2) + 2) % 2);
}

std::vector<PotentialTerm> potential(const ColourGroup& g) {
  if (g.dimension() != 3) throw GroupError("potential needs a 3-dimensional action");
  const int a = g.weight_index(0);
  const int b = g.weight_index(1);
  const int c = g.weight_index(2);
  std::vector<PotentialTerm> terms;
  for (int i = 0; i < g.order(); ++i) {
    const int ia = g.add(i, a);
    // z_{i+a+b} y_{i+a} x_i: apply x_i, then y_{i+a}, then z_{i+a+b}
    terms.push_back({{Arrow{'x', i, ia}, Arrow{'y', ia, g.add(ia, b)},
                      Arrow{'z', g.add(ia, b), g.add(g.add(ia, b), c)}},
                     +1});
    // y_{i+a+c} z_{i+a} x_i
    terms.push_back({{Arrow{'x', i, ia}, Arrow{'z', ia, g.add(ia, c)},
                      Arrow{'y', g.add(ia, c), g.add(g.add(ia, c), b)}},
                     -1});
  }
  return terms;
}

std::vector<std::vector<long>> euler_matrix(const McKayQuiver& q) {
  std::vector<std::vector<long>> b(q.vertices, std::vector<long>(q.vertices, 0));
  for (int i = 0; i < q.vertices; ++i) b[i][i] = 1;
  for (const Arrow& a : q.arrows) b[a.source][a.target] -= 1;
  return b;
}

}  // namespace orbifold
