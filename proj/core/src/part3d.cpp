#include "orbifold/part3d.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace orbifold {

PlanePartition::PlanePartition(std::vector<std::vector<int>> h) : heights(std::move(h)) {
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i].empty()) throw std::invalid_argument("plane partition rows must be non-empty");
    for (std::size_t j = 0; j < heights[i].size(); ++j) {
      const int v = heights[i][j];
      if (v <= 0) throw std::invalid_argument("plane partition heights must be positive");
      if (j > 0 && v > heights[i][j - 1]) throw std::invalid_argument("rows must weakly decrease");
      if (i > 0 && (j >= heights[i - 1].size() || v > heights[i - 1][j]))
        throw std::invalid_argument("columns must weakly decrease");
    }
  }
}

int PlanePartition::size() const {
  int s = 0;
  for (const auto& row : heights) {
    for (int v : row) s += v;
  }
  return s;
}

std::vector<Box> PlanePartition::boxes() const {
  std::vector<Box> out;
  for (int i = 0; i < static_cast<int>(heights.size()); ++i) {
    for (int j = 0; j < static_cast<int>(heights[i].size()); ++j) {
      for (int k = 0; k < heights[i][j]; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

bool is_plane_partition(const std::vector<Box>& boxes) {
  const std::set<Box> s(boxes.begin(), boxes.end());
  if (s.size() != boxes.size()) return false;
  for (const Box& b : s) {
    for (int c = 0; c < 3; ++c) {
      if (b[c] < 0) return false;
      if (b[c] == 0) continue;
      Box lower = b;
      lower[c] -= 1;
      if (!s.count(lower)) return false;
    }
  }
  return true;
}

PlanePartition PlanePartition::from_boxes(const std::vector<Box>& boxes) {
  if (!is_plane_partition(boxes)) throw std::invalid_argument("box set is not downward closed");
  std::map<std::pair<int, int>, int> h;
  for (const Box& b : boxes) h[{b[0], b[1]}] = std::max(h[{b[0], b[1]}], b[2] + 1);
  std::vector<std::vector<int>> rows;
  for (const auto& [pos, v] : h) {
    if (pos.first >= static_cast<int>(rows.size())) rows.resize(pos.first + 1);
    auto& row = rows[pos.first];
    if (pos.second >= static_cast<int>(row.size())) row.resize(pos.second + 1, 0);
    row[pos.second] = v;
  }
  return PlanePartition(rows);
}

std::vector<long> weight3d(const ColourGroup& g, const PlanePartition& p) {
  std::vector<long> w(g.order(), 0);
  for (const Box& b : p.boxes()) w[g.colour(b[0], b[1], b[2])] += 1;
  return w;
}

namespace {

constexpr int kBitsPerColour = 6;

// Depth-first walk over plane partitions of size <= max_n. Columns of the height
// map are filled to completion in row-major order, so every plane partition has
// exactly one growth sequence.
class PlanePartitionWalker {
 public:
  struct State {
    std::vector<int> h;
    int pi = -1;
    int pj = -1;
    int size = 0;
    std::uint64_t key = 0;
  };

  PlanePartitionWalker(int max_n, const ColourGroup* g) : max_n_(max_n), dim_(std::max(max_n, 1)), g_(g) {
    if (g_) {
      if (g_->order() * kBitsPerColour > 64 || max_n >= (1 << kBitsPerColour))
        throw std::invalid_argument("weight packing limit exceeded");
      colour_.resize(static_cast<std::size_t>(dim_) * dim_ * dim_);
      for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
          for (int k = 0; k < dim_; ++k) colour_[(i * dim_ + j) * dim_ + k] = g_->colour(i, j, k);
        }
      }
    }
  }

  State root() const { return State{std::vector<int>(static_cast<std::size_t>(dim_) * dim_, 0)}; }

  // Visits every state reachable from `s` (including s) whose size <= stop.
  template <typename Visit>
  void walk(State& s, int stop, Visit&& visit) const {
    visit(s);
    if (s.size >= stop) return;
    const int i = s.pi;
    const int j = s.pj;
    if (i < 0) {
      step(s, 0, 0, stop, visit);
      return;
    }
    const int cur = at(s, i, j);
    if ((i == 0 || at(s, i - 1, j) > cur) && (j == 0 || at(s, i, j - 1) > cur)) step(s, i, j, stop, visit);
    if (j + 1 < dim_ && (i == 0 || at(s, i - 1, j + 1) >= 1)) step(s, i, j + 1, stop, visit);
    if (i + 1 < dim_) step(s, i + 1, 0, stop, visit);
  }

  PlanePartition to_partition(const State& s) const {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < dim_; ++i) {
      std::vector<int> row;
      for (int j = 0; j < dim_ && at(s, i, j) > 0; ++j) row.push_back(at(s, i, j));
      if (row.empty()) break;
      rows.push_back(std::move(row));
    }
    return PlanePartition(rows);
  }

 private:
  int at(const State& s, int i, int j) const { return s.h[static_cast<std::size_t>(i) * dim_ + j]; }

  template <typename Visit>
  void step(State& s, int i, int j, int stop, Visit&& visit) const {
    const int k = at(s, i, j);
    const int saved_i = s.pi;
    const int saved_j = s.pj;
    const std::uint64_t inc = g_ ? (std::uint64_t{1} << (kBitsPerColour * colour_[(i * dim_ + j) * dim_ + k])) : 0;
    s.h[static_cast<std::size_t>(i) * dim_ + j] += 1;
    s.pi = i;
    s.pj = j;
    s.size += 1;
    s.key += inc;
    walk(s, stop, visit);
    s.key -= inc;
    s.size -= 1;
    s.pi = saved_i;
    s.pj = saved_j;
    s.h[static_cast<std::size_t>(i) * dim_ + j] -= 1;
  }

  int max_n_;
  int dim_;
  const ColourGroup* g_;
  std::vector<int> colour_;
};

Monomial unpack(std::uint64_t key, int r) {
  std::vector<int> e(r);
  for (int c = 0; c < r; ++c) e[c] = static_cast<int>((key >> (kBitsPerColour * c)) & ((1u << kBitsPerColour) - 1));
  return Monomial(e);
}

}  // namespace

std::vector<PlanePartition> enum_plane_partitions(int n) {
  std::vector<PlanePartition> out;
  if (n < 0) return out;
  PlanePartitionWalker w(n, nullptr);
  auto s = w.root();
  w.walk(s, n, [&](const PlanePartitionWalker::State& st) {
    if (st.size == n) out.push_back(w.to_partition(st));
  });
  return out;
}

TruncatedSeries z3d(const ColourGroup& g, int bound, const EnumOptions& opt) {
  if (g.dimension() != 3) throw std::invalid_argument("z3d needs a three-dimensional colouring");
  if (bound < 0) throw std::invalid_argument("negative bound");
  if (opt.shards < 1) throw std::invalid_argument("shard count must be at least 1");
  using Counts = std::unordered_map<std::uint64_t, std::uint64_t>;
  const PlanePartitionWalker walker(bound, &g);

  // split at a fixed depth: shallow states are counted here, deeper subtrees are shards
  const int depth = std::min(bound, 10);
  Counts total;
  std::vector<PlanePartitionWalker::State> frontier;
  auto root = walker.root();
  walker.walk(root, depth, [&](const PlanePartitionWalker::State& s) {
    if (s.size == depth && depth < bound)
      frontier.push_back(s);
    else
      total[s.key] += 1;
  });

  const int workers = std::max(1, std::min<int>(opt.shards, static_cast<int>(frontier.size())));
  std::vector<Counts> partial(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](int id) {
    Counts& mine = partial[id];
    for (std::size_t k = next++; k < frontier.size(); k = next++) {
      PlanePartitionWalker::State s = frontier[k];
      walker.walk(s, bound, [&](const PlanePartitionWalker::State& st) { mine[st.key] += 1; });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  for (const Counts& c : partial) {
    for (const auto& [k, v] : c) total[k] += v;
  }

  TruncatedSeries out(g.order(), bound);
  for (const auto& [k, v] : total) out.add_term(unpack(k, g.order()), Integer(static_cast<unsigned long>(v)));
  return out;
}

std::string cache_header(const ColourGroup& g, int bound) {
  return "ppcache v1 " + g.spec() + " " + std::to_string(bound);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const ColourGroup& g, int bound) {
  std::string name = g.spec();
  for (char& ch : name) {
    if (ch == ':' || ch == ',' || ch == '(' || ch == ')') ch = '_';
  }
  return dir / ("z3d_" + name + "_b" + std::to_string(bound) + ".ppcache");
}

std::optional<TruncatedSeries> read_cache(const std::filesystem::path& file, const ColourGroup& g, int bound) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header != cache_header(g, bound)) return std::nullopt;
  std::stringstream body;
  body << in.rdbuf();
  try {
    TruncatedSeries s = series_from_json(body.str());
    if (s.nvars() != static_cast<std::size_t>(g.order()) || s.bound() != bound || s.halved()) return std::nullopt;
    return s;
  } catch (const SeriesError&) {
    return std::nullopt;
  }
}

void write_cache(const std::filesystem::path& file, const ColourGroup& g, int bound, const TruncatedSeries& s) {
  std::filesystem::create_directories(file.parent_path());
  static std::atomic<unsigned> counter{0};
  std::ostringstream tmp_name;
  tmp_name << file.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
           << counter++;
  const std::filesystem::path tmp = file.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << cache_header(g, bound) << '\n' << series_to_json(s) << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

TruncatedSeries z3d_cached(const ColourGroup& g, int bound, const std::optional<std::filesystem::path>& cache_dir,
                           const EnumOptions& opt, bool* hit) {
  if (hit) *hit = false;
  if (cache_dir) {
    if (auto s = read_cache(cache_file(*cache_dir, g, bound), g, bound)) {
      if (hit) *hit = true;
      return *s;
    }
  }
  TruncatedSeries s = z3d(g, bound, opt);
  if (cache_dir) write_cache(cache_file(*cache_dir, g, bound), g, bound, s);
  return s;
}

TruncatedSeries apply_dt_sign(const ColourGroup& g, const TruncatedSeries& z) {
  const McKayQuiver q = mckay_quiver(g);
  TruncatedSeries out(z.nvars(), z.bound());
  for (const auto& [m, c] : z.terms()) {
    const DimVector d(m.exps.begin(), m.exps.end());
    out.add_term(m, sign_exponent(q, d) ? Integer(-c) : c);
  }
  return out;
}

TruncatedSeries z3d_signed(const ColourGroup& g, int bound, const EnumOptions& opt) {
  return apply_dt_sign(g, z3d(g, bound, opt));
}

TruncatedSeries reduce3d(const TruncatedSeries& z, int r, int bound) {
  if (z.nvars() != static_cast<std::size_t>(r)) throw SeriesError("reduce3d: series arity does not match r");
  const Monomial t(std::vector<int>(r, 1));
  const TruncatedSeries m = std_series(StdSeries::M, t, r, bound);
  return z.truncated(std::min(bound, z.bound())) * pow(m, -r);
}

Report verify_conjecture(const ColourGroup& g, const TruncatedSeries& z) {
  Report rep;
  const int r = g.order();
  const TruncatedSeries red = reduce3d(z, r, z.bound());
  Check pos{"reduced_nonnegative", true, {}, {}};
  long negatives = 0;
  for (const auto& [m, c] : red.terms()) {
    if (c < 0) {
      if (!pos.first_discrepancy) pos.first_discrepancy = m.to_string() + " = " + c.get_str();
      ++negatives;
    }
  }
  pos.pass = negatives == 0;
  pos.detail = std::to_string(red.size()) + " terms to degree " + std::to_string(z.bound()) + ", " +
               std::to_string(negatives) + " negative";
  rep.add(pos);
  if (z.bound() >= r) {
    const Monomial ones(std::vector<int>(r, 1));
    const Integer c = z.coeff(ones);
    rep.add({"all_colours_once", c == r, "coefficient of " + ones.to_string() + " is " + c.get_str(),
             c == r ? std::nullopt : std::optional<std::string>(ones.to_string())});
  }
  return rep;
}

namespace {

TruncatedSeries pexp_of_bracket(const std::map<std::vector<int>, long>& bracket, int nvars, int bound) {
  const Monomial t(std::vector<int>(nvars, 1));
  TruncatedSeries inner(nvars, bound);
  // negative roots lower the degree of t^k x^a below k * nvars
  long lowest = 0;
  for (const auto& [e, c] : bracket) lowest = std::min(lowest, Monomial(e).degree());
  for (int k = 1; static_cast<long>(k) * nvars + lowest <= bound; ++k) {
    const Monomial tk = t.pow(k);
    for (const auto& [e, c] : bracket) {
      const Monomial m = tk * Monomial(e);
      if (!m.non_negative()) throw SeriesError("negative combined exponent " + m.to_string());
      inner.add_term(m, Integer(c) * k);
    }
  }
  return pexp_sigma(inner);
}

std::map<std::vector<int>, long> type_a_bracket(int r, bool displayed_range) {
  std::map<std::vector<int>, long> bracket;
  bracket[std::vector<int>(r, 0)] += r;
  for (int a = 1; a <= r - 1; ++a) {
    for (int b = displayed_range ? a + 1 : a; b <= r - 1; ++b) {
      std::vector<int> plus(r, 0), minus(r, 0);
      for (int j = a; j <= b; ++j) {
        plus[j] = 1;
        minus[j] = -1;
      }
      bracket[plus] += 1;
      bracket[minus] += 1;
    }
  }
  return bracket;
}

}  // namespace

TruncatedSeries young_product_A(int r, int bound) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  return pexp_of_bracket(type_a_bracket(r, false), r, bound);
}

TruncatedSeries young_product_A_displayed(int r, int bound) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  return pexp_of_bracket(type_a_bracket(r, true), r, bound);
}

std::map<std::vector<int>, long> bracket_2x2() {
  // doubled exponents over t0..t3
  std::map<std::vector<int>, long> acc{{{0, 0, 0, 0}, 1}};
  auto times = [&](const std::map<std::vector<int>, long>& f) {
    std::map<std::vector<int>, long> out;
    for (const auto& [ea, ca] : acc) {
      for (const auto& [eb, cb] : f) {
        std::vector<int> e(4);
        for (int v = 0; v < 4; ++v) e[v] = ea[v] + eb[v];
        out[e] += ca * cb;
      }
    }
    acc.clear();
    for (const auto& [e, c] : out) {
      if (c != 0) acc.emplace(e, c);
    }
  };
  for (int j = 1; j <= 3; ++j) {
    std::vector<int> up(4, 0), down(4, 0);
    up[j] = 1;
    down[j] = -1;
    times({{up, 1}, {down, -1}});
  }
  times({{{0, -1, -1, -1}, 1}, {{0, 1, 1, 1}, -1}});
  std::map<std::vector<int>, long> out;
  for (const auto& [e, c] : acc) {
    std::vector<int> half(4);
    for (int v = 0; v < 4; ++v) {
      if (e[v] % 2 != 0) throw SeriesError("half-integer exponent survives in the 2x2 bracket");
      half[v] = e[v] / 2;
    }
    out[half] += c;
  }
  out[{0, 0, 0, 0}] += 2;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TruncatedSeries young_product_2x2(int bound) { return pexp_of_bracket(bracket_2x2(), 4, bound); }

TruncatedSeries quotient_form_2x2(int bound, const std::array<Monomial, 3>& numerator_s) {
  const Monomial t(std::vector<int>(4, 1));
  TruncatedSeries acc = pow(std_series(StdSeries::M, t, 4, bound), 4);
  for (const Monomial& s : numerator_s) acc = acc * std_series(StdSeries::Mtilde_st, t, 4, bound, {s, 1});
  for (const Monomial& s : {Monomial{0, 1, 0, 0}, Monomial{0, 0, 1, 0}, Monomial{0, 0, 0, 1}, Monomial{0, 1, 1, 1}})
    acc = acc * inv(std_series(StdSeries::Mtilde_st, t, 4, bound, {s, -1}));
  return acc;
}

OrbitReport s3_orbits(const ColourGroup& g, const std::vector<long>& w) {
  if (g.dimension() != 3 || !g.is_symmetric())
    throw std::invalid_argument("orbit analysis needs equal weights a = b = c");
  if (w.size() != static_cast<std::size_t>(g.order())) throw std::invalid_argument("weight vector has wrong length");
  long n = 0;
  for (long x : w) {
    if (x < 0) throw std::invalid_argument("negative weight");
    n += x;
  }
  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  OrbitReport rep;
  std::map<std::vector<Box>, int> orbits;  // canonical representative -> orbit size
  for (const PlanePartition& p : enum_plane_partitions(static_cast<int>(n))) {
    if (weight3d(g, p) != w) continue;
    ++rep.partitions;
    std::set<std::vector<Box>> images;
    for (const auto& pm : perms) {
      std::vector<Box> img;
      for (const Box& b : p.boxes()) img.push_back({b[pm[0]], b[pm[1]], b[pm[2]]});
      std::sort(img.begin(), img.end());
      images.insert(std::move(img));
    }
    const std::vector<Box> self = p.boxes();
    std::vector<Box> cyc;
    for (const Box& b : self) cyc.push_back({b[1], b[2], b[0]});
    std::sort(cyc.begin(), cyc.end());
    if (cyc == self) ++rep.fixed_by_a3;
    if (images.size() == 1) ++rep.fixed_by_s3;
    orbits.emplace(*images.begin(), static_cast<int>(images.size()));
  }
  for (const auto& [rep_boxes, size] : orbits) rep.orbit_sizes[size] += 1;
  return rep;
}

namespace {

long det3(const std::array<std::array<long, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

bool in_cone(const std::array<std::array<long, 3>, 3>& gens, const std::array<long, 3>& w) {
  // columns of G are the generators; solve G lambda = w by Cramer's rule
  std::array<std::array<long, 3>, 3> g{};
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) g[row][col] = gens[col][row];
  }
  const long d = det3(g);
  if (d == 0) throw std::invalid_argument("cone generators are linearly dependent");
  for (int col = 0; col < 3; ++col) {
    auto gi = g;
    for (int row = 0; row < 3; ++row) gi[row][col] = w[row];
    const long di = det3(gi);
    if ((d > 0 && di < 0) || (d < 0 && di > 0)) return false;
  }
  return true;
}

Report support_cone_report(const TruncatedSeries& reduced, const std::array<std::array<long, 3>, 3>& generators) {
  if (reduced.nvars() != 3) throw std::invalid_argument("support cone check needs 3 variables");
  Report rep;
  Check inside{"support_in_cone", true, {}, {}};
  long outside = 0;
  for (const auto& [m, c] : reduced.terms()) {
    if (!in_cone(generators, {m.exps[0], m.exps[1], m.exps[2]})) {
      if (!inside.first_discrepancy) inside.first_discrepancy = m.to_string();
      ++outside;
    }
  }
  inside.pass = outside == 0;
  inside.detail = std::to_string(reduced.size()) + " weights, " + std::to_string(outside) + " outside";
  rep.add(inside);
  if (!reduced.is_zero()) {
    Check gens{"generators_coefficient_one", true, {}, {}};
    for (const auto& gvec : generators) {
      const Monomial m{static_cast<int>(gvec[0]), static_cast<int>(gvec[1]), static_cast<int>(gvec[2])};
      if (m.degree() > reduced.bound()) continue;
      if (reduced.coeff(m) != 1 && gens.pass) {
        gens.pass = false;
        gens.first_discrepancy = m.to_string() + " = " + reduced.coeff(m).get_str();
      }
    }
    rep.add(gens);
  }
  return rep;
}

}  // namespace orbifold
