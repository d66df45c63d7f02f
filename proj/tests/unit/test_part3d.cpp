#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <unistd.h>

#include "orbifold/part3d.hpp"
#include "series_helpers.hpp"

using namespace orbifold;
namespace fs = std::filesystem;

namespace {

ColourGroup mu(int r, std::vector<int> w) { return ColourGroup::cyclic(r, std::move(w)); }
ColourGroup klein() { return ColourGroup({2, 2}, {{1, 0}, {0, 1}, {1, 1}}); }

// plane partitions of n by adding one box to each of size n - 1, deduplicated
std::set<std::vector<Box>> grow_and_dedup(int n) {
  std::set<std::vector<Box>> level{{}};
  for (int size = 1; size <= n; ++size) {
    std::set<std::vector<Box>> next;
    for (const auto& boxes : level) {
      std::set<Box> have(boxes.begin(), boxes.end());
      for (int i = 0; i <= size; ++i)
        for (int j = 0; j <= size; ++j)
          for (int k = 0; k <= size; ++k) {
            const Box b{i, j, k};
            if (have.count(b)) continue;
            if ((i && !have.count({i - 1, j, k})) || (j && !have.count({i, j - 1, k})) ||
                (k && !have.count({i, j, k - 1})))
              continue;
            std::vector<Box> grown(boxes);
            grown.push_back(b);
            std::sort(grown.begin(), grown.end());
            next.insert(grown);
          }
    }
    level = std::move(next);
  }
  return level;
}

TruncatedSeries brute_z3d(const ColourGroup& g, int bound) {
  TruncatedSeries s(g.order(), bound);
  for (int n = 0; n <= bound; ++n) {
    for (const PlanePartition& p : enum_plane_partitions(n)) {
      std::vector<int> w(g.order(), 0);
      for (const Box& b : p.boxes()) w[g.colour(b[0], b[1], b[2])] += 1;
      s.add_term(Monomial(w), 1);
    }
  }
  return s;
}

std::vector<long> macmahon(int bound) {
  return testing_helpers::coefficients(std_series(StdSeries::M, Monomial{1}, 1, bound));
}

Monomial all_ones(int r) { return Monomial(std::vector<int>(r, 1)); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("orbifold-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("plane partition basics") {
  const PlanePartition p({{2, 1}, {1}});
  CHECK(p.size() == 4);
  CHECK(PlanePartition::from_boxes(p.boxes()) == p);
  CHECK(is_plane_partition(p.boxes()));
  CHECK_FALSE(is_plane_partition({{0, 0, 1}}));
  CHECK(is_plane_partition({}));
  CHECK_THROWS(PlanePartition({{1, 2}}));
  CHECK_THROWS(PlanePartition::from_boxes({{1, 0, 0}}));
}

TEST_CASE("enumeration counts") {
  CHECK(enum_plane_partitions(0).size() == 1);
  CHECK(enum_plane_partitions(2).size() == 3);
  CHECK(enum_plane_partitions(4).size() == 13);
  const auto m = macmahon(14);
  for (int n = 0; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(enum_plane_partitions(n).size()) == m[n]);
    if (n <= 9) CHECK(m[n] == testing_helpers::count_plane_partitions(n));
  }
}

TEST_CASE("enumeration is duplicate-free against grow-and-dedup") {
  for (int n = 0; n <= 10; ++n) {
    std::set<std::vector<Box>> dfs;
    const auto all = enum_plane_partitions(n);
    for (const PlanePartition& p : all) {
      CHECK(is_plane_partition(p.boxes()));
      dfs.insert(p.boxes());
    }
    CHECK(dfs.size() == all.size());
    CHECK(dfs == grow_and_dedup(n));
  }
}

TEST_CASE("z3d examples") {
  const TruncatedSeries z = z3d(mu(3, {1, 1, 1}), 10);
  CHECK(z.coeff({1, 1, 1}) == 3);
  CHECK(z.coeff({1, 1, 0}) == 3);
  CHECK(specialize(z, {Monomial{1}, Monomial{1}, Monomial{1}}, 10) ==
        std_series(StdSeries::M, Monomial{1}, 1, 10));
}

TEST_CASE("z3d agrees with a direct colour count") {
  for (const ColourGroup& g : builtin_3d_groups()) {
    CAPTURE(g.spec());
    CHECK(z3d(g, 8) == brute_z3d(g, 8));
  }
}

TEST_CASE("coloured counts sum to MacMahon numbers and all-colours-once gives r") {
  const int bound = 12;
  const auto m = macmahon(bound);
  for (const ColourGroup& g : builtin_3d_groups()) {
    CAPTURE(g.spec());
    const TruncatedSeries z = z3d(g, bound);
    std::vector<long> per_degree(bound + 1, 0);
    for (const auto& [mono, c] : z.terms()) {
      CHECK(c > 0);
      per_degree[mono.degree()] += c.get_si();
    }
    CHECK(per_degree == m);
    if (g.order() <= bound) CHECK(z.coeff(all_ones(g.order())) == g.order());
  }
}

TEST_CASE("symmetric colourings are invariant under permuting coordinates") {
  const ColourGroup g = mu(3, {1, 1, 1});
  for (int n = 0; n <= 7; ++n) {
    for (const PlanePartition& p : enum_plane_partitions(n)) {
      const auto w = weight3d(g, p);
      std::array<int, 3> perm{0, 1, 2};
      do {
        std::vector<Box> moved;
        for (const Box& b : p.boxes()) moved.push_back({b[perm[0]], b[perm[1]], b[perm[2]]});
        CHECK(weight3d(g, PlanePartition::from_boxes(moved)) == w);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("sharded enumeration is deterministic") {
  for (const ColourGroup& g : {mu(3, {1, 1, 1}), klein(), mu(6, {1, 2, 3})}) {
    const TruncatedSeries one = z3d(g, 14, {1});
    CHECK(z3d(g, 14, {4}) == one);
    CHECK(z3d(g, 14, {7}) == one);
  }
  CHECK_THROWS(z3d(mu(3, {1, 1, 1}), 5, {0}));
  CHECK_THROWS(z3d(mu(3, {1, 2}), 5));
}

TEST_CASE("signed series") {
  const int bound = 14;
  const TruncatedSeries s = z3d_signed(mu(1, {0, 0, 0}), bound);
  const auto m = macmahon(bound);
  TruncatedSeries want(1, bound);
  for (int n = 0; n <= bound; ++n) want.add_term({n}, (n % 2 ? -1 : 1) * m[n]);
  CHECK(s == want);
  const TruncatedSeries s3 = z3d_signed(mu(3, {1, 1, 1}), 6);
  CHECK(s3.constant_term() == 1);
  CHECK(s3.coeff({1, 1, 1}) == -3);
}

TEST_CASE("reduced series values") {
  const TruncatedSeries red = reduce3d(z3d(mu(3, {1, 1, 1}), 9), 3, 9);
  CHECK(red.coeff({3, 3, 3}) == 44);
  CHECK(red.coeff({2, 3, 3}) == 46);
  CHECK(red.coeff({1, 2, 2}) == 9);
  CHECK(red.coeff({1, 1, 0}) == 3);
  // reducing then multiplying back recovers z
  const TruncatedSeries z = z3d(klein(), 10);
  const Monomial t = all_ones(4);
  CHECK(mul(reduce3d(z, 4, 10), pow(std_series(StdSeries::M, t, 4, 10), 4)) == z);
}

TEST_CASE("conjecture report") {
  const Report rep = verify_conjecture(klein(), z3d(klein(), 10));
  CHECK(rep.all_pass());
  const Check* once = rep.find("all_colours_once");
  REQUIRE(once != nullptr);
  CHECK(once->pass);
  CHECK(verify_conjecture(mu(4, {1, 1, 2}), z3d(mu(4, {1, 1, 2}), 12)).all_pass());
}

TEST_CASE("type A product formula") {
  CHECK(young_product_A(1, 12) == std_series(StdSeries::M, Monomial{1}, 1, 12));
  CHECK(young_product_A(2, 12) == z3d(mu(2, {1, 1, 0}), 12));
  for (int bound = 6; bound <= 11; ++bound) {
    CAPTURE(bound);
    CHECK(young_product_A(3, bound) == z3d(mu(3, {1, 2, 0}), bound));
    CHECK(young_product_2x2(bound) == z3d(klein(), bound));
  }
  // the displayed index range drops the roots at r = 2
  CHECK_FALSE(young_product_A_displayed(2, 8) == z3d(mu(2, {1, 1, 0}), 8));
}

TEST_CASE("Klein four product formula") {
  const auto bracket = bracket_2x2();
  CHECK(bracket.size() == 15);
  long summands = 0;
  for (const auto& [e, c] : bracket) summands += std::abs(c);
  CHECK(summands == 18);  // constant 2 plus sixteen unit products, two of them constant
  CHECK(bracket.at({0, 0, 0, 0}) == 4);

  const TruncatedSeries y = young_product_2x2(10);
  CHECK(y.constant_term() == 1);
  CHECK(y.coeff({1, 1, 1, 1}) == 4);
  CHECK(y == z3d(klein(), 10));

  const Monomial t12{0, 1, 1, 0}, t13{0, 1, 0, 1}, t23{0, 0, 1, 1};
  CHECK(quotient_form_2x2(10, {t12, t13, t23}) == y);
  CHECK_FALSE(quotient_form_2x2(10, {t12, t12, t12}) == y);
}

TEST_CASE("orbits under permuting coordinates") {
  const ColourGroup g = mu(3, {1, 1, 1});
  const OrbitReport big = s3_orbits(g, {3, 3, 3});
  CHECK(big.partitions == 108);
  CHECK(big.fixed_by_a3 == 0);
  CHECK(big.fixed_by_s3 == 0);
  long total = 0;
  for (const auto& [size, count] : big.orbit_sizes) {
    CHECK((size == 3 || size == 6));
    total += size * count;
  }
  CHECK(total == 108);

  const OrbitReport single = s3_orbits(g, {1, 0, 0});
  CHECK(single.partitions == 1);
  CHECK(single.orbit_sizes == std::map<int, long>{{1, 1}});
  const OrbitReport pair = s3_orbits(g, {1, 1, 0});
  CHECK(pair.partitions == 3);
  CHECK(pair.orbit_sizes == std::map<int, long>{{3, 1}});

  CHECK_THROWS(s3_orbits(mu(3, {1, 2, 0}), {1, 1, 0}));
}

TEST_CASE("support cone") {
  const std::array<std::array<long, 3>, 3> gens{{{1, 0, 0}, {1, 3, 0}, {1, 3, 6}}};
  CHECK(in_cone(gens, {1, 0, 0}));
  CHECK(in_cone(gens, {3, 6, 6}));
  CHECK_FALSE(in_cone(gens, {0, 1, 0}));
  CHECK(in_cone(gens, {1, 1, 1}));
  CHECK_FALSE(in_cone(gens, {0, 0, 1}));

  const TruncatedSeries red = reduce3d(z3d(mu(3, {1, 1, 1}), 12), 3, 12);
  CHECK(support_cone_report(red).all_pass());
  CHECK(support_cone_report(TruncatedSeries(3, 12)).find("support_in_cone")->pass);

  TruncatedSeries bad = red;
  bad.add_term({0, 1, 0}, 1);
  const Check* c = support_cone_report(bad).find("support_in_cone");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
}

TEST_CASE("cache round-trip and header validation") {
  TempDir dir;
  const ColourGroup g = mu(3, {1, 1, 1});
  bool hit = true;
  const TruncatedSeries cold = z3d_cached(g, 10, dir.path, {}, &hit);
  CHECK_FALSE(hit);
  const fs::path file = cache_file(dir.path, g, 10);
  CHECK(fs::exists(file));
  CHECK(file.filename().string().find("b10") != std::string::npos);
  const TruncatedSeries warm = z3d_cached(g, 10, dir.path, {}, &hit);
  CHECK(hit);
  CHECK(warm == cold);
  CHECK(cold == z3d(g, 10));

  // a cache for another bound or group is not reused
  CHECK_FALSE(read_cache(file, g, 9).has_value());
  CHECK_FALSE(read_cache(file, mu(3, {1, 2, 0}), 10).has_value());
  CHECK_FALSE(read_cache(dir.path / "missing.ppcache", g, 10).has_value());

  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == cache_header(g, 10));
  CHECK(header == "ppcache v1 cyclic:3:1,1,1 10");

  {
    std::ofstream corrupt(file, std::ios::trunc);
    corrupt << "ppcache v0 cyclic:3:1,1,1 10\n{}\n";
  }
  CHECK_FALSE(read_cache(file, g, 10).has_value());
  z3d_cached(g, 10, dir.path, {}, &hit);
  CHECK_FALSE(hit);
  CHECK(read_cache(file, g, 10).has_value());
}
