#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbifold/groups.hpp"
#include "orbifold/mpoly.hpp"
#include "orbifold/report.hpp"

namespace orbifold {

using Box = std::array<int, 3>;

/// Plane partition stored as a height map: heights[i][j] boxes stacked over (i, j).
/// Rows and columns are weakly decreasing; no trailing zeros are stored.
struct PlanePartition {
  std::vector<std::vector<int>> heights;

  PlanePartition() = default;
  explicit PlanePartition(std::vector<std::vector<int>> h);

  int size() const;
  /// Boxes (i, j, k) with k < heights[i][j], sorted.
  std::vector<Box> boxes() const;
  static PlanePartition from_boxes(const std::vector<Box>& boxes);

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
  friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;
};

/// Downward closure check on an arbitrary box set.
bool is_plane_partition(const std::vector<Box>& boxes);

std::vector<long> weight3d(const ColourGroup& g, const PlanePartition& p);

/// All plane partitions of n, each exactly once (canonical column-filling order).
std::vector<PlanePartition> enum_plane_partitions(int n);

struct EnumOptions {
  int shards = 1;
};

/// Coloured generating function sum_{|alpha| <= bound} t^{w(alpha)}.
TruncatedSeries z3d(const ColourGroup& g, int bound, const EnumOptions& opt = {});

/// Same series, read from / written to `cache_dir` when given. `hit` reports a cache hit.
TruncatedSeries z3d_cached(const ColourGroup& g, int bound, const std::optional<std::filesystem::path>& cache_dir,
                           const EnumOptions& opt = {}, bool* hit = nullptr);

std::filesystem::path cache_file(const std::filesystem::path& dir, const ColourGroup& g, int bound);
std::string cache_header(const ColourGroup& g, int bound);
/// Empty when the file is missing or its header does not match exactly.
std::optional<TruncatedSeries> read_cache(const std::filesystem::path& file, const ColourGroup& g, int bound);
void write_cache(const std::filesystem::path& file, const ColourGroup& g, int bound, const TruncatedSeries& s);

/// Each weight d carries (-1)^{d_0 + (d,d)} for the McKay quiver's Euler form.
TruncatedSeries apply_dt_sign(const ColourGroup& g, const TruncatedSeries& z);
TruncatedSeries z3d_signed(const ColourGroup& g, int bound, const EnumOptions& opt = {});

/// z * M(t)^{-r} with t the product of all r variables.
TruncatedSeries reduce3d(const TruncatedSeries& z, int r, int bound);

/// Positivity of the reduced series and the all-colours-once count.
Report verify_conjecture(const ColourGroup& g, const TruncatedSeries& z);

/// Root-system product PExp( t/(1-t)^2 (r + sum over positive roots of x^a + x^-a) ).
TruncatedSeries young_product_A(int r, int bound);
/// Same bracket with the index range 0 < a < b < r.
TruncatedSeries young_product_A_displayed(int r, int bound);

/// PExp( t/(1-t)^2 (2 + prod_j (t_j^1/2 - t_j^-1/2) ((t1 t2 t3)^-1/2 - (t1 t2 t3)^1/2)) ).
TruncatedSeries young_product_2x2(int bound);
/// Bracket of young_product_2x2 after clearing half powers: Laurent monomial -> coefficient.
std::map<std::vector<int>, long> bracket_2x2();
/// M(t)^4 M~(s1,t) M~(s2,t) M~(s3,t) / (M~(-t1,t) M~(-t2,t) M~(-t3,t) M~(-t1t2t3,t)).
TruncatedSeries quotient_form_2x2(int bound, const std::array<Monomial, 3>& numerator_s);

struct OrbitReport {
  long partitions = 0;
  std::map<int, long> orbit_sizes;  // orbit size -> number of orbits
  long fixed_by_s3 = 0;
  long fixed_by_a3 = 0;
};

/// Plane partitions of colour weight w grouped under coordinate permutations.
/// Requires a = b = c.
OrbitReport s3_orbits(const ColourGroup& g, const std::vector<long>& w);

/// Membership of every weight in the cone spanned by three generators, plus
/// whether the generators appear with coefficient 1.
Report support_cone_report(const TruncatedSeries& reduced,
                           const std::array<std::array<long, 3>, 3>& generators = {{{1, 0, 0}, {1, 3, 0}, {1, 3, 6}}});

bool in_cone(const std::array<std::array<long, 3>, 3>& generators, const std::array<long, 3>& w);

}  // namespace orbifold
