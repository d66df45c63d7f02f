#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orbifold/mpoly.hpp"

namespace orbifold {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of Z_{n_1} x ... x Z_{n_k}, one residue per cyclic factor.
using GroupElement = std::vector<int>;

/// A finite abelian group G = Z_{n_1} x ... x Z_{n_k} acting diagonally on
/// C^d (d = 2 or 3) with weights a, b(, c) summing to the identity.
///
/// Elements are indexed in mixed-radix lexicographic order, so index 0 is the
/// identity and, for a cyclic group, index k is the residue k.
class ColourGroup {
 public:
  ColourGroup(std::vector<int> moduli, std::vector<GroupElement> weights);

  static ColourGroup cyclic(int r, std::vector<int> weights);

  const std::vector<int>& moduli() const { return moduli_; }
  const std::vector<GroupElement>& weights() const { return weights_; }
  int order() const { return order_; }
  int dimension() const { return static_cast<int>(weights_.size()); }
  bool is_cyclic() const { return moduli_.size() == 1; }

  int index_of(const GroupElement& g) const;
  GroupElement element(int index) const;
  int add(int x, int y) const { return add_table_[static_cast<std::size_t>(x) * order_ + y]; }
  int negate(int x) const;
  /// Index of the k-th weight (0 = a, 1 = b, 2 = c).
  int weight_index(int k) const { return weight_index_[k]; }

  /// Colour of the box with the given coordinates: index of sum_k coord_k * w_k.
  int colour(const std::vector<int>& box) const;
  int colour(int i, int j) const { return colour(std::vector<int>{i, j}); }
  int colour(int i, int j, int k) const { return colour(std::vector<int>{i, j, k}); }

  /// All three weights equal (the colouring is invariant under permuting axes).
  bool is_symmetric() const;

  /// Canonical spec string, e.g. "cyclic:3:1,1,1" or "product:2x2:(1,0),(0,1),(1,1)".
  std::string spec() const;

  friend bool operator==(const ColourGroup& a, const ColourGroup& b) {
    return a.moduli_ == b.moduli_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<int> moduli_;
  std::vector<GroupElement> weights_;
  int order_ = 1;
  std::vector<int> add_table_;
  std::vector<int> weight_index_;
};

/// Parses "cyclic:r:a,b[,c]" or "product:n1xn2:(a1,a2),(b1,b2)[,(c1,c2)]".
/// Rejects malformed strings and weights that do not sum to the identity.
ColourGroup parse_group_spec(const std::string& spec);

/// The groups the verification suites run against.
std::vector<ColourGroup> builtin_3d_groups();

struct Arrow {
  char label = 'x';  // 'x', 'y' or 'z'
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct McKayQuiver {
  int vertices = 0;
  std::vector<Arrow> arrows;

  /// Number of arrows i -> j.
  int arrow_count(int i, int j) const;
};

/// Dimension vector indexed by colour.
using DimVector = std::vector<long>;

/// One cyclic word of the superpotential; `path` is in composition order
/// (first arrow applied first) and `sign` is +1 or -1.
struct PotentialTerm {
  std::array<Arrow, 3> path;
  int sign = 1;

  bool is_cycle() const;
};

McKayQuiver mckay_quiver(const ColourGroup& g);

/// (d, e) = sum_i d_i e_i - sum_{a: i -> j} d_i e_j.
long euler_form(const McKayQuiver& q, const DimVector& d, const DimVector& e);

/// (d_0 + (d, d)) mod 2; the DT sign is (-1)^result.
int sign_exponent(const McKayQuiver& q, const DimVector& d);

/// The 2r terms z_{i+a+b} y_{i+a} x_i - y_{i+a+c} z_{i+a} x_i.
std::vector<PotentialTerm> potential(const ColourGroup& g);

/// Matrix B with (d, e) = d^T B e for the quiver's Euler form.
std::vector<std::vector<long>> euler_matrix(const McKayQuiver& q);

}  // namespace orbifold
