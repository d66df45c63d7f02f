#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbifold/cyclotomic.hpp"
#include "orbifold/mpoly.hpp"
#include "orbifold/report.hpp"

namespace orbifold {

/// Conjugacy classes of the binary dihedral group of order 4n, n = r - 2, with
/// generators A (order 2n) and B (B^2 = A^n). Values live in Z[zeta_{4n}].
struct BDClass {
  std::string name;  // "I", "-I", "A^k", "B", "AB"
  int size = 1;
  bool reflection = false;  // of the form A^k B
  int power = 0;            // k
};

struct BDCharacterTable {
  int r = 4;
  int n = 2;
  int order = 8;
  std::vector<BDClass> classes;
  std::vector<int> dims;                         // rho_0 .. rho_r
  std::vector<std::vector<Cyclotomic>> values;  // values[label][class]

  /// Class inner product (1/|G|) sum size * chi * conj(psi); must be a rational integer.
  Integer inner(const std::vector<Cyclotomic>& chi, const std::vector<Cyclotomic>& psi) const;
  std::vector<Cyclotomic> product(const std::vector<Cyclotomic>& chi, const std::vector<Cyclotomic>& psi) const;
  /// Multiplicity of every irreducible in a class function.
  std::vector<Integer> decompose(const std::vector<Cyclotomic>& chi) const;
};

BDCharacterTable bd_character_table(int r);

/// Orthonormality, sum of squared dimensions and the tensor-with-rho_2 labelling rule.
Report character_table_checks(const BDCharacterTable& table);

/// Character of span{x^i y^j, x^j y^i} (1-dimensional when i = j).
std::vector<Cyclotomic> monomial_module_character(const BDCharacterTable& table, int i, int j);

enum class CellKind { Diagonal, Full, Split };
enum class Half { Whole, LowerLeft, UpperRight };

/// Position (row i, offset d = j - i) of the octant with its labels. Diagonal and
/// Full cells have a single label; Split cells carry one label per half.
struct OctantCell {
  int row = 0;
  int offset = 0;
  CellKind kind = CellKind::Full;
  int label = 0;
  int lower_left = 0;
  int upper_right = 0;

  std::vector<Half> units() const;
  int label_of(Half h) const;
};

/// Decomposes M_{i,i+d} by character inner products; split halves are assigned by
/// the eigenvalue of B on x^i y^j + c x^j y^i for the lower-left half.
OctantCell classify_cell(const BDCharacterTable& table, int row, int offset);

/// Cell classification, precomputed over one period (offset mod 2n, row parity).
class OctantLayout {
 public:
  explicit OctantLayout(int r);
  int r() const { return r_; }
  const BDCharacterTable& table() const { return table_; }
  OctantCell cell(int row, int offset) const;

  /// Versioned golden text for rows < rows, offsets < offsets.
  std::string golden_text(int rows, int offsets) const;

 private:
  int r_;
  BDCharacterTable table_;
  // indexed by row parity; diagonal_ at offset 0, period_ by offset mod 2n otherwise
  std::array<OctantCell, 2> diagonal_;
  std::array<std::vector<OctantCell>, 2> period_;
};

struct DrUnit {
  int row = 0;
  int offset = 0;
  Half half = Half::Whole;

  friend auto operator<=>(const DrUnit&, const DrUnit&) = default;
};

/// Readings of the diagonal rule: the NE ray through the same half-position, or
/// additionally the box immediately above.
enum class Rule2Reading { DiagonalRay, RayAndAbove };

struct RuleSet {
  Rule2Reading rule2 = Rule2Reading::DiagonalRay;
  bool rule1_above = true;
  bool rule3 = true;
  bool rule4 = true;
};

/// Row i: offsets 0..length-1 fully present, plus optionally one half at `length`.
struct DrRow {
  int length = 0;
  Half half = Half::Whole;  // Whole means no extra half

  friend bool operator==(const DrRow&, const DrRow&) = default;
};

struct DrPartition {
  std::vector<DrRow> rows;

  std::set<DrUnit> units(const OctantLayout& layout) const;
  std::vector<long> weight(const OctantLayout& layout) const;
};

/// Checks the four rules literally on an arbitrary finite set of units.
bool satisfies_rules(const OctantLayout& layout, const std::set<DrUnit>& units, const RuleSet& rules = {});

std::vector<long> unit_weight(const OctantLayout& layout, const std::set<DrUnit>& units);

/// Exhaustive row-by-row enumeration of D_r-partitions of total weight <= max_weight.
std::vector<DrPartition> enum_dr_partitions(const OctantLayout& layout, int max_weight, const RuleSet& rules = {});

/// Weight table only; no partitions materialised.
TruncatedSeries z_dr(const OctantLayout& layout, int bound, const RuleSet& rules = {});
TruncatedSeries z_dr(int r, int bound);

TruncatedSeries theta_sum_D(int r, int bound);

/// t = t_0 t_1 t_{r-1} t_r prod_{j=2}^{r-2} t_j^2.
Monomial dr_t_monomial(int r);

Report verify_dr(int r, int bound, const RuleSet& rules = {});

}  // namespace orbifold
