#pragma once

#include <compare>
#include <string>
#include <vector>

namespace deg {

/// A cell of a Young diagram. Coordinates are (column, row), both 1-indexed,
/// in French orientation (row 1 at the bottom), so content(c) = col - row
/// indexes the diagonal of the cell.
struct Cell {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline int content(Cell c) { return c.col - c.row; }

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is legal and prints as "()".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Accepts "3,2", "(3,2)", "()" and "".
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// 1-based part access; zero past the end.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }
  bool contains(const Partition& inner) const;
  Partition conjugate() const;
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Orders partitions by descending lexicographic order on the part lists,
/// which is a linear extension of dominance order for partitions of equal n.
struct DescLexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts() > b.parts();
  }
};

/// All partitions of n, in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Composition: positive parts, arbitrary order.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool is_partition() const;
  Partition to_partition() const;  // throws unless weakly decreasing
  std::string str() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

enum class Dominance { Equal, Greater, Less, Incomparable };

/// Dominance comparison of two compositions of the same total via prefix
/// sums, the shorter padded with zeros. Throws if the totals differ.
Dominance dominance_compare(const Composition& a, const Composition& b);
Dominance dominance_compare(const Partition& a, const Partition& b);

/// True when a >= b in dominance order.
bool dominates(const Composition& a, const Composition& b);

/// The composition alpha of n whose partial sums are the elements of the
/// descent set D (subset of [n-1], strictly increasing) followed by n.
Composition composition_from_descent_set(const std::vector<int>& descents, int n);

/// Inverse of the above: the proper partial sums of alpha.
std::vector<int> descent_set_of_composition(const Composition& alpha);

/// Skew diagram outer/inner with anchored coordinates. Two skew shapes with
/// different (outer, inner) pairs are distinct even when their cell sets are
/// translates of one another.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

  /// Accepts "5,4,4,1/3,2,2", "(2,2,1)/(1)", "3,2", "()".
  static SkewShape parse(const std::string& text);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool straight() const { return inner_.empty(); }
  bool has_cell(Cell c) const;
  /// Cells in content reading order: increasing content, ties bottom-up.
  std::vector<Cell> cells() const;
  std::string str() const;

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Ordered tuple of skew shapes; empty components are allowed.
class TupleShape {
 public:
  TupleShape() = default;
  explicit TupleShape(std::vector<SkewShape> components);

  /// Accepts "((3,2),(2,1),(),(2,2,1)/(1))".
  static TupleShape parse(const std::string& text);

  const std::vector<SkewShape>& components() const { return components_; }
  int k() const { return static_cast<int>(components_.size()); }
  int total_size() const;
  std::string str() const;

  friend auto operator<=>(const TupleShape&, const TupleShape&) = default;

 private:
  std::vector<SkewShape> components_;
};

}  // namespace deg
