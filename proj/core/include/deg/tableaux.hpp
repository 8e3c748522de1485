#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "deg/shapes.hpp"

namespace deg {

/// Descent signature: a word over {+1,-1}, printed like "+-++".
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int8_t> signs);
  static Signature parse(const std::string& text);

  int length() const { return static_cast<int>(signs_.size()); }
  int8_t operator[](int i) const { return signs_[i - 1]; }  // 1-based, like sigma_i
  const std::vector<int8_t>& signs() const { return signs_; }
  std::vector<int> descent_set() const;  // { i : sigma_i = -1 }
  /// Composition of length()+1 formed by the runs of +1's.
  Composition alpha() const;
  Signature negated() const;
  Signature truncated(int new_length) const;
  std::string str() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<int8_t> signs_;
};

struct TupleCell {
  int comp = 0;  // 0-based component index
  Cell cell;
  friend auto operator<=>(const TupleCell&, const TupleCell&) = default;
};

/// Shifted content of a cell in component i of a k-tuple: k*content + i.
long shifted_content(Cell c, int comp_index, int k);

inline constexpr int kDefaultEnumerationBound = 14;

/// Immutable cell geometry of a (possibly tuple) shape: the cells in content
/// reading order together with their shifted contents and row/column
/// predecessor indices. Fillings share one layout per shape.
class ShapeLayout {
 public:
  ShapeLayout(TupleShape shape, bool tuple_form);

  static std::shared_ptr<const ShapeLayout> of(const SkewShape& s);
  static std::shared_ptr<const ShapeLayout> of(const TupleShape& s);

  const TupleShape& shape() const { return shape_; }
  bool tuple_form() const { return tuple_form_; }
  int size() const { return static_cast<int>(cells_.size()); }
  int k() const { return shape_.k(); }
  const std::vector<TupleCell>& cells() const { return cells_; }
  long shifted_content_at(int index) const { return shifted_[index]; }
  int left_of(int index) const { return left_[index]; }   // -1 if none
  int below_of(int index) const { return below_[index]; }  // -1 if none
  int index_of(const TupleCell& c) const;                  // -1 if absent

  bool word_is_standard(const std::vector<int>& word) const;

 private:
  TupleShape shape_;
  bool tuple_form_;
  std::vector<TupleCell> cells_;
  std::vector<long> shifted_;
  std::vector<int> left_, below_;
};

using LayoutPtr = std::shared_ptr<const ShapeLayout>;

/// A standard filling: bijection from the cells onto {1,...,n}, strictly
/// increasing along rows and columns of every component. Entries are stored
/// in content reading order, so `word` is the content reading word itself.
struct StandardFilling {
  LayoutPtr layout;
  std::vector<int> word;

  int size() const { return static_cast<int>(word.size()); }
  int entry_at(int cell_index) const { return word[cell_index]; }
  std::string str() const;
  static StandardFilling parse(const std::string& text);

  friend bool operator==(const StandardFilling& a, const StandardFilling& b) {
    return a.layout->shape() == b.layout->shape() && a.word == b.word;
  }
};

/// Semistandard filling: weakly increasing rows, strictly increasing columns.
struct SemistandardFilling {
  LayoutPtr layout;
  std::vector<int> entries;  // by content reading position

  int max_entry() const;
  std::vector<int> weight(int m) const;  // multiplicities of 1..m
  std::string str() const;
};

const std::vector<int>& content_reading_word(const StandardFilling& t);
Signature descent_signature(const StandardFilling& t);

/// Row i filled with consecutive numbers, bottom row first.
StandardFilling superstandard(const Partition& p);
/// Columns filled bottom to top, leftmost column first.
StandardFilling substandard(const Partition& p);

/// The superstandard descent signature +^{p1-1} - +^{p2-1} - ... directly.
Signature superstandard_signature(const Partition& p);

/// Transpose of a straight-shape standard filling.
StandardFilling conjugate(const StandardFilling& t);

/// All standard fillings in lexicographic order of their content reading
/// words. Throws when the shape has more than max_cells cells.
std::vector<StandardFilling> enumerate_standard(const SkewShape& s,
                                                int max_cells = kDefaultEnumerationBound);
std::vector<StandardFilling> enumerate_standard(const TupleShape& s,
                                                int max_cells = kDefaultEnumerationBound);

/// Streaming enumeration (unsorted); the callback owns nothing.
void for_each_standard(const LayoutPtr& layout,
                       const std::function<void(const std::vector<int>&)>& fn);

std::vector<SemistandardFilling> enumerate_semistandard(const SkewShape& s, int max_entry);
std::vector<SemistandardFilling> enumerate_semistandard(const TupleShape& s, int max_entry);

}  // namespace deg
