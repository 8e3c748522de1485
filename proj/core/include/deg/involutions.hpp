#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deg/shapes.hpp"
#include "deg/tableaux.hpp"

namespace deg {

class QSymExpansion;
struct SchurExpansion;

/// Haiman's elementary dual equivalence: fixes w when i lies between i-1 and
/// i+1, otherwise swaps i with whichever of i+-1 sits further away.
std::vector<int> elementary_d(int i, std::vector<int> w);

/// Twisted elementary dual equivalence: cyclically rotates the values
/// i-1,i,i+1 in their positions so that i ends up on the other side of both.
std::vector<int> twisted_d(int i, std::vector<int> w);

/// Applies elementary_d to the content reading word and writes the result
/// back into the same cells. Only straight and skew shapes; the result is
/// always standard (asserted).
StandardFilling d_on_filling(int i, const StandardFilling& t);

enum class DBranch { Fixed, Haiman, Twisted };

/// Which of d / twisted d the combined involution uses on this filling,
/// or Fixed when i lies between i-1 and i+1.
DBranch combined_D_branch(int i, const StandardFilling& t);

/// The combined involution on standard tuple fillings: Haiman's move when the
/// three entries are spread over shifted-content distance > k, the twisted
/// move otherwise. Preserves diagonal descents and diagonal inversions.
StandardFilling combined_D(int i, const StandardFilling& t);

struct EquivalenceClass {
  std::vector<int> members;  // element indices, sorted
  int window_lo = 0, window_hi = 0;
};

/// A finite set with a descent map and one involution per color in [2, n-1].
/// Elements are opaque indices with printable labels.
class InvolutionFamily {
 public:
  InvolutionFamily(int n, std::vector<std::vector<int>> descents,
                   std::vector<std::vector<int>> involutions,
                   std::vector<std::string> labels = {},
                   std::optional<std::vector<long>> stat = std::nullopt);

  /// SYT of a straight or skew shape under the d_i involutions.
  static InvolutionFamily standard_tableaux(const SkewShape& shape,
                                            int max_cells = kDefaultEnumerationBound);
  /// Standard tuple fillings under the combined D_i, with the diagonal
  /// inversion number as statistic.
  static InvolutionFamily tuple_tableaux(const TupleShape& shape,
                                         int max_cells = kDefaultEnumerationBound);
  /// All permutations of [n] under d (twisted=false) or twisted d.
  static InvolutionFamily words(int n, bool twisted);

  int n() const { return n_; }
  int count() const { return static_cast<int>(descents_.size()); }
  int apply(int color, int x) const;
  const std::vector<int>& descents(int x) const { return descents_[x]; }
  Composition alpha(int x) const;
  const std::string& label(int x) const { return labels_[x]; }
  bool has_stat() const { return stat_.has_value(); }
  long stat(int x) const;

 private:
  int n_;
  std::vector<std::vector<int>> descents_;
  std::vector<std::vector<int>> phi_;  // phi_[c-2][x]
  std::vector<std::string> labels_;
  std::optional<std::vector<long>> stat_;
};

/// Orbit of x under the involutions with colors in [lo, hi].
EquivalenceClass class_of(const InvolutionFamily& fam, int x, int lo, int hi);

struct CheckFailure {
  int window_lo = 0, window_hi = 0;
  std::vector<int> class_members;
  std::string detail;
};

struct DualEquivalenceReport {
  bool pass = true;
  std::vector<CheckFailure> failures;
  std::string str(const InvolutionFamily& fam) const;
};

/// Verifies the dual equivalence conditions: every restricted class over a
/// window of one to four consecutive colors has a single Schur function as
/// its restricted-and-shifted quasisymmetric sum, and involutions three or
/// more colors apart commute as maps.
DualEquivalenceReport check_strong_dual_equivalence(const InvolutionFamily& fam);

/// Same windows, but multi-color windows only need Schur positivity.
DualEquivalenceReport check_weak_dual_equivalence(const InvolutionFamily& fam);

/// The unique class member whose descent composition dominates its whole
/// class, paired with that composition as a partition. Throws when a class
/// has no unique dominance maximum or it is not a partition (the family is
/// then not a dual equivalence).
std::vector<std::pair<int, Partition>> dominant_elements(const InvolutionFamily& fam);

/// The alpha-minimal member per class, paired with the conjugate of the
/// complemented descent composition.
std::vector<std::pair<int, Partition>> subordinate_elements(const InvolutionFamily& fam);

/// Sum of q^stat(T) s_{alpha(T)} over dominant elements. Requires the
/// statistic, when present, to be constant on classes.
SchurExpansion schur_expansion_from_DE(const InvolutionFamily& fam);

/// Rectifies x by replaying some involution word from its class dominant,
/// starting at the superstandard tableau; the result is word-independent,
/// which verify_rectification checks edge by edge.
StandardFilling implicit_rectification(const InvolutionFamily& fam, int x);

/// Rectification images for every element, verified against every edge of
/// the class graph (throws on any path-dependence).
std::vector<StandardFilling> rectification_map(const InvolutionFamily& fam);

}  // namespace deg
