#pragma once

#include <string>
#include <vector>

#include "deg/graph.hpp"
#include "deg/involutions.hpp"
#include "deg/shapes.hpp"
#include "deg/symfunc.hpp"
#include "deg/tableaux.hpp"

namespace deg {

/// Diagonal inversion and descent data of a standard tuple filling. Pairs
/// name cells by the entries they hold, (x, y) with the shifted content of x
/// smaller: inversion pairs have gap strictly between 0 and k, descent pairs
/// gap exactly k, and in both the x entry is the larger one.
struct DiagonalData {
  std::vector<std::pair<int, int>> dinv_pairs;
  std::vector<std::pair<int, int>> ddes_pairs;
  long dinv = 0;
};

DiagonalData diagonal_data(const StandardFilling& t);

/// LLT polynomial of the tuple shape in the fundamental quasisymmetric
/// basis, q-exponents from dinv.
QSymExpansion llt_polynomial(const TupleShape& mu, int max_cells = kDefaultEnumerationBound);

struct DGraphData {
  SignedColoredGraph graph;
  std::vector<StandardFilling> fillings;  // vertex order: reading-word lex
};

/// Signed colored graph on standard tuple fillings with combined D edges and
/// the dinv statistic.
DGraphData d_graph_data(const TupleShape& mu, int max_cells = kDefaultEnumerationBound);
SignedColoredGraph d_graph(const TupleShape& mu, int max_cells = kDefaultEnumerationBound);

struct TwoTupleReport {
  bool pass = false;
  DualEquivalenceReport strong;
  AxiomReport axioms;
  SchurExpansion ktilde;
};

/// For tuples of at most two shapes: runs the strong dual equivalence check
/// and all six graph axioms, then reads off the Schur coefficients.
TwoTupleReport verify_two_tuple(const TupleShape& mu, int max_cells = kDefaultEnumerationBound);

struct ComponentVerdict {
  std::vector<int> vertices;
  long dinv = 0;
  bool pass = false;
  SchurExpansion expansion;
};

struct ConjectureReport {
  TupleShape shape;
  bool pass = false;
  std::vector<ComponentVerdict> components;
};

/// Checks that every D-equivalence class of the shape has a symmetric, Schur
/// positive generating function; failing components are reported whole.
ConjectureReport verify_conjecture(const TupleShape& mu,
                                   int max_cells = kDefaultEnumerationBound);

struct AttackingVector {
  std::vector<int> a;  // a[j-1] = rightmost position attacked by position j
  bool valid() const;
  std::string str() const;
  friend auto operator<=>(const AttackingVector&, const AttackingVector&) = default;
};

/// All weakly increasing vectors with j+1 <= a_j <= n (Catalan many).
std::vector<AttackingVector> attacking_vectors(int n);
/// The vector induced by the shifted contents of a shape's reading order.
/// a_j = j when position j attacks nothing to its right (not valid()).
AttackingVector attacking_vector_of(const TupleShape& mu);

/// Ribbon with n cells encoded by its descent set.
struct Ribbon {
  int n = 0;
  std::vector<int> descents;
};

long ribbon_maj(const Ribbon& r);
/// Ribbon Schur function in the fundamental basis: one Q per permutation
/// whose (ordinary) descent set equals the ribbon's.
QSymExpansion ribbon_in_Q(const Ribbon& r);

/// Foata-Schuetzenberger bijection: maj(w) = inv(foata(w)), same last
/// letter, same inverse-descent signature.
std::vector<int> foata(const std::vector<int>& w);

long inv_number(const std::vector<int>& w);
long maj_number(const std::vector<int>& w);
std::vector<int> word_descent_set(const std::vector<int>& w);
Signature word_signature(const std::vector<int>& w);  // inverse descents

/// The tuple of n single boxes (the k = n case, where D is always twisted).
TupleShape boxes_shape(int n);

/// Orbits of the permutations of [n] under the twisted involutions; classes
/// sorted by their lexicographically least word.
std::vector<std::vector<std::vector<int>>> twisted_classes(int n);

/// Schur expansion of a class on which every non-fixed D move used the
/// twisted branch: the ribbon sum with maj = dinv filtered by the (1,n)
/// inversion flag. Throws if some move used the other branch.
SchurExpansion twisted_class_expansion(const std::vector<StandardFilling>& cls);
SchurExpansion twisted_class_expansion_words(const std::vector<std::vector<int>>& words);

/// Shapes for conjecture sweeps: all k-tuples of straight partitions with
/// total size n, empty components allowed.
std::vector<TupleShape> straight_tuples(int k, int n);

}  // namespace deg
