#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "deg/involutions.hpp"
#include "deg/shapes.hpp"
#include "deg/symfunc.hpp"
#include "deg/tableaux.hpp"

namespace deg {

/// Signed colored graph of type (n, N): signatures of length N-1 and one
/// partial perfect matching per color in [2, n-1]. The matching property is
/// enforced structurally: adding a second i-edge at a vertex throws.
class SignedColoredGraph {
 public:
  SignedColoredGraph(int n, int N, std::vector<Signature> sigma,
                     std::optional<std::vector<long>> stat = std::nullopt);

  void add_edge(int color, int u, int v);

  int n() const { return n_; }
  int N() const { return N_; }
  int vertex_count() const { return static_cast<int>(sigma_.size()); }
  const Signature& sigma(int v) const { return sigma_[v]; }
  bool has_stat() const { return stat_.has_value(); }
  long stat(int v) const;
  /// The i-neighbor of v, or -1.
  int neighbor(int color, int v) const;
  bool has_color(int color) const { return color >= 2 && color <= n_ - 1; }
  /// Edges of one color as sorted (u < v) pairs.
  std::vector<std::pair<int, int>> edges(int color) const;
  long edge_count() const;

  /// Connected components over all colors, each sorted, ordered by minimum.
  std::vector<std::vector<int>> components() const;
  /// Subgraph on the given vertices (same type); vertex order preserved.
  SignedColoredGraph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const SignedColoredGraph&, const SignedColoredGraph&) = default;

 private:
  int n_, N_;
  std::vector<Signature> sigma_;
  std::optional<std::vector<long>> stat_;
  std::vector<std::vector<int>> nbr_;  // nbr_[color-2][v] = partner or -1
};

/// The standard dual equivalence graph G_lambda on SYT(lambda) with
/// elementary dual equivalence edges; vertices in content-reading-word order.
SignedColoredGraph standard_graph(const Partition& p);

struct StandardGraphData {
  SignedColoredGraph graph;
  std::vector<StandardFilling> tableaux;  // vertex v <-> tableaux[v]
};
StandardGraphData standard_graph_data(const Partition& p);

/// Graph of an involution family: sigma_i = -1 iff i in Des, i-edges the
/// non-fixed pairs of phi_i. Signatures are padded with +1 up to length N-1.
SignedColoredGraph build_graph_from_family(const InvolutionFamily& fam, int N);

/// An augmenting tableau: the cells of rho/lambda holding n+1, ..., N.
struct Augmentation {
  SkewShape shape;
  std::vector<int> entries;  // content reading order of shape's cells
};

/// Graph on standard Young tableaux of shape lambda augmented by a: type
/// (n, N) with i-edges only for i < n.
SignedColoredGraph augmented_graph(const Partition& lambda, const Augmentation& a);

/// (m, M)-restriction: signatures truncated to length M-1, colors below m.
SignedColoredGraph restrict(const SignedColoredGraph& g, int m, int M);

struct AxiomResult {
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  std::array<AxiomResult, 6> axiom;  // axiom[i] is axiom i+1
  bool all_pass() const;
  std::string str() const;
};

/// Checks dual equivalence graph axioms 1-6, with witnesses on failure.
AxiomReport check_axioms(const SignedColoredGraph& g);

struct Morphism {
  const SignedColoredGraph* source = nullptr;
  const SignedColoredGraph* target = nullptr;
  std::vector<int> map;
};

/// Signature-preserving, edge-preserving by color.
bool is_morphism(const Morphism& phi);

struct Classification {
  Partition lambda;
  int multiplicity = 1;
  std::vector<int> vertex_to_tableau;  // into standard_graph_data(lambda) order
};

struct ClassifyResult {
  std::optional<Classification> ok;
  std::string error;
  explicit operator bool() const { return ok.has_value(); }
};

/// Classifies a connected type (n,n) graph against the standard graphs:
/// anchors a dominance-maximal-signature vertex at the superstandard tableau
/// and propagates along edges; multiplicity m is the constant fiber size.
ClassifyResult classify_component(const SignedColoredGraph& g);

/// Sum of q^stat(v) Q_sigma(v) over the vertices.
QSymExpansion generating_function(const SignedColoredGraph& g);

/// Canonical JSON form (bit-exact for fixtures).
std::string graph_to_json(const SignedColoredGraph& g);
SignedColoredGraph graph_from_json(const std::string& text);
std::string graph_to_dot(const SignedColoredGraph& g);

}  // namespace deg
