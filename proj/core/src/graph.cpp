#include "deg/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace deg {

SignedColoredGraph::SignedColoredGraph(int n, int N, std::vector<Signature> sigma,
                                       std::optional<std::vector<long>> stat)
    : n_(n), N_(N), sigma_(std::move(sigma)), stat_(std::move(stat)) {
  if (n_ < 1 || N_ < n_) throw std::invalid_argument("graph type needs 1 <= n <= N");
  for (const Signature& s : sigma_)
    if (s.length() != N_ - 1)
      throw std::invalid_argument("signature length must be N-1 = " + std::to_string(N_ - 1));
  if (stat_ && stat_->size() != sigma_.size())
    throw std::invalid_argument("stat count mismatch");
  nbr_.assign(std::max(0, n_ - 2), std::vector<int>(sigma_.size(), -1));
}

void SignedColoredGraph::add_edge(int color, int u, int v) {
  if (!has_color(color)) throw std::invalid_argument("edge color out of range");
  if (u == v) throw std::invalid_argument("edge endpoints must be distinct");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  std::vector<int>& m = nbr_[color - 2];
  if (m[u] == v) return;  // already present
  if (m[u] != -1 || m[v] != -1)
    throw std::invalid_argument("color " + std::to_string(color) +
                                " edges must form a matching");
  m[u] = v;
  m[v] = u;
}

long SignedColoredGraph::stat(int v) const {
  if (!stat_) throw std::runtime_error("graph has no statistic");
  return (*stat_)[v];
}

int SignedColoredGraph::neighbor(int color, int v) const {
  if (!has_color(color)) return -1;
  return nbr_[color - 2][v];
}

std::vector<std::pair<int, int>> SignedColoredGraph::edges(int color) const {
  std::vector<std::pair<int, int>> out;
  if (!has_color(color)) return out;
  const std::vector<int>& m = nbr_[color - 2];
  for (int v = 0; v < vertex_count(); ++v)
    if (m[v] > v) out.emplace_back(v, m[v]);
  return out;
}

long SignedColoredGraph::edge_count() const {
  long total = 0;
  for (int c = 2; c <= n_ - 1; ++c) total += static_cast<long>(edges(c).size());
  return total;
}

std::vector<std::vector<int>> SignedColoredGraph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(vertex_count(), 0);
  for (int s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int c = 2; c <= n_ - 1; ++c) {
        int u = neighbor(c, v);
        if (u >= 0 && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SignedColoredGraph SignedColoredGraph::induced(const std::vector<int>& vertices) const {
  std::vector<Signature> sig;
  std::optional<std::vector<long>> stat;
  if (stat_) stat.emplace();
  std::vector<int> where(vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    where[vertices[i]] = static_cast<int>(i);
    sig.push_back(sigma_[vertices[i]]);
    if (stat_) stat->push_back((*stat_)[vertices[i]]);
  }
  SignedColoredGraph out(n_, N_, std::move(sig), std::move(stat));
  for (int c = 2; c <= n_ - 1; ++c)
    for (int v : vertices) {
      int u = neighbor(c, v);
      if (u >= 0 && where[u] >= 0 && where[v] < where[u]) out.add_edge(c, where[v], where[u]);
    }
  return out;
}

StandardGraphData standard_graph_data(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("standard_graph of the empty partition");
  int n = p.size();
  std::vector<StandardFilling> tabs = enumerate_standard(SkewShape(p));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < tabs.size(); ++i) index[tabs[i].word] = static_cast<int>(i);
  std::vector<Signature> sig;
  sig.reserve(tabs.size());
  for (const auto& t : tabs) sig.push_back(descent_signature(t));
  SignedColoredGraph g(n, n, std::move(sig));
  for (int v = 0; v < static_cast<int>(tabs.size()); ++v)
    for (int c = 2; c <= n - 1; ++c) {
      int u = index.at(d_on_filling(c, tabs[v]).word);
      if (u != v) g.add_edge(c, v, u);
    }
  return {std::move(g), std::move(tabs)};
}

SignedColoredGraph standard_graph(const Partition& p) { return standard_graph_data(p).graph; }

SignedColoredGraph build_graph_from_family(const InvolutionFamily& fam, int N) {
  if (N < fam.n()) throw std::invalid_argument("need N >= n");
  std::vector<Signature> sig;
  sig.reserve(fam.count());
  for (int x = 0; x < fam.count(); ++x) {
    std::vector<int8_t> signs(N - 1, 1);
    for (int d : fam.descents(x)) signs[d - 1] = -1;
    sig.push_back(Signature(std::move(signs)));
  }
  std::optional<std::vector<long>> stat;
  if (fam.has_stat()) {
    stat.emplace();
    for (int x = 0; x < fam.count(); ++x) stat->push_back(fam.stat(x));
  }
  SignedColoredGraph g(fam.n(), N, std::move(sig), std::move(stat));
  for (int c = 2; c <= fam.n() - 1; ++c)
    for (int x = 0; x < fam.count(); ++x) {
      int y = fam.apply(c, x);
      if (y != x) g.add_edge(c, x, y);
    }
  return g;
}

SignedColoredGraph augmented_graph(const Partition& lambda, const Augmentation& a) {
  if (a.shape.inner() != lambda)
    throw std::invalid_argument("augmentation must sit on rho/lambda");
  const Partition& rho = a.shape.outer();
  int n = lambda.size();
  int N = rho.size();
  std::vector<Cell> aug_cells = a.shape.cells();
  if (a.entries.size() != aug_cells.size())
    throw std::invalid_argument("augmentation entry count mismatch");
  {
    std::vector<int> sorted = a.entries;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != n + 1 + static_cast<int>(i))
        throw std::invalid_argument("augmentation entries must be n+1..N");
  }

  LayoutPtr layout = ShapeLayout::of(SkewShape(rho));
  std::vector<std::pair<int, int>> pinned;  // (cell index, entry)
  for (size_t i = 0; i < aug_cells.size(); ++i) {
    int idx = layout->index_of({0, aug_cells[i]});
    pinned.emplace_back(idx, a.entries[i]);
  }

  std::vector<StandardFilling> verts;
  for (const StandardFilling& t : enumerate_standard(SkewShape(rho))) {
    bool match = true;
    for (auto [idx, e] : pinned)
      if (t.word[idx] != e) {
        match = false;
        break;
      }
    if (match) verts.push_back(t);
  }
  if (verts.empty()) throw std::invalid_argument("malformed augmentation: no fillings");

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i].word] = static_cast<int>(i);
  std::vector<Signature> sig;
  for (const auto& t : verts) sig.push_back(descent_signature(t));
  SignedColoredGraph g(n, N, std::move(sig));
  for (int v = 0; v < static_cast<int>(verts.size()); ++v)
    for (int c = 2; c <= n - 1; ++c) {
      StandardFilling u = d_on_filling(c, verts[v]);
      auto it = index.find(u.word);
      if (it == index.end())
        throw std::runtime_error("augmented d_i left the augmented set");
      if (it->second != v) g.add_edge(c, v, it->second);
    }
  return g;
}

SignedColoredGraph restrict(const SignedColoredGraph& g, int m, int M) {
  if (m > g.n() || M > g.N() || m > M || m < 1)
    throw std::invalid_argument("restriction bounds must satisfy m <= n, M <= N, m <= M");
  std::vector<Signature> sig;
  sig.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) sig.push_back(g.sigma(v).truncated(M - 1));
  std::optional<std::vector<long>> stat;
  if (g.has_stat()) {
    stat.emplace();
    for (int v = 0; v < g.vertex_count(); ++v) stat->push_back(g.stat(v));
  }
  SignedColoredGraph out(m, M, std::move(sig), std::move(stat));
  for (int c = 2; c <= m - 1; ++c)
    for (auto [u, v] : g.edges(c)) out.add_edge(c, u, v);
  return out;
}

bool AxiomReport::all_pass() const {
  for (const AxiomResult& r : axiom)
    if (!r.pass) return false;
  return true;
}

std::string AxiomReport::str() const {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i) {
    os << "axiom" << i + 1 << ": " << (axiom[i].pass ? "pass" : "fail");
    if (!axiom[i].pass) os << " (" << axiom[i].witness << ")";
    if (i < 5) os << "\n";
  }
  return os.str();
}

namespace {

// ---- axiom 4 template machinery ----------------------------------------

// A small edge-colored graph with colors renumbered to 0..(w-1), stored as a
// per-vertex neighbor array. Used for isomorphism tests against the allowed
// two- and three-color components.
struct SmallGraph {
  int width = 0;
  std::vector<std::array<int, 3>> nbr;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

bool small_graphs_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.nbr.size() != b.nbr.size() || a.width != b.width) return false;
  int n = static_cast<int>(a.nbr.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int c = 0; c < a.width && ok; ++c) {
        int av = a.nbr[v][c];
        int bv = b.nbr[perm[v]][c];
        if ((av == -1) != (bv == -1)) ok = false;
        else if (av >= 0 && perm[av] != bv) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Component of g on `verts` using colors [lo, lo+width), renumbered.
SmallGraph small_component(const SignedColoredGraph& g, const std::vector<int>& verts, int lo,
                           int width) {
  SmallGraph s;
  s.width = width;
  std::map<int, int> where;
  for (size_t i = 0; i < verts.size(); ++i) where[verts[i]] = static_cast<int>(i);
  s.nbr.assign(verts.size(), {-1, -1, -1});
  for (size_t i = 0; i < verts.size(); ++i)
    for (int c = 0; c < width; ++c) {
      int u = g.neighbor(lo + c, verts[i]);
      if (u >= 0) s.nbr[i][c] = where.at(u);
    }
  return s;
}

std::vector<std::vector<int>> window_components(const SignedColoredGraph& g, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int c = lo; c <= hi; ++c) {
        int u = g.neighbor(c, v);
        if (u >= 0 && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Allowed window components: the standard graphs on 4 (two colors) and 5
// (three colors) letters, shifted so their colors start at 0.
const std::vector<SmallGraph>& axiom4_templates(int width) {
  static std::mutex mu;
  static std::map<int, std::vector<SmallGraph>> memo;
  std::scoped_lock lock(mu);
  auto it = memo.find(width);
  if (it != memo.end()) return it->second;
  std::vector<SmallGraph> templates;
  for (const Partition& p : partitions_of(width + 2)) {
    SignedColoredGraph g = standard_graph(p);
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    SmallGraph s = small_component(g, all, 2, width);
    if (std::find(templates.begin(), templates.end(), s) == templates.end())
      templates.push_back(std::move(s));
  }
  return memo.try_emplace(width, std::move(templates)).first->second;
}

bool matches_some_template(const SmallGraph& s, int width) {
  for (const SmallGraph& t : axiom4_templates(width))
    if (small_graphs_isomorphic(s, t)) return true;
  return false;
}

// ---- individual axiom checks --------------------------------------------

AxiomResult check_axiom1(const SignedColoredGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 2; i <= g.n() - 1; ++i) {
      bool wants = g.sigma(v)[i - 1] == -g.sigma(v)[i];
      bool has = g.neighbor(i, v) >= 0;
      if (wants != has)
        return {false, "vertex " + std::to_string(v) + ", color " + std::to_string(i) +
                           (wants ? ": admits an i-neighbor but has none"
                                  : ": has an i-neighbor without the sign condition")};
    }
  return {};
}

AxiomResult check_axiom2(const SignedColoredGraph& g) {
  for (int i = 2; i <= g.n() - 1; ++i)
    for (auto [w, x] : g.edges(i)) {
      for (int j : {i - 1, i})
        if (g.sigma(w)[j] != -g.sigma(x)[j])
          return {false, "edge {" + std::to_string(w) + "," + std::to_string(x) + "} color " +
                             std::to_string(i) + ": sigma_" + std::to_string(j) +
                             " does not flip"};
      for (int h = 1; h <= g.N() - 1; ++h) {
        if (h >= i - 2 && h <= i + 1) continue;
        if (g.sigma(w)[h] != g.sigma(x)[h])
          return {false, "edge {" + std::to_string(w) + "," + std::to_string(x) + "} color " +
                             std::to_string(i) + ": sigma_" + std::to_string(h) + " changed"};
      }
    }
  return {};
}

AxiomResult check_axiom3(const SignedColoredGraph& g) {
  for (int i = 2; i <= g.n() - 1; ++i)
    for (auto [w, x] : g.edges(i))
      for (int off = 0; off < 2; ++off) {
        int a = off == 0 ? w : x;
        int b = off == 0 ? x : w;
        if (i - 2 >= 1 && g.sigma(a)[i - 2] == -g.sigma(b)[i - 2] &&
            g.sigma(a)[i - 2] != -g.sigma(a)[i - 1])
          return {false, "edge {" + std::to_string(w) + "," + std::to_string(x) + "} color " +
                             std::to_string(i) + ": flipped sigma_" + std::to_string(i - 2) +
                             " breaks the i-2 condition"};
        if (i + 1 <= g.N() - 1 && g.sigma(a)[i + 1] == -g.sigma(b)[i + 1] &&
            g.sigma(a)[i + 1] != -g.sigma(a)[i])
          return {false, "edge {" + std::to_string(w) + "," + std::to_string(x) + "} color " +
                             std::to_string(i) + ": flipped sigma_" + std::to_string(i + 1) +
                             " breaks the i+1 condition"};
      }
  return {};
}

AxiomResult check_axiom4(const SignedColoredGraph& g) {
  for (int width : {2, 3}) {
    // windows [i-width+1, i] fully inside [2, n-1]
    for (int hi = width + 1; hi <= g.n() - 1; ++hi) {
      int lo = hi - width + 1;
      for (const std::vector<int>& comp : window_components(g, lo, hi)) {
        if (comp.size() > 6 || !matches_some_template(small_component(g, comp, lo, width), width))
          return {false, "colors [" + std::to_string(lo) + "," + std::to_string(hi) +
                             "]: component of vertex " + std::to_string(comp[0]) +
                             " (size " + std::to_string(comp.size()) +
                             ") matches no allowed " + std::to_string(width) +
                             "-color component"};
      }
    }
  }
  return {};
}

AxiomResult check_axiom5(const SignedColoredGraph& g) {
  for (int i = 2; i <= g.n() - 1; ++i)
    for (int j = i + 3; j <= g.n() - 1; ++j)
      for (int w = 0; w < g.vertex_count(); ++w) {
        int x = g.neighbor(i, w);
        if (x < 0) continue;
        int y = g.neighbor(j, x);
        if (y < 0) continue;
        int v = g.neighbor(j, w);
        if (v < 0 || g.neighbor(i, v) != y)
          return {false, "colors " + std::to_string(i) + "," + std::to_string(j) +
                             " at vertex " + std::to_string(w) + ": no completing square"};
      }
  return {};
}

AxiomResult check_axiom6(const SignedColoredGraph& g) {
  // Quotient form: inside each component of E_2 u ... u E_i, the components
  // of E_2 u ... u E_{i-1} with E_i-adjacency must form a complete graph.
  // Equivalent to the path statement: a path with at most one E_i edge
  // between u and v exists iff the classes of u and v are equal or adjacent.
  for (int i = 2; i <= g.n() - 1; ++i) {
    std::vector<int> cls(g.vertex_count(), -1);
    {
      int id = 0;
      for (const std::vector<int>& c : window_components(g, 2, i - 1)) {
        for (int v : c) cls[v] = id;
        ++id;
      }
    }
    for (const std::vector<int>& comp : window_components(g, 2, i)) {
      std::set<int> classes;
      for (int v : comp) classes.insert(cls[v]);
      if (classes.size() <= 1) continue;
      std::set<std::pair<int, int>> adj;
      for (int v : comp) {
        int u = g.neighbor(i, v);
        if (u >= 0 && cls[u] != cls[v])
          adj.emplace(std::min(cls[u], cls[v]), std::max(cls[u], cls[v]));
      }
      size_t need = classes.size() * (classes.size() - 1) / 2;
      if (adj.size() < need)
        return {false, "color " + std::to_string(i) + ": component of vertex " +
                           std::to_string(comp[0]) + " has " + std::to_string(classes.size()) +
                           " sub-blocks but only " + std::to_string(adj.size()) +
                           " of " + std::to_string(need) + " block adjacencies"};
    }
  }
  return {};
}

}  // namespace

AxiomReport check_axioms(const SignedColoredGraph& g) {
  AxiomReport r;
  r.axiom[0] = check_axiom1(g);
  r.axiom[1] = check_axiom2(g);
  r.axiom[2] = check_axiom3(g);
  r.axiom[3] = check_axiom4(g);
  r.axiom[4] = check_axiom5(g);
  r.axiom[5] = check_axiom6(g);
  return r;
}

bool is_morphism(const Morphism& phi) {
  const SignedColoredGraph& g = *phi.source;
  const SignedColoredGraph& h = *phi.target;
  if (static_cast<int>(phi.map.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int w = phi.map[v];
    if (w < 0 || w >= h.vertex_count()) return false;
    if (g.sigma(v) != h.sigma(w)) return false;
  }
  for (int c = 2; c <= g.n() - 1; ++c)
    for (auto [u, v] : g.edges(c)) {
      if (phi.map[u] == phi.map[v]) return false;
      if (h.neighbor(c, phi.map[u]) != phi.map[v]) return false;
    }
  return true;
}

ClassifyResult classify_component(const SignedColoredGraph& g) {
  if (g.n() != g.N()) return {std::nullopt, "classification needs a type (n,n) graph"};
  if (g.vertex_count() == 0) return {std::nullopt, "empty graph"};
  if (g.components().size() != 1) return {std::nullopt, "graph is not connected"};
  for (int a = 0; a < 3; ++a)
    if (AxiomResult r = (a == 0   ? check_axiom1(g)
                         : a == 1 ? check_axiom2(g)
                                  : check_axiom3(g));
        !r.pass)
      return {std::nullopt, "axiom " + std::to_string(a + 1) + " fails: " + r.witness};

  // Dominance-maximal signature vertices; ties broken by lowest id.
  std::vector<Composition> alphas;
  alphas.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) alphas.push_back(g.sigma(v).alpha());
  std::vector<int> anchors;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool max = true;
    for (int u = 0; u < g.vertex_count() && max; ++u)
      if (!dominates(alphas[v], alphas[u])) max = false;
    if (max) anchors.push_back(v);
  }
  if (anchors.empty())
    return {std::nullopt, "no vertex has a dominance-maximal signature"};
  if (!alphas[anchors[0]].is_partition())
    return {std::nullopt, "maximal descent composition " + alphas[anchors[0]].str() +
                              " is not a partition"};
  Partition lambda = alphas[anchors[0]].to_partition();

  StandardGraphData target = standard_graph_data(lambda);
  int anchor_image = -1;
  {
    Signature top = superstandard_signature(lambda);
    for (int t = 0; t < target.graph.vertex_count(); ++t)
      if (target.graph.sigma(t) == top) anchor_image = t;
  }

  std::vector<int> map(g.vertex_count(), -1);
  map[anchors[0]] = anchor_image;
  std::queue<int> q;
  q.push(anchors[0]);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int c = 2; c <= g.n() - 1; ++c) {
      int u = g.neighbor(c, v);
      if (u < 0) continue;
      int tu = target.graph.neighbor(c, map[v]);
      if (tu < 0)
        return {std::nullopt, "propagation conflict: image of vertex " + std::to_string(v) +
                                  " has no " + std::to_string(c) + "-edge"};
      if (map[u] == -1) {
        map[u] = tu;
        q.push(u);
      } else if (map[u] != tu) {
        return {std::nullopt, "propagation conflict at vertex " + std::to_string(u) + " color " +
                                  std::to_string(c)};
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (map[v] < 0) return {std::nullopt, "vertex " + std::to_string(v) + " was never reached"};
    if (g.sigma(v) != target.graph.sigma(map[v]))
      return {std::nullopt, "signature mismatch at vertex " + std::to_string(v)};
  }

  std::vector<int> fiber(target.graph.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++fiber[map[v]];
  int m = fiber[0];
  for (int f : fiber)
    if (f != m)
      return {std::nullopt, "fibers are not constant (" + std::to_string(f) + " vs " +
                                std::to_string(m) + ")"};
  if (static_cast<int>(anchors.size()) != m)
    return {std::nullopt, "anchor count " + std::to_string(anchors.size()) +
                              " does not match fiber size " + std::to_string(m)};
  return {Classification{std::move(lambda), m, std::move(map)}, ""};
}

QSymExpansion generating_function(const SignedColoredGraph& g) {
  QSymExpansion out(g.N());
  for (int v = 0; v < g.vertex_count(); ++v)
    out.add(g.sigma(v), QPoly::q_power(g.has_stat() ? static_cast<int>(g.stat(v)) : 0));
  return out;
}

std::string graph_to_json(const SignedColoredGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["N"] = g.N();
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json jv;
    jv["id"] = v;
    jv["sigma"] = g.sigma(v).str();
    if (g.has_stat()) jv["stat"] = g.stat(v);
    j["vertices"].push_back(std::move(jv));
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::object();
  for (int c = 2; c <= g.n() - 1; ++c) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges(c)) list.push_back({u, v});
    edges[std::to_string(c)] = std::move(list);
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

SignedColoredGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  int N = j.at("N").get<int>();
  std::vector<int> ids;
  std::vector<Signature> sig;
  std::optional<std::vector<long>> stat;
  bool any_stat = false;
  for (const auto& jv : j.at("vertices")) any_stat = any_stat || jv.contains("stat");
  if (any_stat) stat.emplace();
  for (const auto& jv : j.at("vertices")) {
    ids.push_back(jv.at("id").get<int>());
    sig.push_back(Signature::parse(jv.at("sigma").get<std::string>()));
    if (any_stat) stat->push_back(jv.value("stat", 0L));
  }
  std::map<int, int> where;
  std::vector<int> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ids[a] < ids[b]; });
  std::vector<Signature> sig2;
  std::optional<std::vector<long>> stat2;
  if (any_stat) stat2.emplace();
  for (size_t i = 0; i < order.size(); ++i) {
    if (where.count(ids[order[i]])) throw std::invalid_argument("duplicate vertex id");
    where[ids[order[i]]] = static_cast<int>(i);
    sig2.push_back(sig[order[i]]);
    if (any_stat) stat2->push_back((*stat)[order[i]]);
  }
  SignedColoredGraph g(n, N, std::move(sig2), std::move(stat2));
  if (j.contains("edges"))
    for (const auto& [key, list] : j.at("edges").items()) {
      int c = std::stoi(key);
      for (const auto& pair : list) g.add_edge(c, where.at(pair.at(0)), where.at(pair.at(1)));
    }
  return g;
}

std::string graph_to_dot(const SignedColoredGraph& g) {
  static const char* palette[] = {"black",  "blue3", "red3",   "green4",
                                  "orange", "plum4", "cyan4"};
  std::ostringstream os;
  os << "graph deg {\n  node [shape=box, fontsize=10];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << v << "\\n" << g.sigma(v).str() << "\"];\n";
  // one line per vertex pair; parallel colors join into a compound label
  std::map<std::pair<int, int>, std::vector<int>> joint;
  for (int c = 2; c <= g.n() - 1; ++c)
    for (auto e : g.edges(c)) joint[e].push_back(c);
  for (const auto& [e, colors] : joint) {
    std::string label;
    for (size_t i = 0; i < colors.size(); ++i)
      label += (i ? "," : "") + std::to_string(colors[i]);
    os << "  v" << e.first << " -- v" << e.second << " [label=\"" << label << "\", color=\""
       << palette[colors[0] % 7] << "\"";
    if (colors.size() > 1) os << ", penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace deg
