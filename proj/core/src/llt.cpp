#include "deg/llt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deg {

DiagonalData diagonal_data(const StandardFilling& t) {
  DiagonalData out;
  const ShapeLayout& L = *t.layout;
  int k = L.k();
  int n = L.size();
  // Reading order sorts by shifted content, so scan ordered pairs p < q.
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      long gap = L.shifted_content_at(q) - L.shifted_content_at(p);
      if (gap > k) break;  // gaps only grow with q
      if (t.word[p] <= t.word[q]) continue;
      if (gap == k) out.ddes_pairs.emplace_back(t.word[p], t.word[q]);
      else if (gap > 0) out.dinv_pairs.emplace_back(t.word[p], t.word[q]);
    }
  out.dinv = static_cast<long>(out.dinv_pairs.size());
  return out;
}

QSymExpansion llt_polynomial(const TupleShape& mu, int max_cells) {
  QSymExpansion out(mu.total_size());
  LayoutPtr layout = ShapeLayout::of(mu);
  if (layout->size() > max_cells)
    throw std::invalid_argument("llt_polynomial: shape exceeds the size bound");
  for_each_standard(layout, [&](const std::vector<int>& w) {
    StandardFilling t{layout, w};
    out.add(descent_signature(t), QPoly::q_power(static_cast<int>(diagonal_data(t).dinv)));
  });
  return out;
}

DGraphData d_graph_data(const TupleShape& mu, int max_cells) {
  std::vector<StandardFilling> fillings = enumerate_standard(mu, max_cells);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < fillings.size(); ++i) index[fillings[i].word] = static_cast<int>(i);
  int n = mu.total_size();
  std::vector<Signature> sig;
  std::vector<long> stat;
  for (const auto& t : fillings) {
    sig.push_back(descent_signature(t));
    stat.push_back(diagonal_data(t).dinv);
  }
  SignedColoredGraph g(n, n, std::move(sig), std::move(stat));
  for (int v = 0; v < static_cast<int>(fillings.size()); ++v)
    for (int c = 2; c <= n - 1; ++c) {
      int u = index.at(combined_D(c, fillings[v]).word);
      if (u != v) g.add_edge(c, v, u);
    }
  return {std::move(g), std::move(fillings)};
}

SignedColoredGraph d_graph(const TupleShape& mu, int max_cells) {
  return d_graph_data(mu, max_cells).graph;
}

TwoTupleReport verify_two_tuple(const TupleShape& mu, int max_cells) {
  if (mu.k() > 2)
    throw std::invalid_argument("verify_two_tuple needs at most two components");
  TwoTupleReport out;
  InvolutionFamily fam = InvolutionFamily::tuple_tableaux(mu, max_cells);
  out.strong = check_strong_dual_equivalence(fam);
  out.axioms = check_axioms(d_graph(mu, max_cells));
  out.pass = out.strong.pass && out.axioms.all_pass();
  if (out.pass) out.ktilde = schur_expansion_from_DE(fam);
  return out;
}

ConjectureReport verify_conjecture(const TupleShape& mu, int max_cells) {
  ConjectureReport out;
  out.shape = mu;
  out.pass = true;
  DGraphData data = d_graph_data(mu, max_cells);
  for (const std::vector<int>& comp : data.graph.components()) {
    ComponentVerdict v;
    v.vertices = comp;
    v.dinv = data.graph.stat(comp[0]);
    QSymExpansion sum = generating_function(data.graph.induced(comp));
    v.expansion = extract_schur(std::move(sum));
    v.pass = v.expansion.in_schur_span() && v.expansion.nonnegative();
    out.pass = out.pass && v.pass;
    out.components.push_back(std::move(v));
  }
  return out;
}

bool AttackingVector::valid() const {
  int n = static_cast<int>(a.size()) + 1;
  for (int j = 1; j <= n - 1; ++j) {
    if (a[j - 1] < j + 1 || a[j - 1] > n) return false;
    if (j > 1 && a[j - 1] < a[j - 2]) return false;
  }
  return true;
}

std::string AttackingVector::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

std::vector<AttackingVector> attacking_vectors(int n) {
  if (n < 2) throw std::invalid_argument("attacking_vectors needs n >= 2");
  std::vector<AttackingVector> out;
  std::vector<int> a(n - 1);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      out.push_back({a});
      return;
    }
    int lo = std::max(j + 1, j >= 2 ? a[j - 2] : 2);
    for (int v = lo; v <= n; ++v) {
      a[j - 1] = v;
      rec(j + 1);
    }
  };
  rec(1);
  return out;
}

AttackingVector attacking_vector_of(const TupleShape& mu) {
  LayoutPtr layout = ShapeLayout::of(mu);
  int n = layout->size();
  if (n < 2) throw std::invalid_argument("attacking vector needs at least two cells");
  std::vector<int> a(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    int best = j;
    for (int q = j + 1; q <= n; ++q)
      if (layout->shifted_content_at(q - 1) - layout->shifted_content_at(j - 1) <= layout->k())
        best = q;
    a[j - 1] = best;
  }
  return {std::move(a)};
}

long ribbon_maj(const Ribbon& r) {
  long total = 0;
  for (int d : r.descents) {
    if (d < 1 || d >= r.n) throw std::invalid_argument("ribbon descent out of range");
    total += d;
  }
  return total;
}

long inv_number(const std::vector<int>& w) {
  long inv = 0;
  for (size_t p = 0; p < w.size(); ++p)
    for (size_t q = p + 1; q < w.size(); ++q)
      if (w[p] > w[q]) ++inv;
  return inv;
}

long maj_number(const std::vector<int>& w) {
  long maj = 0;
  for (size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1]) maj += static_cast<long>(p) + 1;
  return maj;
}

std::vector<int> word_descent_set(const std::vector<int>& w) {
  std::vector<int> out;
  for (size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1]) out.push_back(static_cast<int>(p) + 1);
  return out;
}

Signature word_signature(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 2, 0);
  for (int p = 0; p < n; ++p) pos[w[p]] = p;
  std::vector<int8_t> signs;
  for (int i = 1; i < n; ++i) signs.push_back(pos[i] < pos[i + 1] ? 1 : -1);
  return Signature(std::move(signs));
}

QSymExpansion ribbon_in_Q(const Ribbon& r) {
  if (r.n > 10) throw std::invalid_argument("ribbon_in_Q bound exceeded");
  QSymExpansion out(r.n);
  std::vector<int> w(r.n);
  std::iota(w.begin(), w.end(), 1);
  do {
    if (word_descent_set(w) == r.descents) out.add(word_signature(w), QPoly(1));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> foata(const std::vector<int>& w) {
  if (w.empty()) return {};
  std::vector<int> v{w[0]};
  for (size_t step = 1; step < w.size(); ++step) {
    int x = w[step];
    // Split after every letter on the same side of x as v's last letter,
    // then move each factor's last letter to its front.
    bool last_small = v.back() < x;
    std::vector<int> next;
    size_t start = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if ((v[i] < x) == last_small) {  // factor boundary after position i
        next.push_back(v[i]);
        for (size_t j = start; j < i; ++j) next.push_back(v[j]);
        start = i + 1;
      }
    }
    v = std::move(next);
    v.push_back(x);
  }
  return v;
}

TupleShape boxes_shape(int n) {
  if (n < 1) throw std::invalid_argument("boxes_shape needs n >= 1");
  std::vector<SkewShape> comps(n, SkewShape(Partition(std::vector<int>{1})));
  return TupleShape(std::move(comps));
}

std::vector<std::vector<std::vector<int>>> twisted_classes(int n) {
  std::vector<std::vector<int>> words;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    words.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

  std::vector<std::vector<std::vector<int>>> classes;
  std::vector<char> seen(words.size(), 0);
  for (size_t s = 0; s < words.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = 1;
    std::vector<std::vector<int>> cls;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      cls.push_back(words[v]);
      for (int c = 2; c <= n - 1; ++c) {
        int u = index.at(twisted_d(c, words[v]));
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return classes;
}

SchurExpansion twisted_class_expansion(const std::vector<StandardFilling>& cls) {
  if (cls.empty()) throw std::invalid_argument("empty class");
  int n = cls[0].size();
  const ShapeLayout& L = *cls[0].layout;
  for (const StandardFilling& t : cls)
    for (int c = 2; c <= n - 1; ++c)
      if (combined_D_branch(c, t) == DBranch::Haiman)
        throw std::invalid_argument("class has a non-twisted edge at color " +
                                    std::to_string(c) + " on " + t.str());

  long dinv = diagonal_data(cls[0]).dinv;
  // (1,n) as reading positions: an inversion pair iff within attack distance
  // and the first entry is larger.
  bool flag = false;
  if (n >= 2) {
    long gap = L.shifted_content_at(n - 1) - L.shifted_content_at(0);
    flag = gap > 0 && gap < L.k() && cls[0].word[0] > cls[0].word[n - 1];
  }

  QSymExpansion total(n);
  // Ribbons are descent subsets of [n-1]; keep those with the right maj and
  // last-descent flag.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Ribbon r;
    r.n = n;
    for (int i = 1; i <= n - 1; ++i)
      if (mask & (1u << (i - 1))) r.descents.push_back(i);
    if (ribbon_maj(r) != dinv) continue;
    bool has_last = !r.descents.empty() && r.descents.back() == n - 1;
    if (has_last != flag) continue;
    total += ribbon_in_Q(r);
  }
  return extract_schur(std::move(total));
}

SchurExpansion twisted_class_expansion_words(const std::vector<std::vector<int>>& words) {
  if (words.empty()) throw std::invalid_argument("empty class");
  int n = static_cast<int>(words[0].size());
  LayoutPtr layout = ShapeLayout::of(boxes_shape(n));
  std::vector<StandardFilling> cls;
  cls.reserve(words.size());
  for (const auto& w : words) cls.push_back({layout, w});
  return twisted_class_expansion(cls);
}

std::vector<TupleShape> straight_tuples(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("straight_tuples needs k >= 1, n >= 0");
  std::vector<TupleShape> out;
  std::vector<SkewShape> acc;
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == k) {
      if (left == 0) out.push_back(TupleShape(acc));
      return;
    }
    for (int take = (slot == k - 1 ? left : 0); take <= left; ++take)
      for (const Partition& p : partitions_of(take)) {
        acc.push_back(SkewShape(p));
        rec(slot + 1, left - take);
        acc.pop_back();
      }
  };
  rec(0, n);
  return out;
}

}  // namespace deg
