#include "deg/involutions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "deg/llt.hpp"
#include "deg/symfunc.hpp"

namespace deg {

namespace {

// Positions (0-based) of the values i-1, i, i+1 in w.
struct TriplePos {
  int below = -1, mid = -1, above = -1;  // positions of i-1, i, i+1
};

TriplePos find_triple(int i, const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  if (i <= 1 || i >= n) throw std::invalid_argument("color out of range for word of size " +
                                                    std::to_string(n));
  TriplePos p;
  for (int idx = 0; idx < n; ++idx) {
    if (w[idx] == i - 1) p.below = idx;
    else if (w[idx] == i) p.mid = idx;
    else if (w[idx] == i + 1) p.above = idx;
  }
  if (p.below < 0 || p.mid < 0 || p.above < 0)
    throw std::invalid_argument("word is not a permutation of [n]");
  return p;
}

bool mid_between(const TriplePos& p) {
  return (p.below < p.mid && p.mid < p.above) || (p.above < p.mid && p.mid < p.below);
}

}  // namespace

std::vector<int> elementary_d(int i, std::vector<int> w) {
  TriplePos p = find_triple(i, w);
  if (mid_between(p)) return w;
  int far = std::abs(p.mid - p.below) > std::abs(p.mid - p.above) ? p.below : p.above;
  std::swap(w[p.mid], w[far]);
  return w;
}

std::vector<int> twisted_d(int i, std::vector<int> w) {
  TriplePos p = find_triple(i, w);
  if (mid_between(p)) return w;
  int lo = std::min({p.below, p.mid, p.above});
  int mi = p.below + p.mid + p.above - std::min({p.below, p.mid, p.above}) -
           std::max({p.below, p.mid, p.above});
  int hi = std::max({p.below, p.mid, p.above});
  if (w[lo] == i) {  // i leftmost: rotate values left, i lands rightmost
    int v = w[lo];
    w[lo] = w[mi];
    w[mi] = w[hi];
    w[hi] = v;
  } else {  // i rightmost: rotate values right, i lands leftmost
    int v = w[hi];
    w[hi] = w[mi];
    w[mi] = w[lo];
    w[lo] = v;
  }
  return w;
}

StandardFilling d_on_filling(int i, const StandardFilling& t) {
  if (t.layout->k() != 1)
    throw std::invalid_argument("d_on_filling acts on straight or skew shapes only");
  StandardFilling out{t.layout, elementary_d(i, t.word)};
  if (!t.layout->word_is_standard(out.word))
    throw std::runtime_error("internal error: d_i broke standardness");
  return out;
}

DBranch combined_D_branch(int i, const StandardFilling& t) {
  TriplePos p = find_triple(i, t.word);
  if (mid_between(p)) return DBranch::Fixed;
  long a = t.layout->shifted_content_at(p.below);
  long b = t.layout->shifted_content_at(p.mid);
  long c = t.layout->shifted_content_at(p.above);
  if (a == b || a == c || b == c)
    throw std::runtime_error("entries i-1,i,i+1 share a shifted content");
  long dist = std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
  return dist > t.layout->k() ? DBranch::Haiman : DBranch::Twisted;
}

StandardFilling combined_D(int i, const StandardFilling& t) {
  DBranch branch = combined_D_branch(i, t);
  if (branch == DBranch::Fixed) return t;
  StandardFilling out{t.layout,
                      branch == DBranch::Haiman ? elementary_d(i, t.word) : twisted_d(i, t.word)};
  if (!t.layout->word_is_standard(out.word))
    throw std::runtime_error("internal error: D_i broke standardness");
  return out;
}

InvolutionFamily::InvolutionFamily(int n, std::vector<std::vector<int>> descents,
                                   std::vector<std::vector<int>> involutions,
                                   std::vector<std::string> labels,
                                   std::optional<std::vector<long>> stat)
    : n_(n),
      descents_(std::move(descents)),
      phi_(std::move(involutions)),
      labels_(std::move(labels)),
      stat_(std::move(stat)) {
  int m = count();
  if (n_ < 1) throw std::invalid_argument("family needs n >= 1");
  if (static_cast<int>(phi_.size()) != std::max(0, n_ - 2))
    throw std::invalid_argument("family needs one involution per color in [2, n-1]");
  for (const auto& D : descents_)
    for (size_t j = 0; j < D.size(); ++j)
      if (D[j] < 1 || D[j] >= n_ || (j > 0 && D[j] <= D[j - 1]))
        throw std::invalid_argument("descent sets must be increasing subsets of [n-1]");
  for (const auto& table : phi_) {
    if (static_cast<int>(table.size()) != m)
      throw std::invalid_argument("involution table size mismatch");
    for (int x = 0; x < m; ++x) {
      int y = table[x];
      if (y < 0 || y >= m || table[y] != x)
        throw std::invalid_argument("family map is not an involution");
    }
  }
  if (labels_.empty()) {
    for (int x = 0; x < m; ++x) labels_.push_back("#" + std::to_string(x));
  }
  if (static_cast<int>(labels_.size()) != m)
    throw std::invalid_argument("label count mismatch");
  if (stat_ && static_cast<int>(stat_->size()) != m)
    throw std::invalid_argument("stat count mismatch");
}

int InvolutionFamily::apply(int color, int x) const {
  if (color < 2 || color > n_ - 1) throw std::invalid_argument("color out of range");
  return phi_[color - 2][x];
}

Composition InvolutionFamily::alpha(int x) const {
  return composition_from_descent_set(descents_[x], n_);
}

long InvolutionFamily::stat(int x) const {
  if (!stat_) throw std::runtime_error("family has no statistic");
  return (*stat_)[x];
}

namespace {

template <typename Apply>
InvolutionFamily family_from_fillings(int n, const std::vector<StandardFilling>& elems,
                                      Apply apply_color,
                                      std::optional<std::vector<long>> stat) {
  std::map<std::vector<int>, int> index;
  for (size_t x = 0; x < elems.size(); ++x) index[elems[x].word] = static_cast<int>(x);
  std::vector<std::vector<int>> descents, phi;
  std::vector<std::string> labels;
  for (const auto& t : elems) {
    descents.push_back(descent_signature(t).descent_set());
    labels.push_back(t.str());
  }
  for (int c = 2; c <= n - 1; ++c) {
    std::vector<int> table;
    table.reserve(elems.size());
    for (const auto& t : elems) {
      StandardFilling u = apply_color(c, t);
      auto it = index.find(u.word);
      if (it == index.end()) throw std::runtime_error("involution left the ground set");
      table.push_back(it->second);
    }
    phi.push_back(std::move(table));
  }
  return InvolutionFamily(n, std::move(descents), std::move(phi), std::move(labels),
                          std::move(stat));
}

}  // namespace

InvolutionFamily InvolutionFamily::standard_tableaux(const SkewShape& shape, int max_cells) {
  std::vector<StandardFilling> elems = enumerate_standard(shape, max_cells);
  if (elems.empty()) throw std::invalid_argument("empty shape has no standard fillings");
  return family_from_fillings(shape.size(), elems,
                              [](int c, const StandardFilling& t) { return d_on_filling(c, t); },
                              std::nullopt);
}

InvolutionFamily InvolutionFamily::tuple_tableaux(const TupleShape& shape, int max_cells) {
  std::vector<StandardFilling> elems = enumerate_standard(shape, max_cells);
  if (elems.empty()) throw std::invalid_argument("empty shape has no standard fillings");
  std::vector<long> stat;
  stat.reserve(elems.size());
  for (const auto& t : elems) stat.push_back(diagonal_data(t).dinv);
  return family_from_fillings(shape.total_size(), elems,
                              [](int c, const StandardFilling& t) { return combined_D(c, t); },
                              std::move(stat));
}

InvolutionFamily InvolutionFamily::words(int n, bool twisted) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<std::vector<int>> words;
  do {
    words.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::map<std::vector<int>, int> index;
  for (size_t x = 0; x < words.size(); ++x) index[words[x]] = static_cast<int>(x);

  auto word_label = [n](const std::vector<int>& u) {
    std::ostringstream os;
    for (size_t j = 0; j < u.size(); ++j) {
      if (n > 9 && j) os << ',';
      os << u[j];
    }
    return os.str();
  };

  std::vector<std::vector<int>> descents, phi;
  std::vector<std::string> labels;
  for (const auto& u : words) {
    // Inverse descents: i such that i+1 appears to the left of i.
    std::vector<int> pos(n + 2, 0);
    for (int p = 0; p < n; ++p) pos[u[p]] = p;
    std::vector<int> D;
    for (int i = 1; i < n; ++i)
      if (pos[i + 1] < pos[i]) D.push_back(i);
    descents.push_back(std::move(D));
    labels.push_back(word_label(u));
  }
  for (int c = 2; c <= n - 1; ++c) {
    std::vector<int> table;
    table.reserve(words.size());
    for (const auto& u : words)
      table.push_back(index.at(twisted ? twisted_d(c, u) : elementary_d(c, u)));
    phi.push_back(std::move(table));
  }
  return InvolutionFamily(n, std::move(descents), std::move(phi), std::move(labels),
                          std::nullopt);
}

EquivalenceClass class_of(const InvolutionFamily& fam, int x, int lo, int hi) {
  if (lo < 2 || hi > fam.n() - 1 || lo > hi)
    throw std::invalid_argument("window must lie inside [2, n-1]");
  std::vector<int> stack{x};
  std::vector<char> seen(fam.count(), 0);
  seen[x] = 1;
  std::vector<int> members;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    members.push_back(v);
    for (int c = lo; c <= hi; ++c) {
      int u = fam.apply(c, v);
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return {std::move(members), lo, hi};
}

namespace {

// Restricted and shifted descent signature over the color window [lo, hi]:
// Des(x) is intersected with {lo-1, ..., hi} and shifted down by lo-2, giving
// a signature of length hi-lo+2 (local degree hi-lo+3).
Signature windowed_signature(const InvolutionFamily& fam, int x, int lo, int hi) {
  int len = hi - lo + 2;
  std::vector<int8_t> signs(len, 1);
  for (int d : fam.descents(x))
    if (d >= lo - 1 && d <= hi) signs[d - (lo - 1)] = -1;
  return Signature(std::move(signs));
}

QSymExpansion windowed_class_sum(const InvolutionFamily& fam, const std::vector<int>& members,
                                 int lo, int hi) {
  QSymExpansion sum(hi - lo + 3);
  for (int x : members) sum.add(windowed_signature(fam, x, lo, hi), QPoly(1));
  return sum;
}

// Unique dominance-maximal signature over the class, as a partition; nullopt
// when there is no global maximum or it is not a partition.
std::optional<Partition> dominant_alpha(const std::vector<Composition>& alphas) {
  for (const Composition& cand : alphas) {
    bool max = true;
    for (const Composition& other : alphas)
      if (!dominates(cand, other)) {
        max = false;
        break;
      }
    if (max) return cand.is_partition() ? std::optional<Partition>(cand.to_partition())
                                        : std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> orbits(const InvolutionFamily& fam, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (lo > hi) {  // no colors in the window: singleton classes
    for (int x = 0; x < fam.count(); ++x) out.push_back({x});
    return out;
  }
  std::vector<char> seen(fam.count(), 0);
  for (int x = 0; x < fam.count(); ++x) {
    if (seen[x]) continue;
    EquivalenceClass cls = class_of(fam, x, lo, hi);
    for (int v : cls.members) seen[v] = 1;
    out.push_back(std::move(cls.members));
  }
  return out;
}

void check_commutation(const InvolutionFamily& fam, DualEquivalenceReport& report) {
  for (int i = 2; i <= fam.n() - 1; ++i)
    for (int j = i + 3; j <= fam.n() - 1; ++j)
      for (int x = 0; x < fam.count(); ++x)
        if (fam.apply(j, fam.apply(i, x)) != fam.apply(i, fam.apply(j, x))) {
          report.pass = false;
          report.failures.push_back(
              {i, j, {x}, "involutions " + std::to_string(i) + " and " + std::to_string(j) +
                              " do not commute at " + fam.label(x)});
          return;
        }
}

DualEquivalenceReport check_windows(const InvolutionFamily& fam, bool strong) {
  DualEquivalenceReport report;
  int n = fam.n();
  for (int lo = 2; lo <= n - 1; ++lo) {
    for (int hi = lo; hi <= std::min(lo + 3, n - 1); ++hi) {
      for (const std::vector<int>& members : orbits(fam, lo, hi)) {
        QSymExpansion sum = windowed_class_sum(fam, members, lo, hi);
        bool single_required = strong || lo == hi;
        if (single_required) {
          std::vector<Composition> alphas;
          alphas.reserve(members.size());
          for (int x : members) alphas.push_back(windowed_signature(fam, x, lo, hi).alpha());
          std::optional<Partition> lambda = dominant_alpha(alphas);
          if (!lambda || !(sum == schur_in_Q(*lambda))) {
            SchurExpansion ex = extract_schur(sum);
            report.pass = false;
            report.failures.push_back({lo, hi, members,
                                       "windowed class sum is not a single Schur function: " +
                                           ex.str()});
            if (report.failures.size() >= 8) return report;
          }
        } else {
          SchurExpansion ex = extract_schur(sum);
          if (!ex.in_schur_span() || !ex.nonnegative()) {
            report.pass = false;
            report.failures.push_back(
                {lo, hi, members, "windowed class sum is not Schur positive: " + ex.str()});
            if (report.failures.size() >= 8) return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

DualEquivalenceReport check_strong_dual_equivalence(const InvolutionFamily& fam) {
  DualEquivalenceReport report = check_windows(fam, true);
  check_commutation(fam, report);
  return report;
}

DualEquivalenceReport check_weak_dual_equivalence(const InvolutionFamily& fam) {
  DualEquivalenceReport report = check_windows(fam, false);
  check_commutation(fam, report);
  return report;
}

std::string DualEquivalenceReport::str(const InvolutionFamily& fam) const {
  if (pass) return "pass";
  std::ostringstream os;
  os << "fail";
  for (const CheckFailure& f : failures) {
    os << "\n  window [" << f.window_lo << "," << f.window_hi << "]: " << f.detail;
    os << "\n    class:";
    for (int x : f.class_members) os << " {" << fam.label(x) << "}";
  }
  return os.str();
}

namespace {

std::vector<std::pair<int, Partition>> distinguished_elements(const InvolutionFamily& fam,
                                                              bool dominant) {
  std::vector<std::pair<int, Partition>> out;
  for (const std::vector<int>& members : orbits(fam, 2, fam.n() - 1)) {
    int best = -1;
    bool unique = true;
    for (int x : members) {
      bool extreme = true;
      for (int y : members) {
        Dominance d = dominance_compare(fam.alpha(x), fam.alpha(y));
        if (d == Dominance::Incomparable || d == (dominant ? Dominance::Less : Dominance::Greater)) {
          extreme = false;
          break;
        }
      }
      if (extreme) {
        if (best >= 0) unique = false;
        else best = x;
      }
    }
    if (best < 0 || !unique)
      throw std::runtime_error(std::string("class has ") + (best < 0 ? "no" : "multiple") +
                               (dominant ? " dominant" : " subordinate") +
                               " element; not a dual equivalence");
    if (dominant) {
      Composition a = fam.alpha(best);
      if (!a.is_partition())
        throw std::runtime_error("dominant descent composition " + a.str() +
                                 " is not a partition; not a dual equivalence");
      out.emplace_back(best, a.to_partition());
    } else {
      std::vector<int> complement;
      const std::vector<int>& D = fam.descents(best);
      for (int i = 1; i <= fam.n() - 1; ++i)
        if (!std::binary_search(D.begin(), D.end(), i)) complement.push_back(i);
      Composition beta = composition_from_descent_set(complement, fam.n());
      if (!beta.is_partition())
        throw std::runtime_error("subordinate complement composition " + beta.str() +
                                 " is not a partition; not a dual equivalence");
      out.emplace_back(best, beta.to_partition().conjugate());
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, Partition>> dominant_elements(const InvolutionFamily& fam) {
  return distinguished_elements(fam, true);
}

std::vector<std::pair<int, Partition>> subordinate_elements(const InvolutionFamily& fam) {
  return distinguished_elements(fam, false);
}

SchurExpansion schur_expansion_from_DE(const InvolutionFamily& fam) {
  SchurExpansion out;
  out.degree = fam.n();
  out.residual = QSymExpansion(fam.n());
  if (fam.has_stat()) {
    // The statistic must be constant on full classes.
    for (const std::vector<int>& members : orbits(fam, 2, fam.n() - 1)) {
      for (int x : members)
        if (fam.stat(x) != fam.stat(members[0]))
          throw std::runtime_error("statistic is not constant on the class of " +
                                   fam.label(members[0]));
    }
  }
  for (const auto& [x, lambda] : dominant_elements(fam)) {
    QPoly c = fam.has_stat() ? QPoly::q_power(static_cast<int>(fam.stat(x))) : QPoly(1);
    auto [it, inserted] = out.terms.try_emplace(lambda, c);
    if (!inserted) it->second += c;
  }
  return out;
}

std::vector<StandardFilling> rectification_map(const InvolutionFamily& fam) {
  std::vector<StandardFilling> image(fam.count());
  std::vector<char> assigned(fam.count(), 0);
  for (const auto& [dom, lambda] : dominant_elements(fam)) {
    image[dom] = superstandard(lambda);
    assigned[dom] = 1;
    std::queue<int> q;
    q.push(dom);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int c = 2; c <= fam.n() - 1; ++c) {
        int u = fam.apply(c, v);
        StandardFilling t = d_on_filling(c, image[v]);
        if (!assigned[u]) {
          image[u] = t;
          assigned[u] = 1;
          if (u != v) q.push(u);
        } else if (!(image[u] == t)) {
          throw std::runtime_error("rectification is path dependent at " + fam.label(v) +
                                   " color " + std::to_string(c));
        }
      }
    }
  }
  for (int x = 0; x < fam.count(); ++x)
    if (!assigned[x]) throw std::runtime_error("rectification did not reach " + fam.label(x));
  return image;
}

StandardFilling implicit_rectification(const InvolutionFamily& fam, int x) {
  return rectification_map(fam)[x];
}

}  // namespace deg
