#include "deg/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deg {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Removes one level of surrounding parentheses if they enclose the whole string.
std::string unwrap(const std::string& s) {
  std::string t = strip(s);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    int depth = 0;
    for (size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (depth == 0) return t;  // the leading '(' closes early
    }
    return strip(t.substr(1, t.size() - 2));
  }
  return t;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::string t = unwrap(text);
  if (t.empty()) return Partition{};
  std::vector<int> parts;
  for (const std::string& piece : split_top_level(t, ',')) {
    std::string p = strip(piece);
    if (p.empty()) throw std::invalid_argument("empty part in partition '" + text + "'");
    size_t pos = 0;
    int v = std::stoi(p, &pos);
    if (pos != p.size()) throw std::invalid_argument("bad partition part '" + p + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int col = 1; col <= part(1); ++col) {
    int height = 0;
    while (height < length() && parts_[height] >= col) ++height;
    conj.push_back(height);
  }
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(n - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n == 0 ? 1 : n, acc, out);
  return out;  // recursion emits descending lexicographic order
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_partition() const {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) return false;
  return true;
}

Partition Composition::to_partition() const {
  if (!is_partition()) throw std::runtime_error("composition " + str() + " is not a partition");
  return Partition(parts_);
}

std::string Composition::str() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Dominance dominance_compare(const Composition& a, const Composition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance_compare: unequal totals " + a.str() + " vs " + b.str());
  size_t len = std::max(a.parts().size(), b.parts().size());
  bool geq = true, leq = true;
  int pa = 0, pb = 0;
  for (size_t i = 0; i < len; ++i) {
    pa += i < a.parts().size() ? a.parts()[i] : 0;
    pb += i < b.parts().size() ? b.parts()[i] : 0;
    if (pa < pb) geq = false;
    if (pa > pb) leq = false;
  }
  if (geq && leq) return Dominance::Equal;
  if (geq) return Dominance::Greater;
  if (leq) return Dominance::Less;
  return Dominance::Incomparable;
}

Dominance dominance_compare(const Partition& a, const Partition& b) {
  return dominance_compare(Composition(a.parts()), Composition(b.parts()));
}

bool dominates(const Composition& a, const Composition& b) {
  Dominance d = dominance_compare(a, b);
  return d == Dominance::Equal || d == Dominance::Greater;
}

Composition composition_from_descent_set(const std::vector<int>& descents, int n) {
  if (n < 1) throw std::invalid_argument("composition_from_descent_set: n must be positive");
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= n)
      throw std::invalid_argument("descent set must be strictly increasing inside [n-1]");
    parts.push_back(d - prev);
    prev = d;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::vector<int> descent_set_of_composition(const Composition& alpha) {
  std::vector<int> out;
  int sum = 0;
  for (size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
    sum += alpha.parts()[i];
    out.push_back(sum);
  }
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("skew shape: inner " + inner_.str() +
                                " not contained in outer " + outer_.str());
}

SkewShape SkewShape::parse(const std::string& text) {
  std::string t = strip(text);
  std::vector<std::string> sides = split_top_level(t, '/');
  if (sides.size() == 1) return SkewShape(Partition::parse(sides[0]));
  if (sides.size() == 2)
    return SkewShape(Partition::parse(sides[0]), Partition::parse(sides[1]));
  throw std::invalid_argument("bad skew shape '" + text + "'");
}

bool SkewShape::has_cell(Cell c) const {
  if (c.row < 1 || c.row > outer_.length()) return false;
  return c.col > inner_.part(c.row) && c.col <= outer_.part(c.row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int row = 1; row <= outer_.length(); ++row)
    for (int col = inner_.part(row) + 1; col <= outer_.part(row); ++col)
      out.push_back({col, row});
  std::stable_sort(out.begin(), out.end(), [](Cell a, Cell b) {
    if (content(a) != content(b)) return content(a) < content(b);
    return a.row < b.row;
  });
  return out;
}

std::string SkewShape::str() const {
  if (straight()) return outer_.str();
  return outer_.str() + "/" + inner_.str();
}

TupleShape::TupleShape(std::vector<SkewShape> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("tuple shape needs k >= 1 components");
}

TupleShape TupleShape::parse(const std::string& text) {
  std::string t = unwrap(text);
  std::vector<SkewShape> comps;
  if (!strip(t).empty()) {
    for (const std::string& piece : split_top_level(t, ','))
      comps.push_back(SkewShape::parse(piece));
  } else {
    comps.push_back(SkewShape{});
  }
  return TupleShape(std::move(comps));
}

int TupleShape::total_size() const {
  int s = 0;
  for (const auto& c : components_) s += c.size();
  return s;
}

std::string TupleShape::str() const {
  auto component_str = [](const SkewShape& c) {
    std::string o = c.outer().empty() ? "()" : "(" + c.outer().str() + ")";
    if (c.straight()) return o;
    return o + "/(" + c.inner().str() + ")";
  };
  std::string out = "(";
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ",";
    out += component_str(components_[i]);
  }
  out += ")";
  return out;
}

}  // namespace deg
