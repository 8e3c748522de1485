#include "deg/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace deg {

Signature::Signature(std::vector<int8_t> signs) : signs_(std::move(signs)) {
  for (int8_t s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("signature entries must be +-1");
}

Signature Signature::parse(const std::string& text) {
  std::vector<int8_t> signs;
  for (char ch : text) {
    if (ch == '+') signs.push_back(1);
    else if (ch == '-') signs.push_back(-1);
    else if (ch == ' ') continue;
    else throw std::invalid_argument("bad signature character in '" + text + "'");
  }
  return Signature(std::move(signs));
}

std::vector<int> Signature::descent_set() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i)
    if ((*this)[i] == -1) out.push_back(i);
  return out;
}

Composition Signature::alpha() const {
  return composition_from_descent_set(descent_set(), length() + 1);
}

Signature Signature::negated() const {
  std::vector<int8_t> s = signs_;
  for (auto& v : s) v = -v;
  return Signature(std::move(s));
}

Signature Signature::truncated(int new_length) const {
  if (new_length < 0 || new_length > length())
    throw std::invalid_argument("bad signature truncation length");
  return Signature(std::vector<int8_t>(signs_.begin(), signs_.begin() + new_length));
}

std::string Signature::str() const {
  std::string out;
  for (int8_t s : signs_) out.push_back(s == 1 ? '+' : '-');
  return out;
}

long shifted_content(Cell c, int comp_index, int k) {
  if (comp_index < 0 || comp_index >= k)
    throw std::invalid_argument("shifted_content: component index out of range");
  return static_cast<long>(k) * content(c) + comp_index;
}

ShapeLayout::ShapeLayout(TupleShape shape, bool tuple_form)
    : shape_(std::move(shape)), tuple_form_(tuple_form) {
  int k = shape_.k();
  for (int c = 0; c < k; ++c)
    for (Cell cell : shape_.components()[c].cells()) cells_.push_back({c, cell});
  std::sort(cells_.begin(), cells_.end(), [k](const TupleCell& a, const TupleCell& b) {
    long sa = shifted_content(a.cell, a.comp, k);
    long sb = shifted_content(b.cell, b.comp, k);
    if (sa != sb) return sa < sb;
    return a.cell.row < b.cell.row;  // same diagonal: southwest to northeast
  });
  shifted_.reserve(cells_.size());
  for (const TupleCell& c : cells_) shifted_.push_back(shifted_content(c.cell, c.comp, k));

  std::map<TupleCell, int> where;
  for (int i = 0; i < size(); ++i) where[cells_[i]] = i;
  auto lookup = [&](TupleCell c) {
    auto it = where.find(c);
    return it == where.end() ? -1 : it->second;
  };
  left_.resize(size());
  below_.resize(size());
  for (int i = 0; i < size(); ++i) {
    TupleCell c = cells_[i];
    left_[i] = lookup({c.comp, {c.cell.col - 1, c.cell.row}});
    below_[i] = lookup({c.comp, {c.cell.col, c.cell.row - 1}});
  }
}

std::shared_ptr<const ShapeLayout> ShapeLayout::of(const SkewShape& s) {
  return std::make_shared<const ShapeLayout>(TupleShape({s}), false);
}

std::shared_ptr<const ShapeLayout> ShapeLayout::of(const TupleShape& s) {
  return std::make_shared<const ShapeLayout>(s, true);
}

int ShapeLayout::index_of(const TupleCell& c) const {
  for (int i = 0; i < size(); ++i)
    if (cells_[i] == c) return i;
  return -1;
}

bool ShapeLayout::word_is_standard(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != size()) return false;
  std::vector<char> seen(size() + 1, 0);
  for (int v : word) {
    if (v < 1 || v > size() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < size(); ++i) {
    if (left_[i] >= 0 && word[left_[i]] >= word[i]) return false;
    if (below_[i] >= 0 && word[below_[i]] >= word[i]) return false;
  }
  return true;
}

const std::vector<int>& content_reading_word(const StandardFilling& t) { return t.word; }

Signature descent_signature(const StandardFilling& t) {
  int n = t.size();
  std::vector<int> pos(n + 2, 0);
  for (int p = 0; p < n; ++p) pos[t.word[p]] = p;
  std::vector<int8_t> signs;
  signs.reserve(std::max(0, n - 1));
  for (int i = 1; i < n; ++i) signs.push_back(pos[i] < pos[i + 1] ? 1 : -1);
  return Signature(std::move(signs));
}

namespace {

StandardFilling filling_from_cell_values(const LayoutPtr& layout,
                                         const std::function<int(TupleCell)>& value) {
  std::vector<int> word(layout->size());
  for (int i = 0; i < layout->size(); ++i) word[i] = value(layout->cells()[i]);
  StandardFilling t{layout, std::move(word)};
  if (!layout->word_is_standard(t.word))
    throw std::runtime_error("constructed filling is not standard");
  return t;
}

}  // namespace

StandardFilling superstandard(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("superstandard of empty partition");
  std::vector<int> row_start(p.length() + 1, 0);
  for (int r = 1; r <= p.length(); ++r) row_start[r] = (r > 1 ? row_start[r - 1] + p.part(r - 1) : 0);
  return filling_from_cell_values(ShapeLayout::of(SkewShape(p)), [&](TupleCell c) {
    return row_start[c.cell.row] + c.cell.col;
  });
}

StandardFilling substandard(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("substandard of empty partition");
  Partition conj = p.conjugate();
  std::vector<int> col_start(conj.length() + 1, 0);
  for (int c = 1; c <= conj.length(); ++c)
    col_start[c] = (c > 1 ? col_start[c - 1] + conj.part(c - 1) : 0);
  return filling_from_cell_values(ShapeLayout::of(SkewShape(p)), [&](TupleCell c) {
    return col_start[c.cell.col] + c.cell.row;
  });
}

Signature superstandard_signature(const Partition& p) {
  std::vector<int8_t> signs;
  for (int r = 1; r <= p.length(); ++r) {
    for (int j = 0; j < p.part(r) - 1; ++j) signs.push_back(1);
    if (r < p.length()) signs.push_back(-1);
  }
  return Signature(std::move(signs));
}

StandardFilling conjugate(const StandardFilling& t) {
  if (t.layout->k() != 1 || !t.layout->shape().components()[0].straight())
    throw std::invalid_argument("conjugate filling needs a straight shape");
  const SkewShape& s = t.layout->shape().components()[0];
  LayoutPtr layout = ShapeLayout::of(SkewShape(s.outer().conjugate()));
  std::map<std::pair<int, int>, int> entry;
  for (int i = 0; i < t.size(); ++i) {
    Cell c = t.layout->cells()[i].cell;
    entry[{c.row, c.col}] = t.word[i];  // transposed coordinates
  }
  return filling_from_cell_values(layout, [&](TupleCell c) {
    return entry.at({c.cell.col, c.cell.row});
  });
}

void for_each_standard(const LayoutPtr& layout,
                       const std::function<void(const std::vector<int>&)>& fn) {
  int n = layout->size();
  std::vector<int> word(n, 0);
  // Places values 1..n in increasing order; a cell is ready once its row and
  // column predecessors are filled.
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int value) {
    if (value > n) {
      fn(word);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      int l = layout->left_of(i), b = layout->below_of(i);
      if ((l >= 0 && !used[l]) || (b >= 0 && !used[b])) continue;
      used[i] = 1;
      word[i] = value;
      rec(value + 1);
      used[i] = 0;
      word[i] = 0;
    }
  };
  rec(1);
}

namespace {

std::vector<StandardFilling> enumerate_standard_impl(const LayoutPtr& layout, int max_cells) {
  if (layout->size() > max_cells)
    throw std::invalid_argument("enumerate_standard: shape has " +
                                std::to_string(layout->size()) + " cells, bound is " +
                                std::to_string(max_cells));
  std::vector<StandardFilling> out;
  for_each_standard(layout, [&](const std::vector<int>& w) { out.push_back({layout, w}); });
  std::sort(out.begin(), out.end(),
            [](const StandardFilling& a, const StandardFilling& b) { return a.word < b.word; });
  return out;
}

std::vector<SemistandardFilling> enumerate_semistandard_impl(const LayoutPtr& layout,
                                                             int max_entry) {
  if (max_entry < 1) throw std::invalid_argument("enumerate_semistandard: max_entry must be >= 1");
  int n = layout->size();
  // Visit cells row-major within each component so both predecessors of a
  // cell are assigned before it.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const TupleCell& ca = layout->cells()[a];
    const TupleCell& cb = layout->cells()[b];
    return std::tuple(ca.comp, ca.cell.row, ca.cell.col) <
           std::tuple(cb.comp, cb.cell.row, cb.cell.col);
  });
  std::vector<SemistandardFilling> out;
  std::vector<int> entries(n, 0);
  std::function<void(int)> rec = [&](int step) {
    if (step == n) {
      out.push_back({layout, entries});
      return;
    }
    int i = order[step];
    int lo = 1;
    if (layout->left_of(i) >= 0) lo = std::max(lo, entries[layout->left_of(i)]);
    if (layout->below_of(i) >= 0) lo = std::max(lo, entries[layout->below_of(i)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      entries[i] = v;
      rec(step + 1);
    }
    entries[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const SemistandardFilling& a, const SemistandardFilling& b) {
    return a.entries < b.entries;
  });
  return out;
}

}  // namespace

std::vector<StandardFilling> enumerate_standard(const SkewShape& s, int max_cells) {
  return enumerate_standard_impl(ShapeLayout::of(s), max_cells);
}

std::vector<StandardFilling> enumerate_standard(const TupleShape& s, int max_cells) {
  return enumerate_standard_impl(ShapeLayout::of(s), max_cells);
}

std::vector<SemistandardFilling> enumerate_semistandard(const SkewShape& s, int max_entry) {
  return enumerate_semistandard_impl(ShapeLayout::of(s), max_entry);
}

std::vector<SemistandardFilling> enumerate_semistandard(const TupleShape& s, int max_entry) {
  return enumerate_semistandard_impl(ShapeLayout::of(s), max_entry);
}

int SemistandardFilling::max_entry() const {
  int m = 0;
  for (int v : entries) m = std::max(m, v);
  return m;
}

std::vector<int> SemistandardFilling::weight(int m) const {
  std::vector<int> w(m, 0);
  for (int v : entries) {
    if (v < 1 || v > m) throw std::runtime_error("entry outside weight range");
    ++w[v - 1];
  }
  return w;
}

namespace {

// Shared text renderer: rows bottom-to-top joined by "; ", inner cells ".",
// components joined by " | " inside "[ ... ]".
template <typename EntryOf>
std::string render(const LayoutPtr& layout, EntryOf entry_of) {
  const TupleShape& shape = layout->shape();
  std::vector<std::string> comp_strs;
  for (int c = 0; c < shape.k(); ++c) {
    const SkewShape& s = shape.components()[c];
    std::ostringstream os;
    for (int row = 1; row <= s.outer().length(); ++row) {
      if (row > 1) os << "; ";
      bool first = true;
      for (int col = 1; col <= s.outer().part(row); ++col) {
        if (!first) os << ' ';
        first = false;
        if (col <= s.inner().part(row)) {
          os << '.';
        } else {
          os << entry_of(layout->index_of({c, {col, row}}));
        }
      }
    }
    comp_strs.push_back(os.str());
  }
  if (!layout->tuple_form()) return comp_strs[0];
  std::string out = "[";
  for (size_t i = 0; i < comp_strs.size(); ++i) {
    if (i) out += " | ";
    out += comp_strs[i];
  }
  out += "]";
  return out;
}

}  // namespace

std::string StandardFilling::str() const {
  return render(layout, [&](int idx) { return word[idx]; });
}

std::string SemistandardFilling::str() const {
  return render(layout, [&](int idx) { return entries[idx]; });
}

StandardFilling StandardFilling::parse(const std::string& text) {
  std::string t = text;
  bool tuple_form = false;
  {
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty tableau text");
    t = t.substr(a, b - a + 1);
  }
  std::vector<std::string> comp_texts;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw std::invalid_argument("unbalanced tableau brackets");
    tuple_form = true;
    std::string inner = t.substr(1, t.size() - 2);
    std::string cur;
    for (char ch : inner) {
      if (ch == '|') {
        comp_texts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    comp_texts.push_back(cur);
  } else {
    comp_texts.push_back(t);
  }

  std::vector<SkewShape> comps;
  std::map<std::tuple<int, int, int>, int> values;  // (comp,col,row) -> entry
  for (size_t c = 0; c < comp_texts.size(); ++c) {
    std::vector<int> outer, inner;
    std::istringstream rows(comp_texts[c]);
    std::string row_text;
    int row = 0;
    std::vector<std::string> row_list;
    while (std::getline(rows, row_text, ';')) row_list.push_back(row_text);
    if (row_list.size() == 1 && row_list[0].find_first_not_of(" \t") == std::string::npos)
      row_list.clear();
    for (const std::string& rt : row_list) {
      ++row;
      std::istringstream cells(rt);
      std::string tok;
      int col = 0, dots = 0;
      bool entry_seen = false;
      while (cells >> tok) {
        ++col;
        if (tok == ".") {
          if (entry_seen) throw std::invalid_argument("inner '.' after an entry");
          ++dots;
        } else {
          entry_seen = true;
          values[{static_cast<int>(c), col, row}] = std::stoi(tok);
        }
      }
      if (col == 0) throw std::invalid_argument("empty tableau row");
      outer.push_back(col);
      inner.push_back(dots);
    }
    // Rows were given bottom-to-top and partitions want them the same way.
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    comps.emplace_back(Partition(outer), Partition(inner));
  }
  LayoutPtr layout = tuple_form ? ShapeLayout::of(TupleShape(comps))
                                : ShapeLayout::of(comps.at(0));
  std::vector<int> word(layout->size());
  for (int i = 0; i < layout->size(); ++i) {
    const TupleCell& tc = layout->cells()[i];
    auto it = values.find({tc.comp, tc.cell.col, tc.cell.row});
    if (it == values.end()) throw std::invalid_argument("missing entry in tableau text");
    word[i] = it->second;
  }
  StandardFilling f{layout, std::move(word)};
  if (!layout->word_is_standard(f.word))
    throw std::invalid_argument("tableau text is not a standard filling: " + text);
  return f;
}

}  // namespace deg
