#include "deg/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "deg/involutions.hpp"

namespace deg {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_[0] = c;
}

QPoly::QPoly(const Int& c) {
  if (c != 0) coeffs_[0] = c;
}

QPoly QPoly::q_power(int e, Int coeff) {
  if (e < 0) throw std::invalid_argument("q exponents must be nonnegative");
  QPoly p;
  if (coeff != 0) p.coeffs_[e] = std::move(coeff);
  return p;
}

bool QPoly::nonnegative() const {
  for (const auto& [e, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

Int QPoly::at(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int QPoly::eval(const Int& q) const {
  Int total = 0;
  for (const auto& [e, c] : coeffs_) {
    Int term = c;
    for (int i = 0; i < e; ++i) term *= q;
    total += term;
  }
  return total;
}

void QPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] -= c;
  trim();
  return *this;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) out.coeffs_[e1 + e2] += c1 * c2;
  out.trim();
  return out;
}

std::string QPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int abs_c = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (e == 0) {
      os << abs_c;
    } else {
      if (abs_c != 1) os << abs_c << '*';
      os << 'q';
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

void QSymExpansion::add(const Signature& sigma, const QPoly& c) {
  if (sigma.length() != std::max(0, degree_ - 1))
    throw std::invalid_argument("signature length does not match expansion degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly QSymExpansion::coefficient(const Signature& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? QPoly() : it->second;
}

QSymExpansion& QSymExpansion::operator+=(const QSymExpansion& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch in QSym sum");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

QSymExpansion& QSymExpansion::operator-=(const QSymExpansion& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch in QSym difference");
  for (const auto& [s, c] : o.terms_) add(s, QPoly() - c);
  return *this;
}

QSymExpansion QSymExpansion::scaled(const QPoly& c) const {
  QSymExpansion out(degree_);
  if (c.is_zero()) return out;
  for (const auto& [s, p] : terms_) out.add(s, p * c);
  return out;
}

namespace {

// "s[3,1]", "q*s[3,1]", "2*s[3,1]", "3*q^2*s[3,1]", "(q^2+q)*s[3,1]".
void print_scaled(std::ostream& os, const QPoly& c, const std::string& basis_term) {
  if (c.coeffs().size() == 1) {
    auto [e, v] = *c.coeffs().begin();
    if (v != 1) os << v << '*';
    if (e == 1) os << "q*";
    else if (e > 1) os << "q^" << e << '*';
  } else {
    os << '(' << c.str() << ")*";
  }
  os << basis_term;
}

}  // namespace

std::string QSymExpansion::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    print_scaled(os, c, "Q[" + s.str() + "]");
  }
  return os.str();
}

bool SchurExpansion::nonnegative() const {
  for (const auto& [p, c] : terms)
    if (!c.nonnegative()) return false;
  return true;
}

QPoly SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? QPoly() : it->second;
}

std::string SchurExpansion::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms) {
    if (!first) os << " + ";
    first = false;
    print_scaled(os, c, "s[" + p.str() + "]");
  }
  if (first) os << "0";
  if (!residual.is_zero()) os << "  [residual: " << residual.str() << "]";
  return os.str();
}

QSymExpansion schur_in_Q(const Partition& p) {
  static std::mutex mu;
  static std::map<Partition, QSymExpansion> memo;
  {
    std::scoped_lock lock(mu);
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
  }
  QSymExpansion out(p.size());
  for (const StandardFilling& t : enumerate_standard(SkewShape(p)))
    out.add(descent_signature(t), QPoly(1));
  std::scoped_lock lock(mu);
  return memo.try_emplace(p, std::move(out)).first->second;
}

SchurExpansion extract_schur(QSymExpansion f) {
  SchurExpansion out;
  out.degree = f.degree();
  for (const Partition& lambda : partitions_of(f.degree())) {
    QPoly c = f.coefficient(superstandard_signature(lambda));
    if (c.is_zero()) continue;
    out.terms.emplace(lambda, c);
    f -= schur_in_Q(lambda).scaled(c);
  }
  out.residual = std::move(f);
  return out;
}

namespace {

void monomial_rec(const Signature& sigma, int n, int num_vars, int pos, int prev_var,
                  std::vector<int>& expo, const Int& mult, Monomials& out) {
  if (pos == n) {
    out[expo] += mult;
    return;
  }
  int lo = prev_var;
  if (pos > 0 && sigma[pos] == -1) ++lo;  // strict rise forced at -1 positions
  for (int v = std::max(1, lo); v <= num_vars; ++v) {
    ++expo[v - 1];
    monomial_rec(sigma, n, num_vars, pos + 1, v, expo, mult, out);
    --expo[v - 1];
  }
}

}  // namespace

Monomials evaluate_monomials(const QSymExpansion& f, int num_vars, const Int& q_value) {
  if (num_vars < 1) throw std::invalid_argument("evaluate_monomials needs >= 1 variable");
  Monomials out;
  for (const auto& [sigma, c] : f.terms()) {
    Int mult = c.eval(q_value);
    if (mult == 0) continue;
    std::vector<int> expo(num_vars, 0);
    monomial_rec(sigma, f.degree(), num_vars, 0, 1, expo, mult, out);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Monomials schur_eval(const Partition& p, int num_vars) {
  Monomials out;
  for (const SemistandardFilling& t : enumerate_semistandard(SkewShape(p), num_vars))
    out[t.weight(num_vars)] += 1;
  return out;
}

Monomials monomial_product(const Monomials& a, const Monomials& b) {
  Monomials out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      if (eb.size() != ea.size()) throw std::invalid_argument("variable count mismatch");
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  return out;
}

SkewShape product_skew_shape(const Partition& top, const Partition& bottom, int extra_shift) {
  if (extra_shift < 0) throw std::invalid_argument("extra_shift must be >= 0");
  if (bottom.empty()) return SkewShape(top);
  if (top.empty() && extra_shift == 0) return SkewShape(bottom);
  int shift = top.part(1) + extra_shift;
  std::vector<int> outer, inner;
  for (int r = 1; r <= bottom.length(); ++r) {
    outer.push_back(bottom.part(r) + shift);
    inner.push_back(shift);
  }
  for (int r = 1; r <= top.length(); ++r) outer.push_back(top.part(r));
  return SkewShape(Partition(outer), Partition(inner));
}

SchurExpansion lr_coefficients(const Partition& mu, const Partition& nu) {
  SkewShape shape = product_skew_shape(mu, nu);
  if (shape.size() == 0) {
    SchurExpansion out;
    out.degree = 0;
    out.terms.emplace(Partition{}, QPoly(1));
    return out;
  }
  InvolutionFamily fam = InvolutionFamily::standard_tableaux(shape);
  return schur_expansion_from_DE(fam);
}

std::string qsym_to_json(const QSymExpansion& f) {
  nlohmann::ordered_json j;
  j["n"] = f.degree();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [sigma, c] : f.terms()) {
    nlohmann::ordered_json term;
    term["sigma"] = sigma.str();
    nlohmann::ordered_json coeff = nlohmann::ordered_json::object();
    for (const auto& [e, v] : c.coeffs()) {
      if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::runtime_error("coefficient too large for JSON output");
      coeff[std::to_string(e)] = static_cast<long long>(v);
    }
    term["coeff"] = std::move(coeff);
    j["terms"].push_back(std::move(term));
  }
  return j.dump(2) + "\n";
}

QSymExpansion qsym_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  QSymExpansion out(j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    Signature sigma = Signature::parse(term.at("sigma").get<std::string>());
    QPoly c;
    for (const auto& [e, v] : term.at("coeff").items())
      c += QPoly::q_power(std::stoi(e), Int(v.get<long long>()));
    out.add(sigma, c);
  }
  return out;
}

}  // namespace deg
