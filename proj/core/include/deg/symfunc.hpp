#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "deg/shapes.hpp"
#include "deg/tableaux.hpp"

namespace deg {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer polynomial in the single variable q.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT: constant polynomial
  explicit QPoly(const Int& c);
  static QPoly q_power(int e, Int coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool nonnegative() const;
  Int at(int e) const;
  Int eval(const Int& q) const;
  const std::map<int, Int>& coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator*(const QPoly& o) const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Descending exponents, e.g. "q^2+3*q" or "2".
  std::string str() const;

 private:
  void trim();
  std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
};

/// Expansion in the fundamental quasisymmetric basis, coefficients in Z[q].
class QSymExpansion {
 public:
  explicit QSymExpansion(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  void add(const Signature& sigma, const QPoly& c);
  const std::map<Signature, QPoly>& terms() const { return terms_; }
  QPoly coefficient(const Signature& sigma) const;
  bool is_zero() const { return terms_.empty(); }

  QSymExpansion& operator+=(const QSymExpansion& o);
  QSymExpansion& operator-=(const QSymExpansion& o);
  QSymExpansion scaled(const QPoly& c) const;
  friend bool operator==(const QSymExpansion&, const QSymExpansion&) = default;

  std::string str() const;

 private:
  int degree_;
  std::map<Signature, QPoly> terms_;
};

/// Schur expansion plus whatever quasisymmetric residual was left over by
/// greedy extraction. residual empty iff the input was in the Schur span.
struct SchurExpansion {
  int degree = 0;
  std::map<Partition, QPoly, DescLexLess> terms;
  QSymExpansion residual{0};

  bool in_schur_span() const { return residual.is_zero(); }
  bool nonnegative() const;
  QPoly coefficient(const Partition& p) const;
  std::string str() const;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

/// Gessel's expansion of a Schur function: one Q per standard tableau.
QSymExpansion schur_in_Q(const Partition& p);

/// Greedy triangular extraction against dominance order; whatever cannot be
/// matched by superstandard signatures lands in the residual.
SchurExpansion extract_schur(QSymExpansion f);

/// Exact monomial expansion, exponent vector (length num_vars) -> coefficient.
using Monomials = std::map<std::vector<int>, Int>;

Monomials evaluate_monomials(const QSymExpansion& f, int num_vars, const Int& q_value);
Monomials schur_eval(const Partition& p, int num_vars);
Monomials monomial_product(const Monomials& a, const Monomials& b);

/// The anchored skew diagram realizing s_top * s_bottom with the top factor
/// strictly northwest of the bottom one; extra_shift moves the bottom factor
/// further east (any shift gives the same dual equivalence classes).
SkewShape product_skew_shape(const Partition& top, const Partition& bottom, int extra_shift = 0);

/// Littlewood-Richardson coefficients via dual equivalence on the skew family.
SchurExpansion lr_coefficients(const Partition& mu, const Partition& nu);

/// QSym JSON: {"n": int, "terms": [{"sigma": "+-+", "coeff": {"0": 1}}]}.
std::string qsym_to_json(const QSymExpansion& f);
QSymExpansion qsym_from_json(const std::string& text);

}  // namespace deg
