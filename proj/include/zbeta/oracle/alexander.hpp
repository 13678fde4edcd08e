#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "zbeta/algebra/expr.hpp"
#include "zbeta/algebra/integer.hpp"
#include "zbeta/algebra/rational_fn.hpp"
#include "zbeta/errors.hpp"
#include "zbeta/tangle/pd.hpp"

namespace zbeta {

// Dense polynomial in one variable, c[i] the coefficient of T^i. Kept apart
// from the multivariate arithmetic used by the beta calculus.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Integer& a) { return UPoly(std::vector<Integer>{a}); }
  static UPoly monomial(const Integer& a, std::size_t k) {
    std::vector<Integer> c(k + 1);
    c[k] = a;
    return UPoly(std::move(c));
  }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend bool operator==(const UPoly&, const UPoly&) = default;

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }

  // Exact quotient; throws if b does not divide a over Z.
  friend UPoly exact_quotient(UPoly a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw Error("inexact polynomial division");
    std::vector<Integer> q(a.c_.size() - b.c_.size() + 1);
    const Integer& lead = b.c_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const Integer& top = a.c_[k + b.degree()];
      if (top % lead != 0) throw Error("inexact polynomial division");
      Integer f = top / lead;
      for (std::size_t j = 0; j < b.c_.size(); ++j) a.c_[k + j] -= f * b.c_[j];
      q[k] = std::move(f);
    }
    for (const auto& x : a.c_)
      if (x != 0) throw Error("inexact polynomial division");
    return UPoly(std::move(q));
  }

  Integer evaluate(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

using UMatrix = std::vector<std::vector<UPoly>>;

// Fraction-free Gaussian elimination.
inline UPoly bareiss_determinant(UMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(1);
  UPoly prev = UPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Laplace expansion along the first row; exponential, for small checks.
inline UPoly cofactor_determinant(const UMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(1);
  if (n == 1) return m[0][0];
  UPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    UMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<UPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    UPoly term = m[0][j] * cofactor_determinant(minor);
    total = j % 2 ? total - term : total + term;
  }
  return total;
}

// Crossing-by-arc matrix of a knot diagram. Rows of negative crossings are
// multiplied by T so that all entries are polynomials; `shift` counts them.
struct AlexanderMatrix {
  UMatrix rows;
  int shift = 0;
  std::size_t arcs = 0;
};

inline AlexanderMatrix alexander_matrix(const PDCode& pd) {
  const std::size_t n = pd.size();
  if (pd.components().size() != 1)
    throw MultiComponentError("the Alexander oracle takes knots; this diagram has " +
                              std::to_string(pd.components().size()) + " components");
  std::map<Label, Label> parent;
  auto find = [&](Label e) {
    while (parent.at(e) != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const auto& x : pd.crossings())
    for (Label e : x) parent[e] = e;
  for (const auto& s : pd.sites()) parent[find(s.over_in)] = find(s.over_out);
  std::map<Label, std::size_t> arc;
  for (const auto& [e, unused] : parent) {
    const Label r = find(e);
    if (!arc.count(r)) arc.emplace(r, arc.size());
  }
  AlexanderMatrix out;
  out.arcs = arc.size();
  out.rows.assign(n, std::vector<UPoly>(arc.size()));
  const UPoly one = UPoly::constant(1), t = UPoly::monomial(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = pd.sites()[k];
    // out_under = T^s in_under + (1 - T^s) over, scaled by T when s = -1
    const bool pos = s.sign == Sign::positive;
    if (!pos) ++out.shift;
    auto& row = out.rows[k];
    row[arc.at(find(s.under_in))] = row[arc.at(find(s.under_in))] + (pos ? t : one);
    row[arc.at(find(s.over_in))] = row[arc.at(find(s.over_in))] + (pos ? one - t : t - one);
    row[arc.at(find(s.under_out))] = row[arc.at(find(s.under_out))] - (pos ? one : t);
  }
  return out;
}

inline UMatrix delete_row_column(const UMatrix& m, std::size_t row, std::size_t col) {
  UMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<UPoly> r;
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

// Laurent polynomial in one variable: T^low * p.
struct ULaurent {
  int low = 0;
  UPoly poly;
};

inline const VarId& alexander_variable() {
  static const VarId v = VarId::symbol("T");
  return v;
}

inline LaurentPoly to_laurent(const ULaurent& p, const VarId& v = alexander_variable()) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.poly.coeffs().size(); ++i)
    if (p.poly.coeffs()[i] != 0)
      terms.push_back({Monomial::of(v, p.low + static_cast<int>(i)), p.poly.coeffs()[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

enum class DeterminantMethod { bareiss, cofactor };

// Determinant of the matrix with one row and one column removed (defaults:
// the last of each).
inline ULaurent alexander_minor(const PDCode& pd, std::optional<std::size_t> row = {},
                                std::optional<std::size_t> col = {},
                                DeterminantMethod method = DeterminantMethod::bareiss) {
  if (pd.components().size() != 1)
    throw MultiComponentError("the Alexander oracle takes knots; this diagram has " +
                              std::to_string(pd.components().size()) + " components");
  if (pd.size() == 0) return {0, UPoly::constant(1)};
  AlexanderMatrix a = alexander_matrix(pd);
  const UMatrix minor = delete_row_column(a.rows, row.value_or(a.rows.size() - 1), col.value_or(a.arcs - 1));
  UPoly d = method == DeterminantMethod::bareiss ? bareiss_determinant(minor) : cofactor_determinant(minor);
  return {-a.shift, std::move(d)};
}

inline LaurentPoly wirtinger_alexander(const PDCode& pd) { return to_laurent(alexander_minor(pd)); }

// Representative of p up to units +-T^k: lowest exponent 0, lowest coefficient
// positive. Result uses p's variable.
inline LaurentPoly canonical_unit_form(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const auto vars = p.variables();
  if (vars.size() > 1) throw Error("canonical_unit_form takes a polynomial in one variable");
  if (vars.empty()) return p.trailing().coeff < 0 ? -p : p;
  const VarId& v = vars[0];
  int low = p.terms().front().mono.exponent(v);
  for (const auto& t : p.terms()) low = std::min(low, t.mono.exponent(v));
  LaurentPoly q = p * LaurentPoly::var(v, -low);
  Integer lowest = 0;
  for (const auto& t : q.terms())
    if (t.mono.is_one()) lowest = t.coeff;
  return lowest < 0 ? -q : q;
}

// Coefficients of the canonical form, lowest degree first.
inline std::vector<Integer> unit_canonical_coefficients(const LaurentPoly& p) {
  const LaurentPoly c = canonical_unit_form(p);
  const auto vars = c.variables();
  std::vector<Integer> out;
  for (const auto& t : c.terms()) {
    const int e = vars.empty() ? 0 : t.mono.exponent(vars[0]);
    if (static_cast<int>(out.size()) <= e) out.resize(e + 1);
    out[e] = t.coeff;
  }
  return out;
}

// True when a and b agree up to a unit +-T^k; the variable names may differ.
inline bool compare_up_to_units(const RationalFn& a, const LaurentPoly& b) {
  if (!a.is_polynomial())
    throw NonMonomialDenominator("denominator " + render_poly(a.den()) + " is not a monomial");
  return unit_canonical_coefficients(a.num()) == unit_canonical_coefficients(b);
}

}  // namespace zbeta
