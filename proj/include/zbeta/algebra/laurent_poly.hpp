#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zbeta/algebra/integer.hpp"
#include "zbeta/algebra/monomial.hpp"
#include "zbeta/errors.hpp"

namespace zbeta {

struct Term {
  Monomial mono;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Variable substitution: each listed variable is replaced by another variable,
// or by the constant 1 when the target is empty. Unlisted variables are kept.
using VarMap = std::vector<std::pair<VarId, std::optional<VarId>>>;

// Sparse multivariate Laurent polynomial over Z. Terms are kept sorted in
// ascending graded-lex order with nonzero coefficients, so structural equality
// is mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c) {                    // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial(), c});
  }

  static LaurentPoly monomial(Monomial m, Integer c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static LaurentPoly var(VarId v, int exp = 1) { return monomial(Monomial::of(v, exp)); }

  static LaurentPoly from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  // Constant term (coefficient of the empty monomial).
  Integer constant_term() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return 0;
  }

  std::vector<VarId> variables() const {
    std::vector<VarId> vars;
    for (const auto& t : terms_)
      for (const auto& f : t.mono.factors()) vars.push_back(f.var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  bool has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.has_negative_exponent(); });
  }

  // Largest monomial dividing every term (componentwise minimum exponents,
  // absent variables counting as zero).
  Monomial monomial_content() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.front().mono;
    for (const auto& t : terms_) m = Monomial::gcd(m, t.mono);
    return m;
  }

  Integer integer_content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
      g = zbeta::gcd(g, t.coeff);
      if (g == 1) break;
    }
    return g;
  }

  int degree_in(const VarId& v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      int e = t.mono.exponent(v);
      d = first ? e : std::max(d, e);
      first = false;
    }
    return d;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.times_term(a.terms_[0]);
    if (b.is_monomial()) return a.times_term(b.terms_[0]);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(std::move(out));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly times_term(const Term& s) const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
    // Multiplying by a monomial preserves graded-lex order.
    return p;
  }

  LaurentPoly times_monomial(const Monomial& m) const { return times_term({m, 1}); }

  // Exact division of all coefficients by c (caller guarantees divisibility).
  LaurentPoly divided_by(const Integer& c) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff /= c;
    return p;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Coefficients by power of `v`, each with `v` removed.
  std::map<int, LaurentPoly> coefficients_in(const VarId& v) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coeff});
    std::map<int, LaurentPoly> out;
    for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
    return out;
  }

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly p;
    p.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->mono < j->mono)) {
        p.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->mono < i->mono) {
        p.terms_.push_back({j->mono, subtract ? Integer(-j->coeff) : j->coeff});
        ++j;
      } else {
        Integer c = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
        if (c != 0) p.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return p;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono)
        merged.back().coeff += t.coeff;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

inline LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

inline Monomial substitute(const Monomial& m, const VarMap& map) {
  std::vector<Factor> out;
  out.reserve(m.factors().size());
  for (const auto& f : m.factors()) {
    auto it = std::find_if(map.begin(), map.end(), [&](const auto& kv) { return kv.first == f.var; });
    if (it == map.end())
      out.push_back(f);
    else if (it->second)
      out.push_back({*it->second, f.exp});
  }
  return Monomial(std::move(out));
}

inline LaurentPoly substitute(const LaurentPoly& p, const VarMap& map) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({substitute(t.mono, map), t.coeff});
  return LaurentPoly::from_terms(std::move(out));
}

namespace detail {

// Division of polynomials with nonnegative exponents, where the divisor has
// no monomial content. Returns the quotient when it is exact.
inline std::optional<LaurentPoly> exact_divide_poly(LaurentPoly r, const LaurentPoly& b) {
  std::vector<Term> quotient;
  const Term& lead = b.leading();
  while (!r.is_zero()) {
    const Term& top = r.leading();
    Monomial m = top.mono / lead.mono;
    if (m.has_negative_exponent()) return std::nullopt;
    if (top.coeff % lead.coeff != 0) return std::nullopt;
    Term q{std::move(m), top.coeff / lead.coeff};
    r -= b.times_term(q);
    quotient.push_back(std::move(q));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace detail

// Exact division in the Laurent ring; empty when b does not divide a.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    const Term& t = b.leading();
    std::vector<Term> out;
    out.reserve(a.size());
    Monomial inv = t.mono.inverse();
    for (const auto& s : a.terms()) {
      if (s.coeff % t.coeff != 0) return std::nullopt;
      out.push_back({s.mono * inv, s.coeff / t.coeff});
    }
    return LaurentPoly::from_terms(std::move(out));
  }
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  auto q = detail::exact_divide_poly(a.times_monomial(ma.inverse()), b.times_monomial(mb.inverse()));
  if (!q) return std::nullopt;
  return q->times_monomial(ma / mb);
}

namespace detail {

inline LaurentPoly positive_lead(LaurentPoly p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

inline LaurentPoly divide_known(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_one()) return a;
  auto q = exact_divide(a, b);
  if (!q) throw Error("internal: inexact division in gcd");
  return *q;
}

inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Divisibility in the polynomial ring (the quotient must not need negative
// exponents).
inline bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  auto q = exact_divide(p, d);
  return q && !q->has_negative_exponent();
}

// gcd of the coefficients of p viewed as a polynomial in v.
inline LaurentPoly content_in(const LaurentPoly& p, const VarId& v) {
  auto coeffs = p.coefficients_in(v);
  LaurentPoly g;
  for (const auto& [e, c] : coeffs) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in v, without the trailing lc(b) power.
inline LaurentPoly sparse_prem(LaurentPoly a, const LaurentPoly& b, const VarId& v) {
  const int db = b.degree_in(v);
  auto bc = b.coefficients_in(v);
  const LaurentPoly lc_b = bc.rbegin()->second;
  while (!a.is_zero()) {
    int da = a.degree_in(v);
    if (da < db) break;
    auto ac = a.coefficients_in(v);
    const LaurentPoly& lc_a = ac.rbegin()->second;
    a = lc_b * a - (lc_a * b).times_monomial(Monomial::of(v, da - db));
  }
  return a;
}

inline LaurentPoly primitive_part(const LaurentPoly& p, const VarId& v) {
  return positive_lead(divide_known(p, content_in(p, v)));
}

struct HeuristicGcdFailed {};

inline Integer max_norm(const LaurentPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) m = std::max(m, Integer(abs(t.coeff)));
  return m;
}

// p with the variable v set to the integer x (exponents of v are >= 0).
inline LaurentPoly evaluate_at(const LaurentPoly& p, const VarId& v, const Integer& x) {
  std::vector<Term> out;
  out.reserve(p.size());
  std::vector<Integer> powers{1};
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(v);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * x);
    out.push_back({t.mono.without(v), t.coeff * powers[e]});
  }
  return LaurentPoly::from_terms(std::move(out));
}

// Inverse of evaluate_at for polynomials whose coefficients are small
// compared to x: read the x-adic digits (symmetric residues) as powers of v.
inline LaurentPoly interpolate_at(LaurentPoly h, const VarId& v, const Integer& x) {
  std::vector<Term> out;
  const Integer half = x / 2;
  for (int k = 0; !h.is_zero(); ++k) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      Integer c = t.coeff % x;
      if (c < 0) c += x;
      if (c > half) c -= x;
      if (c != 0) digit.push_back({t.mono, c});
    }
    LaurentPoly g = LaurentPoly::from_terms(digit);
    for (auto& t : digit) out.push_back({t.mono * Monomial::of(v, k), std::move(t.coeff)});
    h = (h - g).divided_by(x);
  }
  return positive_lead(LaurentPoly::from_terms(std::move(out)));
}

// Heuristic gcd (Char, Geddes, Gonnet): evaluate one variable at a large
// integer, recurse, interpolate, and accept only if the candidate divides both
// inputs. Throws HeuristicGcdFailed when no evaluation point works.
inline LaurentPoly heuristic_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_constant() || b.is_constant())
    return LaurentPoly(zbeta::gcd(a.integer_content(), b.integer_content()));
  Integer content = zbeta::gcd(a.integer_content(), b.integer_content());
  LaurentPoly f = a.divided_by(content);
  LaurentPoly g = b.divided_by(content);

  std::vector<VarId> vars = f.variables();
  for (const auto& v : g.variables()) vars.push_back(v);
  const VarId v = *std::min_element(vars.begin(), vars.end());

  Integer fn = max_norm(f), gn = max_norm(g);
  Integer bound = 2 * std::min(fn, gn) + 29;
  Integer root = boost::multiprecision::sqrt(bound);
  Integer lf = fn / abs(f.leading().coeff), lg = gn / abs(g.leading().coeff);
  Integer x = std::max<Integer>(std::min<Integer>(bound, 99 * root), 2 * std::min(lf, lg) + 4);
  for (int attempt = 0; attempt < 6; ++attempt) {
    LaurentPoly ff = evaluate_at(f, v, x);
    LaurentPoly gg = evaluate_at(g, v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      LaurentPoly h = interpolate_at(heuristic_gcd(ff, gg), v, x);
      if (!h.is_zero()) {
        h = h.divided_by(h.integer_content());
        if (divides(h, f) && divides(h, g)) return h * LaurentPoly(content);
      }
    }
    x = 73794 * x * boost::multiprecision::sqrt(boost::multiprecision::sqrt(x)) / 27011;
  }
  throw HeuristicGcdFailed{};
}

// a, b: polynomials with nonnegative exponents.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  if (a.is_constant() || b.is_constant())
    return LaurentPoly(zbeta::gcd(a.integer_content(), b.integer_content()));
  if (a == b) return positive_lead(a);

  try {
    return positive_lead(heuristic_gcd(a, b));
  } catch (const HeuristicGcdFailed&) {
  }

  auto va = a.variables();
  auto vb = b.variables();
  for (const auto& v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return poly_gcd(content_in(a, v), b);
  for (const auto& v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return poly_gcd(a, content_in(b, v));

  if (a.size() <= b.size()) {
    if (divides(a, b)) return positive_lead(a);
  } else if (divides(b, a)) {
    return positive_lead(b);
  }

  // Main variable: the one of smallest degree keeps the remainder sequence short.
  VarId x = va.front();
  int best = std::max(a.degree_in(x), b.degree_in(x));
  for (const auto& v : va) {
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      x = v;
    }
  }

  LaurentPoly ca = content_in(a, x);
  LaurentPoly cb = content_in(b, x);
  LaurentPoly c = poly_gcd(ca, cb);
  LaurentPoly p = divide_known(a, ca);
  LaurentPoly q = divide_known(b, cb);
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);
  while (true) {
    LaurentPoly r = sparse_prem(p, q, x);
    if (r.is_zero()) return positive_lead(c * primitive_part(q, x));
    if (r.degree_in(x) == 0) return positive_lead(c);
    p = std::move(q);
    q = primitive_part(r, x);
  }
}

}  // namespace detail

// gcd up to units (±monomials). The result has no monomial content and a
// positive leading coefficient; gcd(0, 0) = 0.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return detail::positive_lead(b.times_monomial(b.monomial_content().inverse()));
  if (b.is_zero()) return detail::positive_lead(a.times_monomial(a.monomial_content().inverse()));
  return detail::poly_gcd(a.times_monomial(a.monomial_content().inverse()),
                          b.times_monomial(b.monomial_content().inverse()));
}

}  // namespace zbeta
