#pragma once

#include <utility>

#include "zbeta/algebra/laurent_poly.hpp"

namespace zbeta {

// Ratio of Laurent polynomials over Z.
//
// Stored reduced: num and den are coprime, den has no monomial content and a
// positive leading coefficient. Equality is still decided semantically by
// cross-multiplication, so the reduction is an optimisation only.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static RationalFn fraction(LaurentPoly num, LaurentPoly den) {
    RationalFn f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.normalize();
    return f;
  }

  static RationalFn var(VarId v, int exp = 1) { return RationalFn(LaurentPoly::var(v, exp)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFn operator-() const {
    RationalFn f = *this;
    f.num_ = -f.num_;
    return f;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) { return combine(a, b, false); }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return combine(a, b, true); }

  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFn(a.num_ * b.num_);
    // Cross-cancel first; inputs are reduced so the product then is too.
    LaurentPoly g1 = zbeta::gcd(a.num_, b.den_);
    LaurentPoly g2 = zbeta::gcd(b.num_, a.den_);
    RationalFn f;
    f.num_ = detail::divide_known(a.num_, g1) * detail::divide_known(b.num_, g2);
    f.den_ = detail::divide_known(a.den_, g2) * detail::divide_known(b.den_, g1);
    f.normalize_units();
    return f;
  }

  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

  RationalFn inverse() const {
    if (is_zero()) throw DivisionByZero();
    RationalFn f;
    f.num_ = den_;
    f.den_ = num_;
    f.normalize_units();
    return f;
  }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  // Semantic equality: a/b == c/d iff a*d == c*b.
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  static RationalFn combine(const RationalFn& a, const RationalFn& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    RationalFn f;
    if (a.den_ == b.den_) {
      f.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      f.den_ = a.den_;
    } else {
      LaurentPoly g = zbeta::gcd(a.den_, b.den_);
      LaurentPoly ad = detail::divide_known(a.den_, g);
      LaurentPoly bd = detail::divide_known(b.den_, g);
      f.num_ = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
      f.den_ = ad * b.den_;
    }
    f.normalize();
    return f;
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    if (!den_.is_monomial()) {
      LaurentPoly g = zbeta::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = detail::divide_known(num_, g);
        den_ = detail::divide_known(den_, g);
      }
    }
    normalize_units();
  }

  // Moves monomial content and integer content / sign of den into num.
  void normalize_units() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    Monomial m = den_.monomial_content();
    if (!m.is_one()) {
      Monomial inv = m.inverse();
      den_ = den_.times_monomial(inv);
      num_ = num_.times_monomial(inv);
    }
    Integer c = zbeta::gcd(den_.integer_content(), num_.integer_content());
    if (den_.leading().coeff < 0) c = -c;
    if (c != 1) {
      den_ = den_.divided_by(c);
      num_ = num_.divided_by(c);
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline RationalFn substitute(const RationalFn& f, const VarMap& map) {
  if (f.is_polynomial()) return RationalFn(substitute(f.num(), map));
  return RationalFn::fraction(substitute(f.num(), map), substitute(f.den(), map));
}

}  // namespace zbeta
