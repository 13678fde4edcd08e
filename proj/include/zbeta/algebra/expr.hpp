#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "zbeta/algebra/rational_fn.hpp"

namespace zbeta {

namespace detail {

// Recursive-descent parser for
//   rational := sum ["/" sum]
//   sum      := product (("+"|"-") product)*
//   product  := signed_atom ("*" signed_atom)*
//   signed_atom := ["-"] atom
//   atom     := integer | var ["^" integer] | "(" rational ")"
//   var      := "T" nat | letter+
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RationalFn parse() {
    RationalFn f = rational();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFn rational() {
    RationalFn num = sum();
    if (!accept('/')) return num;
    std::size_t at = pos_;
    RationalFn den = sum();
    if (den.is_zero()) throw SyntaxError("division by zero", at);
    return num / den;
  }

  RationalFn sum() {
    RationalFn acc = product();
    while (true) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        return acc;
    }
  }

  RationalFn product() {
    RationalFn acc = signed_atom();
    while (accept('*')) acc *= signed_atom();
    return acc;
  }

  RationalFn signed_atom() {
    if (accept('-')) return -atom();
    return atom();
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int exponent() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    std::size_t at = pos_;
    std::string d = digits();
    if (d.empty()) fail("expected integer exponent");
    if (d.size() > 9) throw SyntaxError("exponent out of range", at);
    int e = std::stoi(d);
    return negative ? -e : e;
  }

  RationalFn atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFn f = rational();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFn(LaurentPoly(Integer(digits())));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      VarId v = variable();
      int e = 1;
      if (accept('^')) e = exponent();
      return RationalFn::var(v, e);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  VarId variable() {
    std::size_t start = pos_;
    if (text_[pos_] == 'T' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::string d = digits();
      if (d.size() > 9) throw SyntaxError("strand index out of range", start);
      return VarId::strand(static_cast<Label>(std::stoul(d)));
    }
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return VarId::symbol(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string render_term(const Term& t, bool first) {
  std::string out;
  Integer mag = t.coeff < 0 ? Integer(-t.coeff) : t.coeff;
  if (first)
    out = t.coeff < 0 ? "-" : "";
  else
    out = t.coeff < 0 ? " - " : " + ";
  if (t.mono.is_one()) return out + mag.str();
  if (mag != 1) out += mag.str() + "*";
  return out + t.mono.to_string();
}

}  // namespace detail

inline RationalFn parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

// Terms print highest first for ordinary polynomials and lowest first when a
// negative exponent occurs, so Laurent polynomials read from T^-k upward.
inline std::string render_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& ts = p.terms();
  if (p.has_negative_exponent()) {
    for (std::size_t i = 0; i < ts.size(); ++i) out += detail::render_term(ts[i], i == 0);
  } else {
    for (std::size_t i = ts.size(); i-- > 0;) out += detail::render_term(ts[i], i + 1 == ts.size());
  }
  return out;
}

inline std::string render_expr(const RationalFn& f) {
  if (f.is_polynomial()) return render_poly(f.num());
  std::string num = render_poly(f.num());
  std::string den = render_poly(f.den());
  if (f.num().size() > 1) num = "(" + num + ")";
  if (f.den().size() > 1 || !f.den().is_constant()) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace zbeta
