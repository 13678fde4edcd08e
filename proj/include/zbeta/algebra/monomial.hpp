#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "zbeta/algebra/var.hpp"

namespace zbeta {

struct Factor {
  VarId var;
  int exp;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Laurent monomial: sparse exponent vector, sorted by variable, no zero
// exponents stored.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) { canonicalize(); }

  static Monomial of(VarId var, int exp = 1) {
    Monomial m;
    if (exp != 0) m.factors_.push_back({var, exp});
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.exp;
    return d;
  }

  int exponent(const VarId& var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const Factor& f, const VarId& v) { return f.var < v; });
    return (it != factors_.end() && it->var == var) ? it->exp : 0;
  }

  bool has_negative_exponent() const {
    return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp < 0; });
  }

  Monomial inverse() const {
    Monomial m = *this;
    for (auto& f : m.factors_) f.exp = -f.exp;
    return m;
  }

  // Copy with the factor of `var` removed.
  Monomial without(const VarId& var) const {
    Monomial m;
    m.factors_.reserve(factors_.size());
    for (const auto& f : factors_)
      if (!(f.var == var)) m.factors_.push_back(f);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->var < i->var) {
        out.factors_.push_back(*j++);
      } else {
        int e = i->exp + j->exp;
        if (e != 0) out.factors_.push_back({i->var, e});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

  // Componentwise minimum with an implicit zero exponent for absent variables.
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
        if (i->exp < 0) out.factors_.push_back(*i);
        ++i;
      } else if (i == a.factors_.end() || j->var < i->var) {
        if (j->exp < 0) out.factors_.push_back(*j);
        ++j;
      } else {
        int e = std::min(i->exp, j->exp);
        if (e != 0) out.factors_.push_back({i->var, e});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lexicographic: total degree first, then the exponent of the
  // smallest variable is the most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
        return i->exp <=> 0;
      }
      if (i == a.factors_.end() || j->var < i->var) {
        return 0 <=> j->exp;
      }
      if (i->exp != j->exp) return i->exp <=> j->exp;
      ++i;
      ++j;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += '*';
      out += f.var.to_string();
      if (f.exp != 1) out += '^' + std::to_string(f.exp);
    }
    return out;
  }

 private:
  void canonicalize() {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.var < b.var; });
    std::vector<Factor> merged;
    merged.reserve(factors_.size());
    for (const auto& f : factors_) {
      if (!merged.empty() && merged.back().var == f.var)
        merged.back().exp += f.exp;
      else
        merged.push_back(f);
    }
    std::erase_if(merged, [](const Factor& f) { return f.exp == 0; });
    factors_ = std::move(merged);
  }

  std::vector<Factor> factors_;
};

}  // namespace zbeta
