#pragma once

#include <random>
#include <string>
#include <vector>

#include "zbeta/betacalc/io.hpp"
#include "zbeta/betacalc/ops.hpp"
#include "zbeta/metamonoid/concepts.hpp"

namespace zbeta {

// The beta calculus as a meta-bicrossed instance for the axiom harness.
struct BetaInstance {
  using Element = BetaElement;
  Element tm(const Element& p, Label x, Label y, Label z) const { return zbeta::tm(p, x, y, z); }
  Element hm(const Element& p, Label x, Label y, Label z) const { return zbeta::hm(p, x, y, z); }
  Element sw(const Element& p, Label x, Label y) const { return zbeta::sw(p, x, y); }
  Element tail_unit(const Element& p, Label x) const { return insert_unit(p, LabelKind::tail, x); }
  Element head_unit(const Element& p, Label x) const { return insert_unit(p, LabelKind::head, x); }
  Element tail_erase(const Element& p, Label x) const { return erase(p, LabelKind::tail, x); }
  Element head_erase(const Element& p, Label x) const { return erase(p, LabelKind::head, x); }
  Element tail_rename(const Element& p, Label x, Label y) const { return relabel(p, LabelKind::tail, x, y); }
  Element head_rename(const Element& p, Label x, Label y) const { return relabel(p, LabelKind::head, x, y); }
  Element unite(const Element& p, const Element& q) const { return beta_union(p, q); }
  bool equal(const Element& p, const Element& q) const { return beta_eq(p, q); }
  std::string render(const Element& p) const { return to_json(p).dump(); }
};

static_assert(MetaBicrossed<BetaInstance>);

// Negative control: sw updates omega and row x but leaves the column and the
// remaining block untouched.
struct BrokenSwapInstance : BetaInstance {
  Element sw(const Element& p, Label x, Label y) const {
    const RationalFn alpha = p.entry(x, y);
    const RationalFn eps = RationalFn(1) + alpha;
    RationalFn gamma_sum;
    for (const auto& [key, v] : p.entries())
      if (key.second == y && key.first != x) gamma_sum += v;
    const RationalFn c = RationalFn(1) + gamma_sum / eps;
    EntryMap entries = p.entries();
    for (auto& [key, v] : entries)
      if (key.first == x) v = v * c;
    return BetaElement(p.omega() * eps, p.tails(), p.heads(), std::move(entries));
  }
};

static_assert(MetaBicrossed<BrokenSwapInstance>);

namespace detail {

// Labels spelled with letters only (digit d -> 'a' + d), so they can appear
// inside free-symbol names.
inline std::string letters(Label l) {
  std::string s = std::to_string(l);
  for (char& c : s) c = static_cast<char>('a' + (c - '0'));
  return s;
}

}  // namespace detail

// Generic element: every entry (t,h) is its own free symbol, and omega is a
// free symbol named after the smallest label.
inline BetaElement symbolic_beta(const std::vector<Label>& tails, const std::vector<Label>& heads) {
  EntryMap entries;
  for (Label t : tails)
    for (Label h : heads)
      entries.emplace(std::pair{t, h},
                      RationalFn::var(VarId::symbol("a" + detail::letters(t) + "p" + detail::letters(h))));
  Label least = 0;
  bool any = false;
  for (const auto* ls : {&tails, &heads})
    for (Label l : *ls)
      if (!any || l < least) least = l, any = true;
  RationalFn omega = any ? RationalFn::var(VarId::symbol("w" + detail::letters(least))) : RationalFn(1);
  return BetaElement(omega, tails, heads, std::move(entries));
}

// Random element with small Laurent-polynomial entries in the strand
// variables of its own tails (so the variable bijection holds). Row t is a
// multiple of T_t - 1, like the values tangles produce; every entry then
// vanishes at T = 1, so 1 + entry never vanishes identically.
inline BetaElement random_beta(std::mt19937_64& rng, const std::vector<Label>& tails,
                               const std::vector<Label>& heads) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(-1, 1);
  auto poly = [&]() {
    std::vector<Term> terms;
    int n = static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
      std::vector<Factor> fs;
      for (Label t : tails)
        if (rng() % 3 == 0) fs.push_back({VarId::strand(t), exp(rng)});
      terms.push_back({Monomial(std::move(fs)), Integer(coeff(rng))});
    }
    return LaurentPoly::from_terms(std::move(terms));
  };
  EntryMap entries;
  for (Label t : tails)
    for (Label h : heads)
      if (rng() % 4 != 0)
        entries.emplace(std::pair{t, h}, RationalFn(poly() * (LaurentPoly::var(VarId::strand(t)) - LaurentPoly(1))));
  LaurentPoly omega = poly();
  if (omega.is_zero()) omega = LaurentPoly(1);
  return BetaElement(RationalFn(omega), tails, heads, std::move(entries));
}

}  // namespace zbeta
