#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zbeta/algebra/rational_fn.hpp"
#include "zbeta/errors.hpp"
#include "zbeta/label.hpp"

namespace zbeta {

enum class LabelKind { tail, head };

using EntryMap = std::map<std::pair<Label, Label>, RationalFn>;  // (tail, head) -> value

// A beta-calculus array: corner omega, tail rows, head columns, and
// rational-function entries. Only nonzero entries are stored. Tail and head
// labels are independent namespaces. Label order is presentation only.
class BetaElement {
 public:
  BetaElement() : omega_(1) {}

  BetaElement(RationalFn omega, std::vector<Label> tails, std::vector<Label> heads, EntryMap entries = {})
      : omega_(std::move(omega)), tails_(std::move(tails)), heads_(std::move(heads)), entries_(std::move(entries)) {
    require_distinct(tails_, "tail");
    require_distinct(heads_, "head");
    std::erase_if(entries_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [key, value] : entries_)
      if (!has_tail(key.first) || !has_head(key.second))
        throw LabelError("entry (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                         ") outside the label sets");
#ifdef ZBETA_CHECK_INVARIANTS
    check_invariants();
#endif
  }

  const RationalFn& omega() const { return omega_; }
  const std::vector<Label>& tails() const { return tails_; }
  const std::vector<Label>& heads() const { return heads_; }
  const EntryMap& entries() const { return entries_; }

  bool has_tail(Label x) const { return std::find(tails_.begin(), tails_.end(), x) != tails_.end(); }
  bool has_head(Label x) const { return std::find(heads_.begin(), heads_.end(), x) != heads_.end(); }
  bool has(LabelKind kind, Label x) const { return kind == LabelKind::tail ? has_tail(x) : has_head(x); }

  RationalFn entry(Label t, Label h) const {
    auto it = entries_.find({t, h});
    return it == entries_.end() ? RationalFn() : it->second;
  }

  bool matrix_is_zero() const { return entries_.empty(); }

  // Every strand variable T_i in omega or an entry has i among the tails.
  bool satisfies_variable_bijection() const {
    auto ok = [&](const LaurentPoly& p) {
      for (const auto& v : p.variables())
        if (v.is_strand() && !has_tail(v.index())) return false;
      return true;
    };
    auto ok_rf = [&](const RationalFn& f) { return ok(f.num()) && ok(f.den()); };
    if (!ok_rf(omega_)) return false;
    for (const auto& [key, value] : entries_)
      if (!ok_rf(value)) return false;
    return true;
  }

  void check_invariants() const {
    if (!satisfies_variable_bijection())
      throw Error("invariant violated: strand variable without a matching tail label");
  }

 private:
  static void require_distinct(std::vector<Label> labels, const char* kind) {
    std::sort(labels.begin(), labels.end());
    auto it = std::adjacent_find(labels.begin(), labels.end());
    if (it != labels.end()) throw LabelError(std::string("duplicate ") + kind + " label " + std::to_string(*it));
  }

  RationalFn omega_;
  std::vector<Label> tails_;
  std::vector<Label> heads_;
  EntryMap entries_;
};

// Semantic equality: label sets compared as sets, values by rational-function
// equality, absent entries read as zero.
inline bool beta_eq(const BetaElement& a, const BetaElement& b) {
  auto sorted = [](std::vector<Label> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(a.tails()) != sorted(b.tails()) || sorted(a.heads()) != sorted(b.heads())) return false;
  if (!(a.omega() == b.omega())) return false;
  for (const auto& [key, value] : a.entries())
    if (!(value == b.entry(key.first, key.second))) return false;
  for (const auto& [key, value] : b.entries())
    if (!a.entries().contains(key)) return false;  // nonzero in b, zero in a
  return true;
}

}  // namespace zbeta
