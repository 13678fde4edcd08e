#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "zbeta/betacalc/element.hpp"

namespace zbeta {

enum class Sign { positive = 1, negative = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

namespace detail {

inline std::string lstr(Label x) { return std::to_string(x); }

inline void require_tail(const BetaElement& e, Label x) {
  if (!e.has_tail(x)) throw LabelError("no tail labelled " + lstr(x));
}
inline void require_head(const BetaElement& e, Label x) {
  if (!e.has_head(x)) throw LabelError("no head labelled " + lstr(x));
}

inline void require_merge_target(const std::vector<Label>& labels, Label x, Label y, Label z, const char* kind) {
  if (x == y) throw LabelError(std::string(kind) + " multiplication needs distinct labels, got " + lstr(x) + " twice");
  if (z != x && z != y && std::find(labels.begin(), labels.end(), z) != labels.end())
    throw LabelError(std::string(kind) + " label " + lstr(z) + " already present");
}

// Label list with x replaced by z and y removed.
inline std::vector<Label> merged_labels(const std::vector<Label>& labels, Label x, Label y, Label z) {
  std::vector<Label> out;
  out.reserve(labels.size());
  for (Label l : labels) {
    if (l == x)
      out.push_back(z);
    else if (l != y)
      out.push_back(l);
  }
  return out;
}

inline void add_to(EntryMap& m, std::pair<Label, Label> key, const RationalFn& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, v);
  if (!inserted) it->second += v;
}

}  // namespace detail

// Single-crossing element. o labels the over strand, u the under strand.
inline BetaElement r_element(Sign sign, Label o, Label u) {
  if (o == u) throw LabelError("crossing strands must differ, got " + detail::lstr(o) + " twice");
  RationalFn t = RationalFn::var(VarId::strand(o), sign == Sign::positive ? 1 : -1);
  return BetaElement(RationalFn(1), {o, u}, {o, u}, {{{o, u}, t - RationalFn(1)}});
}

inline BetaElement beta_union(const BetaElement& a, const BetaElement& b) {
  for (Label t : b.tails())
    if (a.has_tail(t)) throw LabelError("union of overlapping tail " + detail::lstr(t));
  for (Label h : b.heads())
    if (a.has_head(h)) throw LabelError("union of overlapping head " + detail::lstr(h));
  std::vector<Label> tails = a.tails(), heads = a.heads();
  tails.insert(tails.end(), b.tails().begin(), b.tails().end());
  heads.insert(heads.end(), b.heads().begin(), b.heads().end());
  EntryMap entries = a.entries();
  entries.insert(b.entries().begin(), b.entries().end());
  return BetaElement(a.omega() * b.omega(), std::move(tails), std::move(heads), std::move(entries));
}

// Tail multiplication: rows x and y summed into row z, then T_x, T_y -> T_z.
inline BetaElement tm(const BetaElement& e, Label x, Label y, Label z) {
  detail::require_tail(e, x);
  detail::require_tail(e, y);
  detail::require_merge_target(e.tails(), x, y, z, "tail");
  EntryMap summed;
  for (const auto& [key, v] : e.entries()) {
    Label t = (key.first == x || key.first == y) ? z : key.first;
    detail::add_to(summed, {t, key.second}, v);
  }
  const VarId tz = VarId::strand(z);
  VarMap map;
  if (x != z) map.push_back({VarId::strand(x), tz});
  if (y != z) map.push_back({VarId::strand(y), tz});
  EntryMap entries;
  for (auto& [key, v] : summed) {
    RationalFn s = substitute(v, map);
    if (!s.is_zero()) entries.emplace(key, std::move(s));
  }
  return BetaElement(substitute(e.omega(), map), detail::merged_labels(e.tails(), x, y, z), e.heads(),
                     std::move(entries));
}

// Head multiplication: columns a (label x) and b (label y) become
// a + b + <a> b in column z, where <a> is the column sum of a.
inline BetaElement hm(const BetaElement& e, Label x, Label y, Label z) {
  detail::require_head(e, x);
  detail::require_head(e, y);
  detail::require_merge_target(e.heads(), x, y, z, "head");
  RationalFn sum_a;
  for (const auto& [key, v] : e.entries())
    if (key.second == x) sum_a += v;
  EntryMap entries;
  for (const auto& [key, v] : e.entries()) {
    if (key.second == x) {
      detail::add_to(entries, {key.first, z}, v);
    } else if (key.second == y) {
      detail::add_to(entries, {key.first, z}, v + sum_a * v);
    } else {
      entries.emplace(key, v);
    }
  }
  return BetaElement(e.omega(), e.tails(), detail::merged_labels(e.heads(), x, y, z), std::move(entries));
}

// Swap at tail x and head y. With a = E[x,y], e = 1 + a, row rest b, column
// rest g and block d:
//   omega -> omega e,  a -> a (1 + <g>/e),  b -> b (1 + <g>/e),
//   g -> g/e,  d -> d - g b / e.
inline BetaElement sw(const BetaElement& e, Label x, Label y) {
  detail::require_tail(e, x);
  detail::require_head(e, y);
  const RationalFn alpha = e.entry(x, y);
  const RationalFn eps = RationalFn(1) + alpha;
  if (eps.is_zero())
    throw SingularSwap("swap at (" + detail::lstr(x) + "," + detail::lstr(y) + "): 1 + entry vanishes");
  if (alpha.is_zero()) {
    bool row_empty = true, column_empty = true;
    for (const auto& [key, v] : e.entries()) {
      if (key.first == x) row_empty = false;
      if (key.second == y) column_empty = false;
    }
    if (row_empty || column_empty) return e;  // e = 1 and g b = 0
  }
  const RationalFn inv_eps = eps.inverse();

  std::vector<std::pair<Label, RationalFn>> row;     // b, keyed by head
  std::vector<std::pair<Label, RationalFn>> column;  // g / e, keyed by tail
  RationalFn gamma_sum;
  EntryMap entries;
  for (const auto& [key, v] : e.entries()) {
    if (key.first == x && key.second == y) continue;
    if (key.first == x) {
      row.emplace_back(key.second, v);
    } else if (key.second == y) {
      gamma_sum += v;
      column.emplace_back(key.first, v * inv_eps);
    } else {
      entries.emplace(key, v);
    }
  }
  const RationalFn c = RationalFn(1) + gamma_sum * inv_eps;
  detail::add_to(entries, {x, y}, alpha * c);
  for (const auto& [h, b] : row) detail::add_to(entries, {x, h}, b * c);
  for (const auto& [t, g] : column) {
    detail::add_to(entries, {t, y}, g);
    for (const auto& [h, b] : row) detail::add_to(entries, {t, h}, -(g * b));
  }
  return BetaElement(e.omega() * eps, e.tails(), e.heads(), std::move(entries));
}

// gm(x,y->z) = sw(tail x, head y) // tm(x,y->z) // hm(x,y->z): the head of
// strand x is joined to the tail of strand y.
inline BetaElement gm(const BetaElement& e, Label x, Label y, Label z) {
  detail::require_tail(e, x);
  detail::require_tail(e, y);
  detail::require_head(e, x);
  detail::require_head(e, y);
  detail::require_merge_target(e.tails(), x, y, z, "tail");
  detail::require_merge_target(e.heads(), x, y, z, "head");
  return hm(tm(sw(e, x, y), x, y, z), x, y, z);
}

// A zero row (tail) or zero column (head) labelled x.
inline BetaElement insert_unit(const BetaElement& e, LabelKind kind, Label x) {
  if (e.has(kind, x)) throw LabelError("label " + detail::lstr(x) + " already present");
  std::vector<Label> tails = e.tails(), heads = e.heads();
  (kind == LabelKind::tail ? tails : heads).push_back(x);
  return BetaElement(e.omega(), std::move(tails), std::move(heads), e.entries());
}

// Head deletion drops the column. Tail deletion sets T_x = 1 and drops the row.
inline BetaElement erase(const BetaElement& e, LabelKind kind, Label x) {
  if (!e.has(kind, x)) throw LabelError("no label " + detail::lstr(x) + " to delete");
  std::vector<Label> tails = e.tails(), heads = e.heads();
  EntryMap entries;
  if (kind == LabelKind::head) {
    std::erase(heads, x);
    for (const auto& [key, v] : e.entries())
      if (key.second != x) entries.emplace(key, v);
    return BetaElement(e.omega(), std::move(tails), std::move(heads), std::move(entries));
  }
  std::erase(tails, x);
  const VarMap map{{VarId::strand(x), std::nullopt}};
  for (const auto& [key, v] : e.entries())
    if (key.first != x) detail::add_to(entries, key, substitute(v, map));
  return BetaElement(substitute(e.omega(), map), std::move(tails), std::move(heads), std::move(entries));
}

// Renames a label; renaming a tail also renames its variable T_x -> T_y.
inline BetaElement relabel(const BetaElement& e, LabelKind kind, Label x, Label y) {
  if (!e.has(kind, x)) throw LabelError("no label " + detail::lstr(x) + " to rename");
  if (e.has(kind, y)) throw LabelError("rename target " + detail::lstr(y) + " already present");
  std::vector<Label> tails = e.tails(), heads = e.heads();
  for (Label& l : kind == LabelKind::tail ? tails : heads)
    if (l == x) l = y;
  EntryMap entries;
  if (kind == LabelKind::head) {
    for (const auto& [key, v] : e.entries()) entries.emplace(std::pair{key.first, key.second == x ? y : key.second}, v);
    return BetaElement(e.omega(), std::move(tails), std::move(heads), std::move(entries));
  }
  const VarMap map{{VarId::strand(x), VarId::strand(y)}};
  for (const auto& [key, v] : e.entries())
    entries.emplace(std::pair{key.first == x ? y : key.first, key.second}, substitute(v, map));
  return BetaElement(substitute(e.omega(), map), std::move(tails), std::move(heads), std::move(entries));
}

}  // namespace zbeta
