#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "zbeta/tangle/pd.hpp"

namespace zbeta {

// A side of a crossing: crossing index and slot 0..3.
struct Dart {
  std::size_t crossing = 0;
  int slot = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

namespace detail {

inline Dart other_end(const PDCode& pd, Dart d) {
  const Label e = pd.crossings()[d.crossing][d.slot];
  for (std::size_t k = 0; k < pd.size(); ++k)
    for (int s = 0; s < 4; ++s)
      if (pd.crossings()[k][s] == e && (k != d.crossing || s != d.slot)) return {k, s};
  throw ValidationError("edge " + std::to_string(e) + " has one end", e);
}

inline Label max_label(const PDCode& pd) {
  Label m = 0;
  for (const auto& x : pd.crossings())
    for (Label e : x) m = std::max(m, e);
  return m;
}

// Slot of the crossing where `edge` ends (is incoming).
inline Dart incoming_dart(const PDCode& pd, Label edge) {
  for (std::size_t k = 0; k < pd.size(); ++k) {
    const auto& s = pd.sites()[k];
    if (s.under_in == edge) return {k, 0};
    if (s.over_in == edge) return {k, s.sign == Sign::positive ? 3 : 1};
  }
  throw ValidationError("no edge " + std::to_string(edge), edge);
}

}  // namespace detail

// Faces of the diagram as cycles of darts: leave along the edge at a dart,
// arrive at its other end, turn to the next slot counterclockwise.
inline std::vector<std::vector<Dart>> faces(const PDCode& pd) {
  const std::size_t n = pd.size();
  std::vector<std::array<Dart, 4>> other(n);
  for (std::size_t k = 0; k < n; ++k)
    for (int s = 0; s < 4; ++s) other[k][s] = detail::other_end(pd, {k, s});
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  std::vector<std::vector<Dart>> out;
  for (std::size_t k = 0; k < n; ++k)
    for (int s = 0; s < 4; ++s) {
      if (seen[k][s]) continue;
      std::vector<Dart> face;
      Dart d{k, s};
      while (!seen[d.crossing][d.slot]) {
        seen[d.crossing][d.slot] = true;
        face.push_back(d);
        const Dart o = other[d.crossing][d.slot];
        d = {o.crossing, (o.slot + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  return out;
}

// Connected pieces of the crossing graph.
inline std::size_t diagram_pieces(const PDCode& pd) {
  const std::size_t n = pd.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::map<Label, std::size_t> first;
  for (std::size_t k = 0; k < n; ++k)
    for (Label e : pd.crossings()[k]) {
      auto [it, fresh] = first.try_emplace(e, k);
      if (!fresh) parent[find(k)] = find(it->second);
    }
  std::size_t pieces = 0;
  for (std::size_t k = 0; k < n; ++k) pieces += find(k) == k;
  return pieces;
}

// Euler characteristic check: V - E + F = 1 + pieces with V = n, E = 2n.
inline bool is_planar(const PDCode& pd) {
  if (pd.size() == 0) return true;
  return faces(pd).size() == pd.size() + 1 + diagram_pieces(pd);
}

enum class KinkType { under_first_positive, under_first_negative, over_first_positive, over_first_negative };

// R1: a one-crossing loop inserted at the end of `edge`.
inline PDCode insert_kink(const PDCode& pd, Label edge, KinkType type) {
  if (pd.size() == 0) throw ValidationError("kink insertion needs an edge", edge);
  const Dart end = detail::incoming_dart(pd, edge);
  const Label f = detail::max_label(pd) + 1, g = f + 1;
  std::vector<PDCrossing> xs = pd.crossings();
  xs[end.crossing][end.slot] = g;
  switch (type) {
    case KinkType::under_first_positive: xs.push_back({edge, g, f, f}); break;
    case KinkType::under_first_negative: xs.push_back({edge, f, f, g}); break;
    case KinkType::over_first_positive: xs.push_back({f, f, g, edge}); break;
    case KinkType::over_first_negative: xs.push_back({f, edge, g, f}); break;
  }
  return PDCode(std::move(xs));
}

// R2: a finger of edge `over` pushed across edge `under`. Returns every
// planar result in which the two new crossings bound a bigon face (empty if
// the edges share no face).
inline std::vector<PDCode> r2_moves(const PDCode& pd, Label over, Label under) {
  std::vector<PDCode> out;
  if (over == under || pd.size() == 0) return out;
  const Dart over_end = detail::incoming_dart(pd, over);
  const Dart under_end = detail::incoming_dart(pd, under);
  const Label m1 = detail::max_label(pd) + 1, n1 = m1 + 1, m2 = m1 + 2, n2 = m1 + 3;
  for (Sign first_sign : {Sign::positive, Sign::negative})
    for (bool same_order : {true, false}) {
      std::vector<PDCrossing> xs = pd.crossings();
      xs[over_end.crossing][over_end.slot] = n1;
      xs[under_end.crossing][under_end.slot] = n2;
      CrossingSite p{first_sign, over, m1, same_order ? under : m2, same_order ? m2 : n2};
      CrossingSite q{flip(first_sign), m1, n1, same_order ? m2 : under, same_order ? n2 : m2};
      xs.push_back(pd_tuple(p));
      xs.push_back(pd_tuple(q));
      PDCode cand;
      try {
        cand = PDCode(std::move(xs));
      } catch (const OrientationError&) {
        continue;
      }
      if (!is_planar(cand)) continue;
      bool bigon = false;
      for (const auto& f : faces(cand)) {
        if (f.size() != 2) continue;
        Label a = cand.crossings()[f[0].crossing][f[0].slot], b = cand.crossings()[f[1].crossing][f[1].slot];
        if ((a == m1 && b == m2) || (a == m2 && b == m1)) bigon = true;
      }
      if (bigon) out.push_back(std::move(cand));
    }
  return out;
}

// Triangular faces on which a third Reidemeister move applies: three distinct
// crossings, one of the three face edges passing over at both ends.
inline std::vector<std::vector<Dart>> r3_faces(const PDCode& pd) {
  std::vector<std::vector<Dart>> out;
  for (auto& f : faces(pd)) {
    if (f.size() != 3) continue;
    if (f[0].crossing == f[1].crossing || f[1].crossing == f[2].crossing || f[0].crossing == f[2].crossing) continue;
    bool admissible = false;
    for (const Dart& d : f) {
      const Dart o = detail::other_end(pd, d);
      if (d.slot % 2 == 1 && o.slot % 2 == 1) admissible = true;
    }
    if (admissible) out.push_back(std::move(f));
  }
  return out;
}

// R3 across a face from r3_faces: each strand meets the other two in the
// opposite order afterwards; signs and over/under roles are unchanged.
inline PDCode r3_move(const PDCode& pd, const std::vector<Dart>& face) {
  std::vector<CrossingSite> sites = pd.sites();
  const auto& old = pd.sites();
  for (const Dart& d : face) {
    const Label f = pd.crossings()[d.crossing][d.slot];
    std::size_t from = pd.size(), to = pd.size();
    bool over_from = false, over_to = false;
    for (const Dart& c : face)
      for (std::size_t k : {c.crossing}) {
        if (old[k].under_out == f) from = k, over_from = false;
        if (old[k].over_out == f) from = k, over_from = true;
        if (old[k].under_in == f) to = k, over_to = false;
        if (old[k].over_in == f) to = k, over_to = true;
      }
    if (from == pd.size() || to == pd.size() || from == to) throw ValidationError("not a triangular face", f);
    const Label in = over_from ? old[from].over_in : old[from].under_in;
    const Label out = over_to ? old[to].over_out : old[to].under_out;
    // `to` becomes the first crossing along the strand, `from` the second.
    if (over_to) {
      sites[to].over_in = in;
      sites[to].over_out = f;
    } else {
      sites[to].under_in = in;
      sites[to].under_out = f;
    }
    if (over_from) {
      sites[from].over_in = f;
      sites[from].over_out = out;
    } else {
      sites[from].under_in = f;
      sites[from].under_out = out;
    }
  }
  std::vector<PDCrossing> xs;
  for (const auto& s : sites) xs.push_back(pd_tuple(s));
  return PDCode(std::move(xs));
}

// Mirror image: every crossing switched, the planar picture kept.
inline PDCode mirror(const PDCode& pd) {
  std::vector<PDCrossing> xs;
  for (const auto& s : pd.sites())
    xs.push_back(pd_tuple({flip(s.sign), s.under_in, s.under_out, s.over_in, s.over_out}));
  return PDCode(std::move(xs));
}

}  // namespace zbeta
