#pragma once

#include <optional>
#include <vector>

#include "zbeta/betacalc/ops.hpp"
#include "zbeta/tangle/pd.hpp"

namespace zbeta {

struct StitchInstruction {
  Label x = 0;
  Label y = 0;
  Label z = 0;
  friend bool operator==(const StitchInstruction&, const StitchInstruction&) = default;
};

struct StitchGroup {
  Label survivor = 0;
  std::vector<StitchInstruction> steps;
};

struct StitchPlan {
  std::vector<StitchGroup> groups;

  std::vector<StitchInstruction> flatten() const {
    std::vector<StitchInstruction> out;
    for (const auto& g : groups) out.insert(out.end(), g.steps.begin(), g.steps.end());
    return out;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.steps.size();
    return n;
  }
};

// Label carried by the strand of a crossingless diagram.
inline constexpr Label kFreeStrandLabel = 1;

// Per component, gm(first, next -> first) for each edge after the basepoint in
// traversal order. `basepoints` may name one edge per component (any order);
// components without one start at their least edge.
inline StitchPlan stitch_plan(const PDCode& pd, const std::vector<Label>& basepoints = {}) {
  const auto& comps = pd.components();
  std::vector<std::optional<std::size_t>> start(comps.size());
  for (Label b : basepoints) {
    const std::size_t c = pd.component_of(b);
    if (start[c]) throw ValidationError("two basepoints on one component", b);
    const auto& cyc = comps[c];
    start[c] = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), b) - cyc.begin());
  }
  StitchPlan plan;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& cyc = comps[c];
    StitchGroup g;
    if (cyc.empty()) {
      g.survivor = kFreeStrandLabel;
      plan.groups.push_back(g);
      continue;
    }
    const std::size_t s = start[c].value_or(0);
    g.survivor = cyc[s];
    for (std::size_t i = 1; i < cyc.size(); ++i) g.steps.push_back({g.survivor, cyc[(s + i) % cyc.size()], g.survivor});
    plan.groups.push_back(std::move(g));
  }
  return plan;
}

// Disjoint union of one R-matrix per crossing, labelled by incoming edges.
inline BetaElement crossing_union(const PDCode& pd) {
  if (pd.size() == 0) return BetaElement(RationalFn(1), {kFreeStrandLabel}, {kFreeStrandLabel});
  BetaElement out;
  for (const auto& s : pd.sites()) out = beta_union(out, r_element(s.sign, s.over_in, s.under_in));
  return out;
}

inline BetaElement z_beta(const PDCode& pd, const StitchPlan& plan, std::optional<std::size_t> stop_after = {}) {
  BetaElement e = crossing_union(pd);
  std::size_t done = 0;
  for (const auto& g : plan.groups)
    for (const auto& st : g.steps) {
      if (stop_after && done == *stop_after) return e;
      e = gm(e, st.x, st.y, st.z);
      ++done;
    }
  return e;
}

inline BetaElement z_beta(const PDCode& pd) { return z_beta(pd, stitch_plan(pd)); }

// Collapsed invariant in the free commutative monoid on g_o, g_u: per
// component, the signed number of over- and under-passages.
struct LinkingEntry {
  Label component = 0;  // least edge label (or the free strand label)
  int over = 0;
  int under = 0;
  friend bool operator==(const LinkingEntry&, const LinkingEntry&) = default;
};

using LinkingProfile = std::vector<LinkingEntry>;

inline LinkingProfile z_g(const PDCode& pd) {
  const auto& comps = pd.components();
  LinkingProfile out(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) out[c].component = comps[c].empty() ? kFreeStrandLabel : comps[c][0];
  for (const auto& s : pd.sites()) {
    out[pd.component_of(s.over_in)].over += sign_value(s.sign);
    out[pd.component_of(s.under_in)].under += sign_value(s.sign);
  }
  return out;
}

}  // namespace zbeta
