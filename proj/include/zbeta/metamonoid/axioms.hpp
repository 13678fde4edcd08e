#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zbeta/metamonoid/concepts.hpp"
#include "zbeta/metamonoid/report.hpp"

namespace zbeta {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct HarnessOptions {
  int trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  int context = 2;  // extra labels carried along by every element
};

namespace axiom_labels {
inline constexpr Label x = 1, y = 2, z = 3, u = 4, v = 5, w = 6;
inline constexpr Label context_base = 11;  // context labels 11, 12, ...
inline constexpr Label other_base = 21;    // labels of the second union operand
}  // namespace axiom_labels

namespace detail {

inline std::vector<Label> with_context(std::vector<Label> labels, int context, Label base) {
  for (int i = 0; i < context; ++i) labels.push_back(base + static_cast<Label>(i));
  return labels;
}

// Runs one axiom. `gen(rng, labels, variant)` produces elements; `sides(p, q)`
// returns both sides of the equation for an element p on `labels` (plus
// context) and an element q on a disjoint label set.
template <class I, class Gen, class Sides>
AxiomResult run_axiom(const I& inst, Gen& gen, std::mt19937_64& rng, const HarnessOptions& opt, std::string name,
                      const std::vector<Label>& labels, Sides&& sides) {
  AxiomResult r;
  r.name = std::move(name);
  const auto p_labels = with_context(labels, opt.context, axiom_labels::context_base);
  const auto q_labels = with_context({}, std::max(opt.context, 1), axiom_labels::other_base);
  for (int t = 0; t < opt.trials; ++t) {
    ++r.trials;
    auto p = gen(rng, p_labels, 0);
    auto q = gen(rng, q_labels, 1);
    try {
      auto [lhs, rhs] = sides(p, q);
      if (!inst.equal(lhs, rhs)) {
        r.pass = false;
        r.counterexample = "input " + inst.render(p) + " lhs " + inst.render(lhs) + " rhs " + inst.render(rhs);
        break;
      }
    } catch (const std::exception& e) {
      r.pass = false;
      r.counterexample = "input " + inst.render(p) + " raised: " + e.what();
      break;
    }
  }
  return r;
}

}  // namespace detail

// Monoid-theory and set-manipulation axioms of a meta-monoid.
template <MetaMonoid I, class Gen>
AxiomReport check_meta_monoid(const I& inst, Gen gen, const HarnessOptions& opt, const std::string& prefix = "") {
  using namespace axiom_labels;
  using E = typename I::Element;
  std::mt19937_64 rng(opt.seed);
  AxiomReport rep;
  auto add = [&](const std::string& name, std::vector<Label> labels, auto sides) {
    rep.results.push_back(detail::run_axiom(inst, gen, rng, opt, prefix + name, labels, sides));
  };
  auto m = [&](const E& p, Label a, Label b, Label c) { return inst.multiply(p, a, b, c); };
  auto e = [&](const E& p, Label a) { return inst.unit(p, a); };
  auto d = [&](const E& p, Label a) { return inst.erase(p, a); };
  auto rho = [&](const E& p, Label a, Label b) { return inst.rename(p, a, b); };

  add("left_identity", {y}, [&](const E& p, const E&) { return std::pair{m(e(p, x), x, y, z), rho(p, y, z)}; });
  add("right_identity", {x}, [&](const E& p, const E&) { return std::pair{m(e(p, y), x, y, z), rho(p, x, z)}; });
  add("associativity", {x, y, z},
      [&](const E& p, const E&) { return std::pair{m(m(p, x, y, u), u, z, v), m(m(p, y, z, u), x, u, v)}; });
  add("rename_involution", {x}, [&](const E& p, const E&) { return std::pair{rho(rho(p, x, y), y, x), p}; });
  add("rename_compose", {x},
      [&](const E& p, const E&) { return std::pair{rho(rho(p, x, y), y, z), rho(p, x, z)}; });
  add("rename_then_delete", {x}, [&](const E& p, const E&) { return std::pair{d(rho(p, x, y), y), d(p, x)}; });
  add("multiply_then_delete", {x, y},
      [&](const E& p, const E&) { return std::pair{d(m(p, x, y, z), z), d(d(p, x), y)}; });
  add("unit_then_delete", {}, [&](const E& p, const E&) { return std::pair{d(e(p, x), x), p}; });
  add("multiply_then_rename", {x, y},
      [&](const E& p, const E&) { return std::pair{rho(m(p, x, y, z), z, u), m(p, x, y, u)}; });
  add("rename_then_multiply", {x, y},
      [&](const E& p, const E&) { return std::pair{m(rho(p, x, u), u, y, z), m(p, x, y, z)}; });
  add("unit_rename", {}, [&](const E& p, const E&) { return std::pair{rho(e(p, x), x, y), e(p, y)}; });
  add("disjoint_units_commute", {}, [&](const E& p, const E&) { return std::pair{e(e(p, x), y), e(e(p, y), x)}; });
  add("disjoint_multiplications_commute", {x, y, u, v}, [&](const E& p, const E&) {
    return std::pair{m(m(p, x, y, z), u, v, w), m(m(p, u, v, w), x, y, z)};
  });
  add("disjoint_multiply_delete_commute", {x, y, u},
      [&](const E& p, const E&) { return std::pair{d(m(p, x, y, z), u), m(d(p, u), x, y, z)}; });
  add("disjoint_rename_delete_commute", {x, u},
      [&](const E& p, const E&) { return std::pair{rho(d(p, x), u, v), d(rho(p, u, v), x)}; });
  add("union_commutes_with_multiply", {x, y}, [&](const E& p, const E& q) {
    return std::pair{m(inst.unite(p, q), x, y, z), inst.unite(m(p, x, y, z), q)};
  });
  add("union_symmetric", {x}, [&](const E& p, const E& q) { return std::pair{inst.unite(p, q), inst.unite(q, p)}; });
  return rep;
}

// Views turning a meta-bicrossed instance into meta-monoids: on tails (heads
// fixed), on heads (tails fixed), and on paired labels via
// gm = sw // tm // hm.
template <MetaBicrossed B>
struct TailView {
  using Element = typename B::Element;
  const B& b;
  Element multiply(const Element& p, Label x, Label y, Label z) const { return b.tm(p, x, y, z); }
  Element unit(const Element& p, Label x) const { return b.tail_unit(p, x); }
  Element erase(const Element& p, Label x) const { return b.tail_erase(p, x); }
  Element rename(const Element& p, Label x, Label y) const { return b.tail_rename(p, x, y); }
  Element unite(const Element& p, const Element& q) const { return b.unite(p, q); }
  bool equal(const Element& p, const Element& q) const { return b.equal(p, q); }
  std::string render(const Element& p) const { return b.render(p); }
};

template <MetaBicrossed B>
struct HeadView {
  using Element = typename B::Element;
  const B& b;
  Element multiply(const Element& p, Label x, Label y, Label z) const { return b.hm(p, x, y, z); }
  Element unit(const Element& p, Label x) const { return b.head_unit(p, x); }
  Element erase(const Element& p, Label x) const { return b.head_erase(p, x); }
  Element rename(const Element& p, Label x, Label y) const { return b.head_rename(p, x, y); }
  Element unite(const Element& p, const Element& q) const { return b.unite(p, q); }
  bool equal(const Element& p, const Element& q) const { return b.equal(p, q); }
  std::string render(const Element& p) const { return b.render(p); }
};

template <MetaBicrossed B>
struct GmView {
  using Element = typename B::Element;
  const B& b;
  Element multiply(const Element& p, Label x, Label y, Label z) const {
    return b.hm(b.tm(b.sw(p, x, y), x, y, z), x, y, z);
  }
  Element unit(const Element& p, Label x) const { return b.head_unit(b.tail_unit(p, x), x); }
  Element erase(const Element& p, Label x) const { return b.head_erase(b.tail_erase(p, x), x); }
  Element rename(const Element& p, Label x, Label y) const { return b.head_rename(b.tail_rename(p, x, y), x, y); }
  Element unite(const Element& p, const Element& q) const { return b.unite(p, q); }
  bool equal(const Element& p, const Element& q) const { return b.equal(p, q); }
  std::string render(const Element& p) const { return b.render(p); }
};

// Meta-bicrossed axioms: tm and hm each form a meta-monoid, the swap
// relations hold, and gm = sw // tm // hm is again a meta-monoid.
// `gen(rng, tails, heads)` produces elements.
template <MetaBicrossed B, class Gen>
AxiomReport check_meta_bicrossed(const B& inst, Gen gen, const HarnessOptions& opt, const std::string& prefix = "") {
  using namespace axiom_labels;
  using E = typename B::Element;
  AxiomReport rep;

  // The fixed label set of the other kind differs between the two union
  // operands so that they stay disjoint.
  auto fixed = [](int variant) {
    return variant == 0 ? std::vector<Label>{31, 32} : std::vector<Label>{41, 42};
  };
  auto tail_gen = [&](std::mt19937_64& rng, const std::vector<Label>& labels, int variant) {
    return gen(rng, labels, fixed(variant));
  };
  auto head_gen = [&](std::mt19937_64& rng, const std::vector<Label>& labels, int variant) {
    return gen(rng, fixed(variant), labels);
  };
  auto pair_gen = [&](std::mt19937_64& rng, const std::vector<Label>& labels, int) { return gen(rng, labels, labels); };

  rep.append(check_meta_monoid(TailView<B>{inst}, tail_gen, opt, prefix + "tm_"));
  rep.append(check_meta_monoid(HeadView<B>{inst}, head_gen, opt, prefix + "hm_"));

  std::mt19937_64 rng(opt.seed + 1);
  const auto ctx = [&](std::vector<Label> l) { return detail::with_context(std::move(l), opt.context, context_base); };
  auto add = [&](const std::string& name, std::vector<Label> tails, std::vector<Label> heads, auto sides) {
    AxiomResult r;
    r.name = prefix + name;
    const auto ts = ctx(tails), hs = ctx(heads);
    for (int t = 0; t < opt.trials; ++t) {
      ++r.trials;
      E p = gen(rng, ts, hs);
      try {
        auto [lhs, rhs] = sides(p);
        if (!inst.equal(lhs, rhs)) {
          r.pass = false;
          r.counterexample = "input " + inst.render(p) + " lhs " + inst.render(lhs) + " rhs " + inst.render(rhs);
          break;
        }
      } catch (const std::exception& e) {
        r.pass = false;
        r.counterexample = "input " + inst.render(p) + " raised: " + e.what();
        break;
      }
    }
    rep.results.push_back(std::move(r));
  };
  auto sw = [&](const E& p, Label a, Label b) { return inst.sw(p, a, b); };
  auto tm = [&](const E& p, Label a, Label b, Label c) { return inst.tm(p, a, b, c); };
  auto hm = [&](const E& p, Label a, Label b, Label c) { return inst.hm(p, a, b, c); };

  // tm^{xy}_x // sw_{xz} against both orders of the two single swaps.
  add("tm_swap_xz_then_yz", {x, y}, {z},
      [&](const E& p) { return std::pair{sw(tm(p, x, y, x), x, z), tm(sw(sw(p, x, z), y, z), x, y, x)}; });
  add("tm_swap_yz_then_xz", {x, y}, {z},
      [&](const E& p) { return std::pair{sw(tm(p, x, y, x), x, z), tm(sw(sw(p, y, z), x, z), x, y, x)}; });
  add("hm_swap", {x}, {y, z},
      [&](const E& p) { return std::pair{sw(hm(p, y, z, y), x, y), hm(sw(sw(p, x, y), x, z), y, z, y)}; });
  add("swap_tail_rename", {x}, {y}, [&](const E& p) {
    return std::pair{inst.tail_rename(sw(p, x, y), x, u), sw(inst.tail_rename(p, x, u), u, y)};
  });
  add("swap_head_rename", {x}, {y}, [&](const E& p) {
    return std::pair{inst.head_rename(sw(p, x, y), y, u), sw(inst.head_rename(p, y, u), x, u)};
  });
  add("te_absorbs_swap", {}, {y}, [&](const E& p) {
    E q = inst.tail_unit(p, x);
    return std::pair{sw(q, x, y), q};
  });
  add("he_absorbs_swap", {x}, {}, [&](const E& p) {
    E q = inst.head_unit(p, y);
    return std::pair{sw(q, x, y), q};
  });

  rep.append(check_meta_monoid(GmView<B>{inst}, pair_gen, opt, prefix + "gm_"));
  return rep;
}

}  // namespace zbeta
