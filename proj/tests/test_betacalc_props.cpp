#include <gtest/gtest.h>

#include <random>

#include "support/print.hpp"
#include "support/random.hpp"
#include "zbeta/betacalc/instance.hpp"

using namespace zbeta;

namespace {

Label pick(std::mt19937_64& rng, const std::vector<Label>& v) { return v[rng() % v.size()]; }

Label fresh(const std::vector<Label>& v) {
  Label m = 0;
  for (Label l : v) m = std::max(m, l);
  return m + 1;
}

// One random operation applied to e; returns e unchanged if no operation fits.
BetaElement random_step(std::mt19937_64& rng, const BetaElement& e) {
  const auto& t = e.tails();
  const auto& h = e.heads();
  switch (rng() % 7) {
    case 0:
      if (t.size() >= 2) {
        Label x = pick(rng, t), y = pick(rng, t);
        if (x != y) return zbeta::tm(e, x, y, rng() % 2 ? x : fresh(t));
      }
      break;
    case 1:
      if (h.size() >= 2) {
        Label x = pick(rng, h), y = pick(rng, h);
        if (x != y) return hm(e, x, y, rng() % 2 ? y : fresh(h));
      }
      break;
    case 2:
      if (!t.empty() && !h.empty()) return sw(e, pick(rng, t), pick(rng, h));
      break;
    case 3: {
      const bool tail = rng() % 2;
      return insert_unit(e, tail ? LabelKind::tail : LabelKind::head, fresh(tail ? t : h));
    }
    case 4:
      if (t.size() > 1) return erase(e, LabelKind::tail, pick(rng, t));
      break;
    case 5:
      if (!t.empty()) return relabel(e, LabelKind::tail, pick(rng, t), fresh(t));
      break;
    case 6:
      if (!h.empty()) return relabel(e, LabelKind::head, pick(rng, h), fresh(h));
      break;
  }
  return e;
}

}  // namespace

TEST(BetaProps, VariableBijectionAfterEveryOperation) {
  std::mt19937_64 rng(zbeta::testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    BetaElement e = random_beta(rng, {1, 2, 3}, {1, 2, 3});
    for (int step = 0; step < 6; ++step) {
      e = random_step(rng, e);
      ASSERT_TRUE(e.satisfies_variable_bijection()) << render_pretty(e);
    }
  }
}

TEST(BetaProps, JsonRoundTrip) {
  std::mt19937_64 rng(zbeta::testing::kSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    BetaElement e = random_beta(rng, {1, 2}, {1, 2, 3});
    for (int step = 0; step < 3; ++step) e = random_step(rng, e);
    ASSERT_TRUE(beta_eq(beta_from_json(nlohmann::json::parse(to_json(e).dump())), e)) << render_pretty(e);
  }
}

TEST(BetaProps, DisjointOperationsCommute) {
  std::mt19937_64 rng(zbeta::testing::kSeed + 2);
  for (int trial = 0; trial < 100; ++trial) {
    BetaElement e = random_beta(rng, {1, 2, 3, 4}, {1, 2, 3, 4});
    BetaElement a = hm(zbeta::tm(e, 1, 2, 1), 3, 4, 3);
    BetaElement b = zbeta::tm(hm(e, 3, 4, 3), 1, 2, 1);
    ASSERT_TRUE(beta_eq(a, b));
    BetaElement c = gm(gm(e, 1, 2, 1), 3, 4, 3);
    BetaElement d = gm(gm(e, 3, 4, 3), 1, 2, 1);
    ASSERT_TRUE(beta_eq(c, d)) << render_pretty(c) << render_pretty(d);
  }
}

TEST(BetaProps, UnionCommutes) {
  std::mt19937_64 rng(zbeta::testing::kSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    BetaElement a = random_beta(rng, {1, 2}, {1});
    BetaElement b = random_beta(rng, {3}, {2, 3});
    ASSERT_TRUE(beta_eq(beta_union(a, b), beta_union(b, a)));
  }
}

TEST(BetaProps, RelabelIsInvertible) {
  std::mt19937_64 rng(zbeta::testing::kSeed + 4);
  for (int trial = 0; trial < 100; ++trial) {
    BetaElement e = random_beta(rng, {1, 2}, {1, 2});
    for (LabelKind k : {LabelKind::tail, LabelKind::head})
      ASSERT_TRUE(beta_eq(relabel(relabel(e, k, 2, 9), k, 9, 2), e));
  }
}
