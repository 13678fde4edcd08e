#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "support/print.hpp"
#include "zbeta/oracle/alexander.hpp"
#include "zbeta/tangle/moves.hpp"
#include "zbeta/tangle/pipeline.hpp"
#include "zbeta/tangle/table.hpp"

using namespace zbeta;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

const std::vector<KnotRecord>& table() {
  static const std::vector<KnotRecord> t = load_table(ZBETA_DEFAULT_TABLE);
  return t;
}

const PDCode& knot(const std::string& name) {
  const KnotRecord* r = find_record(table(), name);
  if (!r) throw std::runtime_error("missing table entry " + name);
  return r->pd;
}

}  // namespace

TEST(ParsePD, Trefoil) {
  PDCode pd = parse_pd(kTrefoil);
  EXPECT_EQ(pd.size(), 3u);
  EXPECT_EQ(pd.edges().size(), 6u);
  EXPECT_EQ(pd.components().size(), 1u);
  EXPECT_EQ(pd.components()[0], (std::vector<Label>{1, 2, 3, 4, 5, 6}));
}

TEST(ParsePD, Kink) {
  PDCode pd = parse_pd("X[1,1,2,2]");
  EXPECT_EQ(pd.size(), 1u);
  EXPECT_EQ(pd.edges().size(), 2u);
  EXPECT_EQ(pd.components().size(), 1u);
}

TEST(ParsePD, Separators) {
  EXPECT_EQ(parse_pd("X[1,4,2,5];X[3,6,4,1] ;\n X[5,2,6,3]").crossings(), parse_pd(kTrefoil).crossings());
  EXPECT_EQ(parse_pd("X[1, 4, 2, 5] X[3, 6, 4, 1] X[5, 2, 6, 3]").crossings(), parse_pd(kTrefoil).crossings());
}

TEST(ParsePD, EmptyIsUnknot) {
  PDCode pd = parse_pd("  ");
  EXPECT_EQ(pd.size(), 0u);
  EXPECT_EQ(pd.components().size(), 1u);
}

TEST(ParsePD, EdgeCountValidation) {
  try {
    (void)parse_pd("X[1,2,3,4]");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.edge, 1);
  }
  try {
    (void)parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.edge, 3);
  }
  EXPECT_THROW((void)parse_pd("X[0,0,1,1]"), ValidationError);
  EXPECT_THROW((void)parse_pd("X[-1,-1,2,2]"), ValidationError);
}

TEST(ParsePD, SyntaxErrors) {
  EXPECT_THROW((void)parse_pd("X[1,1,2]"), SyntaxError);
  EXPECT_THROW((void)parse_pd("X(1,1,2,2)"), SyntaxError);
  EXPECT_THROW((void)parse_pd("X[1,1,2,2]X[3,3,4,4]"), SyntaxError);
  EXPECT_THROW((void)parse_pd("X[1,1,2,2"), SyntaxError);
  EXPECT_THROW((void)parse_pd("X[a,1,2,2]"), SyntaxError);
  EXPECT_THROW((void)parse_pd("X[99999999999,1,2,2]"), SyntaxError);
}

TEST(ParsePD, InconsistentOrientation) {
  // Edge 1 enters at slot a of both crossings.
  EXPECT_THROW((void)parse_pd("X[1,2,3,4] X[1,4,3,2]"), OrientationError);
}

TEST(ParsePD, RoundTripText) {
  for (const auto& r : table()) EXPECT_EQ(parse_pd(r.pd.to_string()).crossings(), r.pd.crossings()) << r.name;
}

TEST(Classify, TrefoilSameSign) {
  auto sites = classify_crossings(parse_pd(kTrefoil));
  ASSERT_EQ(sites.size(), 3u);
  for (const auto& s : sites) {
    EXPECT_EQ(s.sign, sites[0].sign);
    EXPECT_NE(s.over_in, s.under_in);
  }
  EXPECT_EQ(std::abs(writhe(parse_pd(kTrefoil))), 3);
}

TEST(Classify, EightSeventeenMatchesCrossingUnion) {
  std::set<std::tuple<int, Label, Label>> got, expected{
      {-1, 12, 1}, {-1, 2, 7}, {-1, 8, 3}, {-1, 4, 11}, {1, 16, 5}, {1, 6, 13}, {1, 14, 9}, {1, 10, 15}};
  for (const auto& s : classify_crossings(knot("8_17"))) got.insert({sign_value(s.sign), s.over_in, s.under_in});
  EXPECT_EQ(got, expected);
}

TEST(Classify, KinkSameComponent) {
  PDCode pd = parse_pd("X[1,1,2,2]");
  const auto& s = pd.sites()[0];
  EXPECT_EQ(pd.component_of(s.over_in), pd.component_of(s.under_in));
  EXPECT_EQ(s.sign, Sign::positive);
  EXPECT_EQ(parse_pd("X[1,2,2,1]").sites()[0].sign, Sign::negative);
}

TEST(Classify, TupleReconstruction) {
  for (const auto& r : table())
    for (std::size_t k = 0; k < r.pd.size(); ++k) EXPECT_EQ(pd_tuple(r.pd.sites()[k]), r.pd.crossings()[k]) << r.name;
}

TEST(StitchPlan, EightSeventeen) {
  StitchPlan plan = stitch_plan(knot("8_17"), {1});
  ASSERT_EQ(plan.groups.size(), 1u);
  EXPECT_EQ(plan.groups[0].survivor, 1u);
  ASSERT_EQ(plan.size(), 15u);
  for (Label k = 2; k <= 16; ++k) EXPECT_EQ(plan.groups[0].steps[k - 2], (StitchInstruction{1, k, 1}));
}

TEST(StitchPlan, Unknot) {
  StitchPlan plan = stitch_plan(parse_pd(""));
  ASSERT_EQ(plan.groups.size(), 1u);
  EXPECT_TRUE(plan.groups[0].steps.empty());
}

TEST(StitchPlan, LinkGroups) {
  const PDCode& hopf = knot("hopf+");
  StitchPlan plan = stitch_plan(hopf);
  ASSERT_EQ(plan.groups.size(), 2u);
  EXPECT_NE(plan.groups[0].survivor, plan.groups[1].survivor);
  EXPECT_EQ(plan.size(), 2 * hopf.size() - 2);
}

TEST(StitchPlan, LengthAndCoverage) {
  for (const auto& r : table()) {
    StitchPlan plan = stitch_plan(r.pd);
    if (r.pd.size() > 0) EXPECT_EQ(plan.size(), 2 * r.pd.size() - r.pd.components().size()) << r.name;
    std::multiset<Label> consumed;
    for (const auto& g : plan.groups) {
      consumed.insert(g.survivor);
      for (const auto& s : g.steps) consumed.insert(s.y);
    }
    if (r.pd.size() > 0) EXPECT_EQ(std::vector<Label>(consumed.begin(), consumed.end()), r.pd.edges()) << r.name;
  }
}

TEST(StitchPlan, Basepoints) {
  StitchPlan plan = stitch_plan(parse_pd(kTrefoil), {4});
  EXPECT_EQ(plan.groups[0].survivor, 4u);
  EXPECT_EQ(plan.groups[0].steps[0], (StitchInstruction{4, 5, 4}));
  EXPECT_EQ(plan.groups[0].steps.back(), (StitchInstruction{4, 3, 4}));
  EXPECT_THROW((void)stitch_plan(parse_pd(kTrefoil), {4, 5}), ValidationError);
  EXPECT_THROW((void)stitch_plan(parse_pd(kTrefoil), {9}), ValidationError);
}

TEST(ZBeta, EightSeventeen) {
  BetaElement z = z_beta(knot("8_17"), stitch_plan(knot("8_17"), {1}));
  EXPECT_EQ(render_expr(z.omega()), "-T1^-3 + 4*T1^-2 - 8*T1^-1 + 11 - 8*T1 + 4*T1^2 - T1^3");
  EXPECT_TRUE(z.matrix_is_zero());
}

TEST(ZBeta, Unknot) {
  BetaElement z = z_beta(parse_pd(""));
  EXPECT_TRUE(z.omega().is_one());
  EXPECT_EQ(z.tails().size(), 1u);
  EXPECT_EQ(z.heads().size(), 1u);
  EXPECT_TRUE(z.matrix_is_zero());
}

TEST(ZBeta, Kinks) {
  // From basepoint 1: X[1,1,2,2] and X[1,2,2,1] pass under first,
  // X[2,2,1,1] and X[2,1,1,2] pass over first.
  const std::vector<std::tuple<const char*, const char*, const char*>> cases{
      {"X[1,1,2,2]", "1", "T1 - 1"},
      {"X[1,2,2,1]", "1", "T1^-1 - 1"},
      {"X[2,2,1,1]", "T1", "T1 - 1"},
      {"X[2,1,1,2]", "T1^-1", "T1^-1 - 1"},
  };
  for (const auto& [pd, omega, entry] : cases) {
    BetaElement z = z_beta(parse_pd(pd));
    EXPECT_EQ(z.omega(), parse_expr(omega)) << pd;
    EXPECT_EQ(z.entries().size(), 1u) << pd;
    EXPECT_EQ(z.entry(1, 1), parse_expr(entry)) << pd;
  }
  BetaElement both = z_beta(knot("unknot_2kinks"));
  EXPECT_TRUE(both.omega().is_one());
  EXPECT_TRUE(both.matrix_is_zero());
}

TEST(ZBeta, ShapeAndBijection) {
  for (const auto& r : table()) {
    BetaElement z = z_beta(r.pd);
    EXPECT_EQ(z.tails().size(), r.pd.components().size()) << r.name;
    EXPECT_EQ(z.heads().size(), r.pd.components().size()) << r.name;
    EXPECT_TRUE(z.satisfies_variable_bijection()) << r.name;
  }
}

TEST(ZBeta, StopAfter) {
  const PDCode& pd = knot("8_17");
  StitchPlan plan = stitch_plan(pd);
  EXPECT_TRUE(beta_eq(z_beta(pd, plan, plan.size()), z_beta(pd, plan)));
  EXPECT_TRUE(beta_eq(z_beta(pd, plan, 0), crossing_union(pd)));
  BetaElement partial = z_beta(pd, plan, 5);
  EXPECT_EQ(partial.tails().size(), 16u - 5u);
  EXPECT_TRUE(beta_eq(gm(partial, 1, 7, 1), z_beta(pd, plan, 6)));
}

TEST(ZBeta, Borromean) {
  const PDCode& pd = knot("borromean");
  BetaElement z = z_beta(pd);
  EXPECT_EQ(z.tails().size(), 3u);
  EXPECT_EQ(z.heads().size(), 3u);
  EXPECT_TRUE(z.satisfies_variable_bijection());
}

TEST(ZG, Unknot) { EXPECT_EQ(z_g(parse_pd("")), (LinkingProfile{{1, 0, 0}})); }

TEST(ZG, PositiveHopf) {
  LinkingProfile p = z_g(knot("hopf+"));
  ASSERT_EQ(p.size(), 2u);
  for (const auto& e : p) {
    EXPECT_EQ(e.over, 1);
    EXPECT_EQ(e.under, 1);
  }
}

TEST(ZG, Trefoil) {
  PDCode pd = parse_pd(kTrefoil);
  LinkingProfile p = z_g(pd);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].over, writhe(pd));
  EXPECT_EQ(p[0].under, writhe(pd));
  EXPECT_EQ(std::abs(p[0].over), 3);
}

TEST(ZG, TotalsMatchWrithe) {
  for (const auto& r : table()) {
    int over = 0, under = 0;
    for (const auto& e : z_g(r.pd)) over += e.over, under += e.under;
    EXPECT_EQ(over, writhe(r.pd)) << r.name;
    EXPECT_EQ(under, writhe(r.pd)) << r.name;
  }
}

TEST(Table, ShippedContents) {
  EXPECT_NE(find_record(table(), "3_1"), nullptr);
  EXPECT_NE(find_record(table(), "8_21"), nullptr);
  int knots = 0;
  for (const auto& r : table()) knots += r.pd.components().size() == 1 && r.name != "unknot_2kinks";
  EXPECT_EQ(knots, 35);
  EXPECT_EQ(knot("hopf+").components().size(), 2u);
  EXPECT_EQ(knot("borromean").components().size(), 3u);
}

TEST(Table, ParseErrors) {
  std::istringstream ok("# comment\n\nfoo\tX[1,1,2,2]\n");
  EXPECT_EQ(parse_table(ok).size(), 1u);
  std::istringstream no_tab("foo X[1,1,2,2]\n");
  EXPECT_THROW((void)parse_table(no_tab), Error);
  std::istringstream bad_pd("foo\tX[1,2,3,4]\n");
  EXPECT_THROW((void)parse_table(bad_pd), Error);
  EXPECT_THROW((void)load_table("/nonexistent/knots.tsv"), Error);
}

TEST(Moves, TablePlanar) {
  for (const auto& r : table()) {
    EXPECT_TRUE(is_planar(r.pd)) << r.name;
    EXPECT_EQ(faces(r.pd).size(), r.pd.size() == 0 ? 0u : r.pd.size() + 1 + diagram_pieces(r.pd)) << r.name;
  }
  // Two crossings glued so that no planar embedding has these rotations.
  EXPECT_FALSE(is_planar(parse_pd("X[1,2,3,4] X[2,3,1,4]")));
}

TEST(Moves, KinkInsertion) {
  PDCode tre = parse_pd(kTrefoil);
  const std::array<int, 4> signs{1, -1, 1, -1};
  for (int k = 0; k < 4; ++k) {
    PDCode p = insert_kink(tre, 3, KinkType(k));
    EXPECT_EQ(p.size(), 4u);
    EXPECT_EQ(p.components().size(), 1u);
    EXPECT_TRUE(is_planar(p));
    EXPECT_EQ(writhe(p), writhe(tre) + signs[k]);
  }
}

TEST(Moves, SecondMoveOnTrefoil) {
  PDCode tre = parse_pd(kTrefoil);
  int found = 0;
  for (Label a : tre.edges())
    for (Label b : tre.edges())
      for (const PDCode& p : r2_moves(tre, a, b)) {
        ++found;
        EXPECT_EQ(p.size(), 5u);
        EXPECT_EQ(writhe(p), writhe(tre));
        EXPECT_TRUE(beta_eq(z_beta(p), z_beta(tre))) << p.to_string();
      }
  EXPECT_GT(found, 0);
}

TEST(Moves, ThirdMoveRoundTrip) {
  // Trefoil triangles alternate; R2 moves create admissible ones.
  PDCode base = parse_pd(kTrefoil);
  int moves = 0;
  for (Label a : base.edges())
    for (Label b : base.edges())
      for (const PDCode& p : r2_moves(base, a, b))
        for (const auto& face : r3_faces(p)) {
          PDCode q = r3_move(p, face);
          ++moves;
          EXPECT_TRUE(is_planar(q));
          EXPECT_NE(q.crossings(), p.crossings());
          // Cut both long knots away from the triangle: then the move is local.
          std::set<Label> inner;
          for (const Dart& d : face) inner.insert(p.crossings()[d.crossing][d.slot]);
          Label cut = 0;
          for (Label e : p.edges())
            if (!inner.count(e)) {
              cut = e;
              break;
            }
          EXPECT_TRUE(beta_eq(z_beta(q, stitch_plan(q, {cut})), z_beta(p, stitch_plan(p, {cut}))))
              << p.to_string() << " -> " << q.to_string();
          EXPECT_TRUE(compare_up_to_units(z_beta(q).omega(), z_beta(p).omega().num()));
          bool back = false;
          for (const auto& f2 : r3_faces(q)) back = back || r3_move(q, f2).crossings() == p.crossings();
          EXPECT_TRUE(back) << q.to_string();
        }
  EXPECT_GT(moves, 0);
}

TEST(Moves, Mirror) {
  for (const auto& r : table()) {
    PDCode m = mirror(r.pd);
    EXPECT_TRUE(is_planar(m)) << r.name;
    EXPECT_EQ(writhe(m), -writhe(r.pd)) << r.name;
    EXPECT_EQ(mirror(m).crossings(), r.pd.crossings()) << r.name;
  }
}
