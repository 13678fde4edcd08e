#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "zbeta/betacalc/instance.hpp"
#include "zbeta/metamonoid/axioms.hpp"
#include "zbeta/metamonoid/int_matrix.hpp"
#include "zbeta/oracle/alexander.hpp"
#include "zbeta/tangle/moves.hpp"
#include "zbeta/tangle/pipeline.hpp"
#include "zbeta/tangle/table.hpp"

namespace zbeta {

// One line of a verification report.
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  bool informational = false;  // reported, never counted as a failure
  double seconds = 0;
};

struct CheckReport {
  std::vector<Check> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || c.informational; });
  }

  std::string text(bool timings = false) const {
    std::string out;
    for (const auto& c : checks) {
      out += c.informational ? "INFO " : c.pass ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.detail.empty()) out += "  " + c.detail;
      if (timings) out += "  (" + std::to_string(static_cast<long>(std::lround(c.seconds * 1000))) + " ms)";
      out += '\n';
    }
    return out;
  }

  nlohmann::json json(bool timings = false) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      if (c.informational) j["informational"] = true;
      if (timings) j["ms"] = std::lround(c.seconds * 1000);
      arr.push_back(std::move(j));
    }
    return {{"pass", all_pass()}, {"checks", std::move(arr)}};
  }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// ---- axioms

// Tail deletion substitutes T_x = 1, which cannot cancel the factor 1 + a
// that a swap puts on omega when a is a free symbol. On tangle-like arrays
// these two hold (see beta_random_axioms).
inline const std::vector<std::string>& generic_deletion_exceptions() {
  static const std::vector<std::string> names{"gm_multiply_then_delete", "gm_disjoint_multiply_delete_commute"};
  return names;
}

// Every entry and omega a free symbol; one trial per axiom.
inline AxiomReport beta_symbolic_axioms() {
  HarnessOptions opt;
  opt.trials = 1;
  opt.context = 1;
  AxiomReport rep = check_meta_bicrossed(BetaInstance{}, [](auto&, const auto& t, const auto& h) {
    return symbolic_beta(t, h);
  }, opt, "beta_");
  rep.instance = "beta (symbolic)";
  for (const auto& n : generic_deletion_exceptions())
    rep.mark_informational("beta_" + n, "generic entries; holds on tangle-like arrays");
  return rep;
}

inline AxiomReport beta_random_axioms(int trials, std::uint64_t seed) {
  HarnessOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  AxiomReport rep = check_meta_bicrossed(BetaInstance{}, [](auto& rng, const auto& t, const auto& h) {
    return random_beta(rng, t, h);
  }, opt, "beta_tangle_");
  rep.instance = "beta (tangle-like random)";
  return rep;
}

inline AxiomReport int_matrix_axioms(int trials, std::uint64_t seed) {
  HarnessOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  AxiomReport rep = check_meta_monoid(IntMatrixInstance{}, [](auto& rng, const std::vector<Label>& labels, int) {
    return random_int_matrix(rng, labels);
  }, opt, "matrix_");
  rep.instance = "integer matrices";
  return rep;
}

// d_y P u d_x P differs from P whenever P has an off-diagonal entry.
inline bool deletions_do_not_reassemble() {
  IntMatrixElement p({1, 2}, {{1, 2}, {3, 4}});
  return !(mat_union(mat_delete(p, 2), mat_delete(p, 1)) == p);
}

// ---- local Reidemeister configurations

struct LocalCrossing {
  Sign sign = Sign::positive;
  Label over = 0;   // incoming label of the over strand
  Label under = 0;  // incoming label of the under strand
  friend bool operator==(const LocalCrossing&, const LocalCrossing&) = default;
};

inline BetaElement local_union(const std::vector<LocalCrossing>& xs) {
  BetaElement out;
  for (const auto& c : xs) out = beta_union(out, r_element(c.sign, c.over, c.under));
  return out;
}

inline BetaElement close_local(const std::vector<LocalCrossing>& xs, const std::vector<StitchInstruction>& plan) {
  BetaElement e = local_union(xs);
  for (const auto& s : plan) e = gm(e, s.x, s.y, s.z);
  return e;
}

// Two sides of a local move and the stitching that closes each strand.
struct LocalMove {
  std::string name;
  std::vector<LocalCrossing> left, right;
  std::vector<StitchInstruction> plan;
};

// Second move: strand A (labels 1, 3) passes over strand B twice with
// opposite signs; B runs parallel (labels 2, 4) or antiparallel. The closure
// should be the identity on two strands.
inline std::vector<LocalMove> r2_local_variants() {
  std::vector<LocalMove> out;
  for (Sign s : {Sign::positive, Sign::negative}) {
    const std::string tag = s == Sign::positive ? "+-" : "-+";
    out.push_back({"R2 parallel " + tag, {{s, 1, 2}, {flip(s), 3, 4}}, {}, {{1, 3, 1}, {2, 4, 2}}});
    out.push_back({"R2 antiparallel " + tag, {{s, 1, 4}, {flip(s), 3, 2}}, {}, {{1, 3, 1}, {2, 4, 2}}});
  }
  return out;
}

// Third move, generated from geometry: three straight oriented strands in
// directions 0, 60 and 120 degrees with a height order; strands 0 and 1 meet
// at the origin and strand 2 is the line n.x = c, slid from c = -1 to c = 1.
// Strand i enters its first crossing on label i+1 and its second on i+4.
// A crossing is positive when the over direction turned clockwise by 90
// degrees is the under direction.
inline std::vector<LocalCrossing> r3_geometric_side(const std::array<int, 3>& height, const std::array<int, 3>& dir,
                                                    bool reflect, double c) {
  struct Line {
    double nx, ny, c, dx, dy;
  };
  std::array<Line, 3> lines;
  for (int i = 0; i < 3; ++i) {
    const double th = std::acos(-1.0) * i / 3.0;
    double dx = std::cos(th) * dir[i], dy = std::sin(th) * dir[i];
    if (reflect) dx = -dx;
    lines[i] = {-dy, dx, i == 2 ? c * dir[i] : 0.0, dx, dy};
  }
  auto meet = [&](int i, int j) {
    const Line &a = lines[i], &b = lines[j];
    const double det = a.nx * b.ny - a.ny * b.nx;
    return std::array<double, 2>{(a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det};
  };
  // Position of each crossing along each strand.
  auto along = [&](int i, int j) {
    const auto p = meet(i, j);
    return p[0] * lines[i].dx + p[1] * lines[i].dy;
  };
  auto label = [&](int i, int j) {
    const int k = 3 - i - j;
    const bool first = along(i, j) < along(i, k);
    return static_cast<Label>(first ? i + 1 : i + 4);
  };
  std::vector<LocalCrossing> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const int o = height[i] > height[j] ? i : j, u = o == i ? j : i;
      const double cross = lines[o].dx * lines[u].dy - lines[o].dy * lines[u].dx;
      out.push_back({cross < 0 ? Sign::positive : Sign::negative, label(o, u), label(u, o)});
    }
  return out;
}

inline std::vector<LocalMove> r3_local_variants() {
  std::vector<LocalMove> out;
  std::array<int, 3> height{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask)
      for (bool reflect : {false, true}) {
        const std::array<int, 3> dir{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
        LocalMove m;
        m.name = "R3 heights " + std::to_string(height[0]) + std::to_string(height[1]) + std::to_string(height[2]) +
                 " dirs " + std::to_string(mask) + (reflect ? " reflected" : "");
        m.left = r3_geometric_side(height, dir, reflect, -1.0);
        m.right = r3_geometric_side(height, dir, reflect, 1.0);
        m.plan = {{1, 4, 1}, {2, 5, 2}, {3, 6, 3}};
        out.push_back(std::move(m));
      }
  } while (std::next_permutation(height.begin(), height.end()));
  return out;
}

// Equal as sets of crossings.
inline bool same_crossings(std::vector<LocalCrossing> a, std::vector<LocalCrossing> b) {
  auto key = [](const LocalCrossing& c) { return std::tuple{sign_value(c.sign), c.over, c.under}; };
  auto less = [&](const LocalCrossing& x, const LocalCrossing& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

// ---- suites

inline Check check_local_move(const LocalMove& m) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c{m.name};
  try {
    const BetaElement lhs = close_local(m.left, m.plan);
    if (m.right.empty()) {
      c.pass = lhs.omega().is_one() && lhs.matrix_is_zero();
      if (!c.pass) c.detail = "omega " + render_expr(lhs.omega());
    } else {
      c.pass = beta_eq(lhs, close_local(m.right, m.plan));
    }
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  c.seconds = detail::seconds_since(t0);
  return c;
}

// A basepoint away from the given edges, so that the move is local to the
// long knot.
inline Label basepoint_avoiding(const PDCode& pd, const std::set<Label>& avoid) {
  for (Label e : pd.edges())
    if (!avoid.count(e)) return e;
  return pd.edges().front();
}

// Second and third moves applied inside a diagram, compared exactly.
inline Check check_moves_in_diagram(const std::string& name, const PDCode& pd) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c{"R2/R3 inside " + name};
  int r2 = 0, r3 = 0;
  try {
    for (Label a : pd.edges())
      for (Label b : pd.edges())
        for (const PDCode& p : r2_moves(pd, a, b)) {
          const Label new_edge = detail::max_label(pd) + 1;
          std::set<Label> avoid{a, b};
          for (Label k = 0; k < 4; ++k) avoid.insert(new_edge + k);
          const Label cut = basepoint_avoiding(pd, avoid);
          ++r2;
          if (!beta_eq(z_beta(p, stitch_plan(p, {cut})), z_beta(pd, stitch_plan(pd, {cut})))) {
            c.pass = false;
            c.detail = "R2 differs: " + p.to_string();
            return c;
          }
          for (const auto& face : r3_faces(p)) {
            const PDCode q = r3_move(p, face);
            std::set<Label> inner;
            for (const Dart& d : face) inner.insert(p.crossings()[d.crossing][d.slot]);
            const Label cut3 = basepoint_avoiding(p, inner);
            ++r3;
            if (!beta_eq(z_beta(q, stitch_plan(q, {cut3})), z_beta(p, stitch_plan(p, {cut3})))) {
              c.pass = false;
              c.detail = "R3 differs: " + p.to_string() + " -> " + q.to_string();
              return c;
            }
          }
        }
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
    return c;
  }
  c.pass = r2 > 0;
  c.detail = std::to_string(r2) + " second moves, " + std::to_string(r3) + " third moves";
  c.seconds = detail::seconds_since(t0);
  return c;
}

// Closures of the four one-crossing kinks and of two opposite kinks.
inline std::vector<Check> kink_report() {
  std::vector<Check> out;
  const std::vector<std::pair<std::string, std::string>> kinks{{"R1 kink X[1,1,2,2]", "X[1,1,2,2]"},
                                                               {"R1 kink X[1,2,2,1]", "X[1,2,2,1]"},
                                                               {"R1 kink X[2,2,1,1]", "X[2,2,1,1]"},
                                                               {"R1 kink X[2,1,1,2]", "X[2,1,1,2]"}};
  for (const auto& [name, text] : kinks) {
    const PDCode pd = parse_pd(text);
    const BetaElement z = z_beta(pd);
    Check c{name + (pd.sites()[0].sign == Sign::positive ? " (positive)" : " (negative)")};
    c.informational = true;
    c.detail = "omega " + render_expr(z.omega()) + ", entry " + render_expr(z.entry(z.tails()[0], z.heads()[0]));
    out.push_back(std::move(c));
  }
  const BetaElement pos = gm(r_element(Sign::positive, 1, 2), 1, 2, 1);
  const BetaElement neg = gm(r_element(Sign::negative, 3, 4), 3, 4, 3);
  const BetaElement both = gm(beta_union(pos, neg), 1, 3, 1);
  Check c{"R1 opposite kinks stitched"};
  c.informational = true;
  c.detail = "omega " + render_expr(both.omega()) + (both.matrix_is_zero() ? ", entries 0" : ", entries nonzero");
  out.push_back(std::move(c));
  return out;
}

inline CheckReport reidemeister_suite() {
  CheckReport rep;
  for (const auto& m : r2_local_variants()) rep.checks.push_back(check_local_move(m));
  for (const auto& m : r3_local_variants()) rep.checks.push_back(check_local_move(m));
  for (const char* text : {"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"})
    rep.checks.push_back(check_moves_in_diagram(text, parse_pd(text)));
  for (auto& c : kink_report()) rep.checks.push_back(std::move(c));
  return rep;
}

struct TableRow {
  std::string name;
  std::size_t crossings = 0;
  bool knot = true;
  bool pass = false;
  std::string zbeta;   // canonical unit form of omega, in T
  std::string oracle;  // canonical unit form of the oracle
  std::string error;
  double seconds = 0;
};

// Omega of a knot rewritten in the oracle's variable.
inline LaurentPoly omega_in_t(const BetaElement& z) {
  if (!z.omega().is_polynomial())
    throw NonMonomialDenominator("denominator " + render_poly(z.omega().den()) + " is not a monomial");
  VarMap map;
  for (Label t : z.tails()) map.push_back({VarId::strand(t), alexander_variable()});
  return substitute(z.omega().num(), map);
}

inline TableRow table_row(const KnotRecord& r) {
  const auto t0 = std::chrono::steady_clock::now();
  TableRow row{r.name, r.pd.size(), r.pd.components().size() == 1};
  try {
    if (!is_planar(r.pd)) throw ValidationError("not a planar diagram", 0);
    const BetaElement z = z_beta(r.pd);
    if (row.knot) {
      const LaurentPoly oracle = wirtinger_alexander(r.pd);
      row.pass = compare_up_to_units(z.omega(), oracle);
      row.zbeta = render_poly(canonical_unit_form(omega_in_t(z)));
      row.oracle = render_poly(canonical_unit_form(oracle));
    } else {
      row.pass = z.satisfies_variable_bijection() && z.tails().size() == r.pd.components().size();
      row.zbeta = render_expr(z.omega());
    }
  } catch (const std::exception& e) {
    row.pass = false;
    row.error = e.what();
  }
  row.seconds = detail::seconds_since(t0);
  return row;
}

// Knots up to max_crossings against the oracle; links are computed and
// checked for shape only.
inline std::vector<TableRow> table_suite(const std::vector<KnotRecord>& table, std::size_t max_crossings) {
  std::vector<TableRow> rows;
  for (const auto& r : table)
    if (r.pd.size() <= max_crossings) rows.push_back(table_row(r));
  return rows;
}

}  // namespace zbeta
