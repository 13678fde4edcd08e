// zbeta: compute Z^beta, the Alexander oracle and the linking profile of PD
// codes; run the verification suites.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input or usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zbeta/verify/suites.hpp"

using namespace zbeta;

namespace {

constexpr int kOk = 0, kFailed = 1, kInputError = 2;

struct Config {
  std::optional<std::string> pd_text;  // "" is the crossingless unknot
  std::optional<std::string> name;
  std::string table;
  std::string format = "pretty";
  std::string suite;
  std::size_t max_crossings = 8;
  int trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> stop_after;
  std::vector<Label> basepoints;
  std::string out;
  bool timings = false;
};

struct InputError : Error {
  using Error::Error;
};

std::string table_path(const Config& c) {
  if (!c.table.empty()) return c.table;
  if (const char* env = std::getenv("ZBETA_TABLE"); env && *env) return env;
  return ZBETA_DEFAULT_TABLE;
}

struct Source {
  std::string name;
  PDCode pd;
};

Source load_source(const Config& c) {
  if (c.pd_text.has_value() == c.name.has_value()) throw InputError("give exactly one of --pd and --name");
  if (c.pd_text) return {"", parse_pd(*c.pd_text)};
  const auto table = load_table(table_path(c));
  const KnotRecord* r = find_record(table, *c.name);
  if (!r) throw InputError("no entry '" + *c.name + "' in " + table_path(c));
  return {r->name, r->pd};
}

BetaElement compute(const Config& c, const PDCode& pd) {
  return z_beta(pd, stitch_plan(pd, c.basepoints), c.stop_after);
}

bool json_out(const Config& c) { return c.format == "json"; }

int cmd_compute(const Config& c) {
  const Source s = load_source(c);
  const BetaElement z = compute(c, s.pd);
  if (json_out(c))
    std::cout << to_json(z).dump(2) << '\n';
  else
    std::cout << render_pretty(z);
  return kOk;
}

int cmd_export(const Config& c) {
  if (c.out.empty()) throw InputError("export needs --out <path>");
  const Source s = load_source(c);
  const BetaElement z = compute(c, s.pd);
  std::ofstream f(c.out);
  if (!f) throw InputError("I/O error: cannot write " + c.out);
  f << to_json(z).dump(2) << '\n';
  if (!f.flush()) throw InputError("I/O error: write to " + c.out + " failed");
  return kOk;
}

int cmd_alexander(const Config& c) {
  const Source s = load_source(c);
  const LaurentPoly d = wirtinger_alexander(s.pd);
  const LaurentPoly canon = canonical_unit_form(d);
  if (json_out(c))
    std::cout << nlohmann::json{{"alexander", render_poly(d)}, {"canonical", render_poly(canon)}}.dump(2) << '\n';
  else
    std::cout << render_poly(canon) << '\n';
  return kOk;
}

int cmd_zg(const Config& c) {
  const Source s = load_source(c);
  const LinkingProfile p = z_g(s.pd);
  if (json_out(c)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : p) arr.push_back({{"component", e.component}, {"over", e.over}, {"under", e.under}});
    std::cout << arr.dump(2) << '\n';
    return kOk;
  }
  std::string line;
  for (const auto& e : p)
    line += (line.empty() ? "" : " ") + std::string("(") + std::to_string(e.over) + "," + std::to_string(e.under) + ")";
  std::cout << line << '\n';
  return kOk;
}

int verify_axioms(const Config& c) {
  std::vector<AxiomReport> reps{beta_symbolic_axioms(), beta_random_axioms(std::max(1, c.trials / 10), c.seed),
                                int_matrix_axioms(c.trials, c.seed)};
  const bool split = deletions_do_not_reassemble();
  bool ok = split;
  for (const auto& r : reps) ok = ok && r.all_pass();
  if (json_out(c)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reps) arr.push_back(r.json());
    std::cout << nlohmann::json{{"pass", ok}, {"instances", arr}, {"deletions_do_not_reassemble", split}}.dump(2)
              << '\n';
  } else {
    for (const auto& r : reps) std::cout << "# " << r.instance << '\n' << r.text();
    std::cout << "# integer matrices: d_y P u d_x P != P " << (split ? "PASS" : "FAIL") << '\n';
    std::cout << (ok ? "axioms: PASS" : "axioms: FAIL") << '\n';
  }
  return ok ? kOk : kFailed;
}

int verify_reidemeister(const Config& c) {
  const CheckReport rep = reidemeister_suite();
  if (json_out(c))
    std::cout << rep.json(c.timings).dump(2) << '\n';
  else
    std::cout << rep.text(c.timings) << (rep.all_pass() ? "reidemeister: PASS" : "reidemeister: FAIL") << '\n';
  return rep.all_pass() ? kOk : kFailed;
}

int verify_table(const Config& c) {
  const auto table = load_table(table_path(c));
  const auto rows = table_suite(table, c.max_crossings);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  if (json_out(c)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j{{"name", r.name}, {"crossings", r.crossings}, {"pass", r.pass}, {"zbeta", r.zbeta}};
      if (r.knot) j["oracle"] = r.oracle;
      if (!r.error.empty()) j["error"] = r.error;
      if (c.timings) j["ms"] = std::lround(r.seconds * 1000);
      arr.push_back(std::move(j));
    }
    std::cout << nlohmann::json{{"pass", ok}, {"knots", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  ";
      if (!r.error.empty())
        std::cout << "error: " << r.error;
      else if (r.knot)
        std::cout << r.zbeta << (r.pass ? "" : "  oracle: " + r.oracle);
      else
        std::cout << "link, omega " << r.zbeta;
      if (c.timings) std::cout << "  (" << std::lround(r.seconds * 1000) << " ms)";
      std::cout << '\n';
    }
    std::cout << (ok ? "table: PASS" : "table: FAIL") << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_verify(const Config& c) {
  if (c.suite == "axioms") return verify_axioms(c);
  if (c.suite == "reidemeister") return verify_reidemeister(c);
  if (c.suite == "table") return verify_table(c);
  throw InputError("unknown suite '" + c.suite + "' (axioms, reidemeister, table)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z^beta tangle invariant and Alexander polynomial"};
  app.require_subcommand(1);
  Config c;

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--pd", c.pd_text, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
    cmd->add_option("--name", c.name, "entry of the knot table");
    cmd->add_option("--table", c.table, "knot table (default: $ZBETA_TABLE or the shipped table)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", c.format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}));
  };
  auto add_stitching = [&](CLI::App* cmd) {
    cmd->add_option("--basepoint", c.basepoints, "basepoint edge (at most one per component; repeatable)");
    cmd->add_option("--stop-after", c.stop_after, "stop after this many stitching steps");
  };

  auto* compute = app.add_subcommand("compute", "print Z^beta");
  add_source(compute);
  add_format(compute);
  add_stitching(compute);

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial from the Wirtinger matrix (knots only)");
  add_source(alexander);
  add_format(alexander);

  auto* zg = app.add_subcommand("zg", "signed over/under passages per component");
  add_source(zg);
  add_format(zg);

  auto* exp = app.add_subcommand("export", "write Z^beta as JSON");
  add_source(exp);
  add_stitching(exp);
  exp->add_option("--out", c.out, "output file")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", c.suite, "axioms, reidemeister or table")->required();
  verify->add_option("--table", c.table, "knot table (default: $ZBETA_TABLE or the shipped table)");
  verify->add_option("--max-crossings", c.max_crossings, "table: largest crossing number checked");
  verify->add_option("--trials", c.trials,
                     "axioms: random integer matrices per axiom; random beta arrays get a tenth of this");
  verify->add_option("--seed", c.seed, "axioms: random seed");
  verify->add_flag("--timings", c.timings, "reidemeister/table: include per-item times");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (compute->parsed()) return cmd_compute(c);
    if (alexander->parsed()) return cmd_alexander(c);
    if (zg->parsed()) return cmd_zg(c);
    if (exp->parsed()) return cmd_export(c);
    if (verify->parsed()) return cmd_verify(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
