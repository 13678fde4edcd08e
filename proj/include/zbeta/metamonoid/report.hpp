#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace zbeta {

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::string counterexample;  // empty when passing
  int trials = 0;
  // A failure that is reported but does not count against the suite.
  bool informational = false;
  std::string note;
};

struct AxiomReport {
  std::string instance;
  std::vector<AxiomResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass && !r.informational) return false;
    return true;
  }

  void mark_informational(const std::string& name, const std::string& note) {
    for (auto& r : results)
      if (r.name == name) {
        r.informational = true;
        r.note = note;
      }
  }

  const AxiomResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }

  void append(const AxiomReport& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }

  std::string text() const {
    std::string out;
    for (const auto& r : results) {
      out += "AXIOM " + r.name + (r.pass ? " PASS" : " FAIL");
      if (!r.pass && r.informational) out += " (informational: " + r.note + ")";
      if (!r.pass) out += " counterexample: " + r.counterexample;
      out += '\n';
    }
    return out;
  }

  nlohmann::json json() const {
    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json a{{"name", r.name}, {"pass", r.pass}, {"trials", r.trials}};
      if (!r.pass) a["counterexample"] = r.counterexample;
      if (r.informational) a["informational"] = r.note;
      axioms.push_back(std::move(a));
    }
    return {{"instance", instance}, {"pass", all_pass()}, {"axioms", std::move(axioms)}};
  }
};

}  // namespace zbeta
