#pragma once

#include <string>

#include <json.hpp>

#include "zbeta/algebra/expr.hpp"
#include "zbeta/betacalc/element.hpp"

namespace zbeta {

// {"omega": expr, "tails": [...], "heads": [...],
//  "entries": [{"t": label, "h": label, "v": expr}, ...]} with zero entries
// omitted. Entries are listed in (tail, head) order.
inline nlohmann::json to_json(const BetaElement& e) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : e.entries())
    entries.push_back({{"t", key.first}, {"h", key.second}, {"v", render_expr(v)}});
  return {{"omega", render_expr(e.omega())}, {"tails", e.tails()}, {"heads", e.heads()}, {"entries", entries}};
}

inline BetaElement beta_from_json(const nlohmann::json& j) {
  try {
    EntryMap entries;
    for (const auto& item : j.at("entries")) {
      std::pair<Label, Label> key{item.at("t").get<Label>(), item.at("h").get<Label>()};
      RationalFn v = parse_expr(item.at("v").get<std::string>());
      if (!entries.emplace(key, std::move(v)).second)
        throw LabelError("duplicate entry (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
    return BetaElement(parse_expr(j.at("omega").get<std::string>()), j.at("tails").get<std::vector<Label>>(),
                       j.at("heads").get<std::vector<Label>>(), std::move(entries));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed element JSON: ") + ex.what());
  }
}

// Human-readable form: the corner, the label lists, then one line per nonzero
// entry.
inline std::string render_pretty(const BetaElement& e) {
  auto list = [](const std::vector<Label>& ls) {
    std::string out;
    for (Label l : ls) out += (out.empty() ? "" : " ") + std::to_string(l);
    return out.empty() ? std::string("-") : out;
  };
  std::string out = "omega: " + render_expr(e.omega()) + "\n";
  out += "tails: " + list(e.tails()) + "\n";
  out += "heads: " + list(e.heads()) + "\n";
  if (e.matrix_is_zero()) return out + "entries: 0\n";
  out += "entries:\n";
  for (const auto& [key, v] : e.entries())
    out += "  t" + std::to_string(key.first) + " h" + std::to_string(key.second) + ": " + render_expr(v) + "\n";
  return out;
}

}  // namespace zbeta
