#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zbeta/errors.hpp"
#include "zbeta/tangle/pd.hpp"

namespace zbeta {

struct KnotRecord {
  std::string name;
  std::string pd_text;
  PDCode pd;
};

// Lines "name<TAB>pd"; blank lines and lines starting with '#' are skipped.
inline std::vector<KnotRecord> parse_table(std::istream& in, const std::string& source = "table") {
  std::vector<KnotRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw Error(source + ":" + std::to_string(lineno) + ": expected name<TAB>pd");
    KnotRecord r{line.substr(0, tab), line.substr(tab + 1), {}};
    try {
      r.pd = parse_pd(r.pd_text);
    } catch (const Error& e) {
      throw Error(source + ":" + std::to_string(lineno) + " (" + r.name + "): " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<KnotRecord> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open knot table " + path);
  return parse_table(in, path);
}

inline const KnotRecord* find_record(const std::vector<KnotRecord>& table, const std::string& name) {
  for (const auto& r : table)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace zbeta
