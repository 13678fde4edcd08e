#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zbeta/betacalc/ops.hpp"
#include "zbeta/errors.hpp"
#include "zbeta/label.hpp"

namespace zbeta {

// X[a,b,c,d]: edges listed counterclockwise from the incoming under edge a.
// The under strand runs a -> c; the over strand occupies b and d.
using PDCrossing = std::array<Label, 4>;

struct CrossingSite {
  Sign sign = Sign::positive;
  Label over_in = 0;
  Label over_out = 0;
  Label under_in = 0;
  Label under_out = 0;
};

// PD tuple of a crossing from its strands. The cyclic order is fixed by the
// sign: positive crossings have the over strand entering at d.
inline PDCrossing pd_tuple(const CrossingSite& s) {
  if (s.sign == Sign::positive) return {s.under_in, s.over_out, s.under_out, s.over_in};
  return {s.under_in, s.over_in, s.under_out, s.over_out};
}

class PDCode {
 public:
  PDCode() { orient(); }
  explicit PDCode(std::vector<PDCrossing> crossings) : crossings_(std::move(crossings)) {
    validate();
    orient();
  }

  const std::vector<PDCrossing>& crossings() const { return crossings_; }
  std::size_t size() const { return crossings_.size(); }
  const std::vector<CrossingSite>& sites() const { return sites_; }

  // Edge cycles, each starting at its least label. A crossingless diagram has
  // one empty component.
  const std::vector<std::vector<Label>>& components() const { return components_; }

  std::vector<Label> edges() const {
    std::vector<Label> out;
    for (const auto& c : components_) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t component_of(Label edge) const {
    auto it = component_index_.find(edge);
    if (it == component_index_.end()) throw ValidationError("unknown edge " + std::to_string(edge), edge);
    return it->second;
  }

  Label successor(Label edge) const {
    auto it = successor_.find(edge);
    if (it == successor_.end()) throw ValidationError("unknown edge " + std::to_string(edge), edge);
    return it->second;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& x : crossings_) {
      if (!out.empty()) out += ' ';
      out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
             std::to_string(x[3]) + "]";
    }
    return out;
  }

 private:
  void validate() const {
    std::map<Label, int> count;
    for (const auto& x : crossings_)
      for (Label e : x) {
        if (e == 0) throw ValidationError("edge labels must be positive", 0);
        ++count[e];
      }
    for (const auto& [e, n] : count)
      if (n != 2)
        throw ValidationError("edge " + std::to_string(e) + " appears " + std::to_string(n) + " time" +
                                  (n == 1 ? "" : "s") + ", expected 2",
                              e);
  }

  // Decide which of b, d is the incoming over edge. Every edge is incoming at
  // exactly one of its two slots; slot a is incoming and slot c outgoing, and
  // the rest follows by propagation. Over strands of components that never
  // pass under are oriented by label succession.
  void orient() {
    const std::size_t n = crossings_.size();
    std::map<Label, std::vector<std::pair<std::size_t, int>>> occ;
    for (std::size_t k = 0; k < n; ++k)
      for (int s = 0; s < 4; ++s) occ[crossings_[k][s]].push_back({k, s});

    // incoming[k][s]: 1 in, 0 out, -1 unknown
    std::vector<std::array<int, 4>> incoming(n, {-1, -1, -1, -1});
    std::deque<std::pair<std::size_t, int>> queue;
    auto assign = [&](std::size_t k, int s, int v) {
      if (incoming[k][s] == v) return;
      if (incoming[k][s] != -1)
        throw OrientationError("inconsistent orientation at edge " + std::to_string(crossings_[k][s]));
      incoming[k][s] = v;
      queue.push_back({k, s});
    };
    auto propagate = [&]() {
      while (!queue.empty()) {
        auto [k, s] = queue.front();
        queue.pop_front();
        const int v = incoming[k][s];
        if (s == 1 || s == 3) assign(k, 4 - s, 1 - v);
        for (auto [k2, s2] : occ[crossings_[k][s]])
          if (k2 != k || s2 != s) assign(k2, s2, 1 - v);
      }
    };
    for (std::size_t k = 0; k < n; ++k) {
      assign(k, 0, 1);
      assign(k, 2, 0);
    }
    propagate();
    for (std::size_t k = 0; k < n; ++k) {
      if (incoming[k][1] != -1) continue;
      const Label b = crossings_[k][1], d = crossings_[k][3];
      assign(k, 1, d == b + 1 ? 1 : 0);
      propagate();
    }

    sites_.clear();
    successor_.clear();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = crossings_[k];
      CrossingSite site;
      site.under_in = x[0];
      site.under_out = x[2];
      if (incoming[k][3] == 1) {
        site.sign = Sign::positive;
        site.over_in = x[3];
        site.over_out = x[1];
      } else {
        site.sign = Sign::negative;
        site.over_in = x[1];
        site.over_out = x[3];
      }
      successor_[site.under_in] = site.under_out;
      successor_[site.over_in] = site.over_out;
      sites_.push_back(site);
    }

    components_.clear();
    component_index_.clear();
    if (n == 0) {
      components_.push_back({});
      return;
    }
    for (const auto& [e, unused] : occ) {
      if (component_index_.count(e)) continue;
      std::vector<Label> cycle;
      Label cur = e;
      do {
        component_index_[cur] = components_.size();
        cycle.push_back(cur);
        cur = successor_.at(cur);
      } while (cur != e);
      components_.push_back(std::move(cycle));
    }
  }

  std::vector<PDCrossing> crossings_;
  std::vector<CrossingSite> sites_;
  std::vector<std::vector<Label>> components_;
  std::map<Label, std::size_t> component_index_;
  std::map<Label, Label> successor_;
};

namespace detail {

class PDParser {
 public:
  explicit PDParser(std::string_view text) : s_(text) {}

  std::vector<PDCrossing> parse() {
    std::vector<PDCrossing> out;
    skip_separators();
    while (pos_ < s_.size()) {
      out.push_back(crossing());
      const std::size_t before = pos_;
      skip_separators();
      if (pos_ < s_.size() && pos_ == before) fail("expected whitespace or ';' between crossings");
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_separators() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ';')) ++pos_;
  }
  void skip_spaces() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_spaces();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Label number() {
    skip_spaces();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::uint64_t v = 0;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 0xffffffffULL) {
        pos_ = start;
        fail("edge label out of range");
      }
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an edge label");
    }
    if (s_[start] == '-' || v == 0) throw ValidationError("edge labels must be positive", s_[start] == '-' ? -static_cast<long>(v) : 0);
    return static_cast<Label>(v);
  }

  PDCrossing crossing() {
    if (s_.substr(pos_, 2) != "X[") fail("expected 'X['");
    pos_ += 2;
    PDCrossing x{};
    for (int i = 0; i < 4; ++i) {
      if (i) expect(',');
      x[i] = number();
    }
    expect(']');
    return x;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses "X[a,b,c,d] X[...] ..." (separators: whitespace or ';'). The empty
// string is the crossingless unknot.
inline PDCode parse_pd(std::string_view text) { return PDCode(detail::PDParser(text).parse()); }

inline std::vector<CrossingSite> classify_crossings(const PDCode& pd) { return pd.sites(); }

inline int writhe(const PDCode& pd) {
  int w = 0;
  for (const auto& s : pd.sites()) w += sign_value(s.sign);
  return w;
}

}  // namespace zbeta
