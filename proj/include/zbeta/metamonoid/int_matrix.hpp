#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zbeta/errors.hpp"
#include "zbeta/label.hpp"
#include "zbeta/metamonoid/concepts.hpp"

namespace zbeta {

// Square integer matrix with rows and columns both indexed by one label set.
// Labels are kept sorted, so structural equality is label-set equality.
class IntMatrixElement {
 public:
  IntMatrixElement() = default;

  // entries[i][j] is the entry at (labels[i], labels[j]).
  IntMatrixElement(std::vector<Label> labels, const std::vector<std::vector<std::int64_t>>& entries) {
    const std::size_t n = labels.size();
    if (entries.size() != n) throw LabelError("matrix is not square over its labels");
    for (const auto& row : entries)
      if (row.size() != n) throw LabelError("matrix is not square over its labels");
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (labels[order[i]] == labels[order[i + 1]]) throw LabelError("duplicate label " + std::to_string(labels[order[i]]));
    labels_.resize(n);
    data_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      labels_[i] = labels[order[i]];
      for (std::size_t j = 0; j < n; ++j) data_[i * n + j] = entries[order[i]][order[j]];
    }
  }

  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool has(Label x) const { return std::binary_search(labels_.begin(), labels_.end(), x); }

  std::int64_t at(Label r, Label c) const { return data_[index(r) * size() + index(c)]; }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(size(), std::vector<std::int64_t>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) out[i][j] = data_[i * size() + j];
    return out;
  }

  friend bool operator==(const IntMatrixElement&, const IntMatrixElement&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(labels_[i]) + ": [";
      for (std::size_t j = 0; j < size(); ++j) out += (j ? " " : "") + std::to_string(data_[i * size() + j]);
      out += "]";
    }
    return out + "}";
  }

 private:
  std::size_t index(Label x) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
    if (it == labels_.end() || *it != x) throw LabelError("missing label " + std::to_string(x));
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::vector<Label> labels_;
  std::vector<std::int64_t> data_;
};

// m(x,y->z): rows x,y summed into row z, and columns likewise.
inline IntMatrixElement mat_m(const IntMatrixElement& e, Label x, Label y, Label z) {
  if (x == y) throw LabelError("multiplication needs two distinct labels");
  if (!e.has(x) || !e.has(y)) throw LabelError("multiplication of absent label");
  if (z != x && z != y && e.has(z)) throw LabelError("target label " + std::to_string(z) + " already present");
  std::vector<Label> labels;
  for (Label l : e.labels())
    if (l != x && l != y) labels.push_back(l);
  labels.push_back(z);
  auto merged = [&](Label l) { return l == z ? std::vector<Label>{x, y} : std::vector<Label>{l}; };
  std::vector<std::vector<std::int64_t>> rows(labels.size(), std::vector<std::int64_t>(labels.size(), 0));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      for (Label r : merged(labels[i]))
        for (Label c : merged(labels[j])) rows[i][j] += e.at(r, c);
  return {labels, rows};
}

// Block-diagonal union of matrices on disjoint label sets.
inline IntMatrixElement mat_union(const IntMatrixElement& p, const IntMatrixElement& q) {
  for (Label l : q.labels())
    if (p.has(l)) throw LabelError("union of overlapping label " + std::to_string(l));
  std::vector<Label> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  const std::size_t n = labels.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool pi = i < p.size(), pj = j < p.size();
      if (pi == pj) rows[i][j] = (pi ? p : q).at(labels[i], labels[j]);
    }
  return {labels, rows};
}

// e(x): a zero row and column labelled x.
inline IntMatrixElement mat_unit(const IntMatrixElement& e, Label x) {
  if (e.has(x)) throw LabelError("unit label " + std::to_string(x) + " already present");
  return mat_union(e, IntMatrixElement({x}, {{0}}));
}

// d(x): drop row and column x.
inline IntMatrixElement mat_delete(const IntMatrixElement& e, Label x) {
  if (!e.has(x)) throw LabelError("deletion of absent label " + std::to_string(x));
  std::vector<Label> labels;
  for (Label l : e.labels())
    if (l != x) labels.push_back(l);
  std::vector<std::vector<std::int64_t>> rows(labels.size(), std::vector<std::int64_t>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) rows[i][j] = e.at(labels[i], labels[j]);
  return {labels, rows};
}

inline IntMatrixElement mat_rename(const IntMatrixElement& e, Label x, Label y) {
  if (!e.has(x)) throw LabelError("rename of absent label " + std::to_string(x));
  if (x != y && e.has(y)) throw LabelError("rename target " + std::to_string(y) + " already present");
  std::vector<Label> labels = e.labels();
  for (Label& l : labels)
    if (l == x) l = y;
  return {labels, e.rows()};
}

struct IntMatrixInstance {
  using Element = IntMatrixElement;
  Element multiply(const Element& p, Label x, Label y, Label z) const { return mat_m(p, x, y, z); }
  Element unit(const Element& p, Label x) const { return mat_unit(p, x); }
  Element erase(const Element& p, Label x) const { return mat_delete(p, x); }
  Element rename(const Element& p, Label x, Label y) const { return mat_rename(p, x, y); }
  Element unite(const Element& p, const Element& q) const { return mat_union(p, q); }
  bool equal(const Element& p, const Element& q) const { return p == q; }
  std::string render(const Element& p) const { return p.to_string(); }
};

static_assert(MetaMonoid<IntMatrixInstance>);

// Uniform random entries in [-range, range].
inline IntMatrixElement random_int_matrix(std::mt19937_64& rng, const std::vector<Label>& labels, int range = 9) {
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  std::vector<std::vector<std::int64_t>> rows(labels.size(), std::vector<std::int64_t>(labels.size()));
  for (auto& row : rows)
    for (auto& v : row) v = dist(rng);
  return {labels, rows};
}

}  // namespace zbeta
