#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "zbeta/label.hpp"

namespace zbeta {

enum class VarKind : std::uint8_t { strand = 0, symbol = 1 };

namespace detail {

// Process-wide, append-only store of symbol names. Interned strings are never
// freed, so VarId can hold a stable pointer.
class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  const std::string* intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    const std::string* stored = &names_.emplace_back(name);
    index_.emplace(*stored, stored);
    return stored;
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, const std::string*> index_;
};

}  // namespace detail

// A polynomial indeterminate: either the strand variable T_i of tail label i,
// or a free symbol (used for generic entries in the axiom checks).
class VarId {
 public:
  static VarId strand(Label index) { return VarId(VarKind::strand, index, nullptr); }
  static VarId symbol(std::string_view name) {
    return VarId(VarKind::symbol, 0, detail::SymbolTable::instance().intern(name));
  }

  VarKind kind() const { return kind_; }
  bool is_strand() const { return kind_ == VarKind::strand; }
  Label index() const { return index_; }
  const std::string& name() const { return *name_; }

  std::string to_string() const {
    return is_strand() ? "T" + std::to_string(index_) : *name_;
  }

  friend bool operator==(const VarId& a, const VarId& b) {
    return a.kind_ == b.kind_ && a.index_ == b.index_ && a.name_ == b.name_;
  }

  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == VarKind::strand) return a.index_ <=> b.index_;
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    int c = a.name_->compare(*b.name_);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::size_t hash() const {
    return std::hash<const void*>{}(name_) ^ (std::size_t(index_) << 1) ^ std::size_t(kind_);
  }

 private:
  VarId(VarKind kind, Label index, const std::string* name)
      : kind_(kind), index_(index), name_(name) {}

  VarKind kind_;
  Label index_;
  const std::string* name_;
};

}  // namespace zbeta
