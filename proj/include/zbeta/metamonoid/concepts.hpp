#pragma once

#include <concepts>
#include <string>

#include "zbeta/label.hpp"

namespace zbeta {

// A register space: elements carry a finite label set, with multiplication
// m(x,y->z), unit insertion e(x), deletion d(x), renaming rho(x->y) and
// disjoint union.
template <class I>
concept MetaMonoid = requires(const I& inst, const typename I::Element& p, const typename I::Element& q,
                              Label x) {
  { inst.multiply(p, x, x, x) } -> std::same_as<typename I::Element>;
  { inst.unit(p, x) } -> std::same_as<typename I::Element>;
  { inst.erase(p, x) } -> std::same_as<typename I::Element>;
  { inst.rename(p, x, x) } -> std::same_as<typename I::Element>;
  { inst.unite(p, q) } -> std::same_as<typename I::Element>;
  { inst.equal(p, q) } -> std::convertible_to<bool>;
  { inst.render(p) } -> std::convertible_to<std::string>;
};

// Doubly labelled register space (tails and heads) with tail and head
// multiplications and the swap map sw(tail x, head y).
template <class I>
concept MetaBicrossed = requires(const I& inst, const typename I::Element& p, const typename I::Element& q,
                                 Label x) {
  { inst.tm(p, x, x, x) } -> std::same_as<typename I::Element>;
  { inst.hm(p, x, x, x) } -> std::same_as<typename I::Element>;
  { inst.sw(p, x, x) } -> std::same_as<typename I::Element>;
  { inst.tail_unit(p, x) } -> std::same_as<typename I::Element>;
  { inst.head_unit(p, x) } -> std::same_as<typename I::Element>;
  { inst.tail_erase(p, x) } -> std::same_as<typename I::Element>;
  { inst.head_erase(p, x) } -> std::same_as<typename I::Element>;
  { inst.tail_rename(p, x, x) } -> std::same_as<typename I::Element>;
  { inst.head_rename(p, x, x) } -> std::same_as<typename I::Element>;
  { inst.unite(p, q) } -> std::same_as<typename I::Element>;
  { inst.equal(p, q) } -> std::convertible_to<bool>;
  { inst.render(p) } -> std::convertible_to<std::string>;
};

}  // namespace zbeta
