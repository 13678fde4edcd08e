#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zbeta {

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace zbeta
