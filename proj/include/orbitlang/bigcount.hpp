#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitlang {

/// Arbitrary-precision nonnegative integer used for all counting results.
using BigCount = boost::multiprecision::cpp_int;

/// base^exp by binary exponentiation, exact at any size.
inline BigCount pow_count(std::uint64_t base, std::uint64_t exp) {
  BigCount result = 1;
  BigCount b = base;
  while (exp != 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

}  // namespace orbitlang
