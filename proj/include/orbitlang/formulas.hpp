#pragma once

#include <cstddef>
#include <string>

#include "orbitlang/bigcount.hpp"
#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"

namespace orbitlang {

/// Closed form for the orbit count:
///   r(p, n) = (p^(2n-1) + p^(n+1) - p^(n-1) + p^2 - p - 1) / (p^2 - 1).
/// The division is asserted exact; failure would indicate a transcription bug.
/// r(p, 0) = 1 by convention (the single empty orbit).
inline BigCount r_closed(Prime p, std::size_t n) {
  if (n == 0) return 1;
  const std::uint64_t P = p.value();
  const BigCount numerator = pow_count(P, 2 * n - 1) + pow_count(P, n + 1) - pow_count(P, n - 1) +
                             BigCount(P) * P - P - 1;
  const BigCount denominator = BigCount(P) * P - 1;
  if (numerator % denominator != 0)
    throw InternalInvariantViolation("closed-form numerator not divisible by p^2 - 1 for p = " +
                                     std::to_string(P) + ", n = " + std::to_string(n));
  return numerator / denominator;
}

/// Increment between consecutive orbit counts: F(p, n) = p^(n-1) (p^n + p - 1).
/// Counts the orbits whose representatives have a nonvanishing first column.
inline BigCount F_lemma(Prime p, std::size_t n) {
  if (n == 0) throw InvalidArgument("increment is defined for n >= 1");
  const std::uint64_t P = p.value();
  return pow_count(P, n - 1) * (pow_count(P, n) + P - 1);
}

/// Orbit count via the recurrence alone:
///   F(p, 1) = 2p - 1,  F(p, n) = p F(p, n-1) + p^(2n-2) (p - 1),
///   r(p, 1) = 2,       r(p, n) = r(p, 1) + F(p, 1) + ... + F(p, n-1).
/// Independent route used to cross-check r_closed.
inline BigCount r_recursive(Prime p, std::size_t n) {
  if (n == 0) return 1;
  const std::uint64_t P = p.value();
  BigCount r = 2;
  BigCount f = BigCount(2) * P - 1;
  for (std::size_t m = 1; m < n; ++m) {
    r += f;
    f = P * f + pow_count(P, 2 * m) * (P - 1);
  }
  return r;
}

/// The p = 2 specialization (2^n + 1)(2^(n-1) + 1) / 3; equals r_closed(2, n).
inline BigCount moreira_reis(std::size_t n) {
  if (n == 0) return 1;
  const BigCount numerator = (pow_count(2, n) + 1) * (pow_count(2, n - 1) + 1);
  if (numerator % 3 != 0)
    throw InternalInvariantViolation("(2^n + 1)(2^(n-1) + 1) not divisible by 3 at n = " +
                                     std::to_string(n));
  return numerator / 3;
}

}  // namespace orbitlang
