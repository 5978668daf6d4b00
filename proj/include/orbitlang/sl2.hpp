#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"

namespace orbitlang {

/// A 2x2 matrix over Z_p with determinant 1. The determinant condition is
/// checked at construction, so every product of valid matrices is revalidated.
class SL2Matrix {
 public:
  SL2Matrix(Prime p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
      : p_(p),
        a_(Residue(a, p).value()),
        b_(Residue(b, p).value()),
        c_(Residue(c, p).value()),
        d_(Residue(d, p).value()) {
    const std::uint64_t det =
        (static_cast<std::uint64_t>(a_) * d_ + static_cast<std::uint64_t>(p.value()) * p.value() -
         static_cast<std::uint64_t>(b_) * c_) %
        p.value();
    if (det != 1 % p.value())
      throw InvalidArgument("matrix determinant is not 1 mod " + std::to_string(p.value()));
  }

  static SL2Matrix identity(Prime p) { return SL2Matrix(p, 1, 0, 0, 1); }

  Prime modulus() const { return p_; }
  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }
  std::uint32_t c() const { return c_; }
  std::uint32_t d() const { return d_; }

  /// Adjugate; equals the inverse because the determinant is 1.
  SL2Matrix inverse() const {
    return SL2Matrix(p_, d_, -static_cast<std::int64_t>(b_), -static_cast<std::int64_t>(c_), a_);
  }

  friend SL2Matrix operator*(const SL2Matrix& lhs, const SL2Matrix& rhs) {
    if (lhs.p_ != rhs.p_)
      throw ModulusMismatch("matrix product across different moduli");
    const std::int64_t a = static_cast<std::int64_t>(lhs.a_) * rhs.a_ + static_cast<std::int64_t>(lhs.b_) * rhs.c_;
    const std::int64_t b = static_cast<std::int64_t>(lhs.a_) * rhs.b_ + static_cast<std::int64_t>(lhs.b_) * rhs.d_;
    const std::int64_t c = static_cast<std::int64_t>(lhs.c_) * rhs.a_ + static_cast<std::int64_t>(lhs.d_) * rhs.c_;
    const std::int64_t d = static_cast<std::int64_t>(lhs.c_) * rhs.b_ + static_cast<std::int64_t>(lhs.d_) * rhs.d_;
    return SL2Matrix(lhs.p_, a, b, c, d);
  }

  friend bool operator==(const SL2Matrix& x, const SL2Matrix& y) {
    return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const SL2Matrix& x, const SL2Matrix& y) { return !(x == y); }

 private:
  Prime p_;
  std::uint32_t a_, b_, c_, d_;
};

/// The two standard generators reduced mod p: the quarter-turn (0,1;-1,0)
/// and the shear (1,1;0,1). Together they generate the whole group.
inline std::pair<SL2Matrix, SL2Matrix> generators(Prime p) {
  return {SL2Matrix(p, 0, 1, -1, 0), SL2Matrix(p, 1, 1, 0, 1)};
}

}  // namespace orbitlang
