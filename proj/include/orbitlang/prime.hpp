#pragma once

#include <cstdint>
#include <string>

#include "orbitlang/errors.hpp"

namespace orbitlang {

/// A validated prime modulus. Cheap to copy; every mod-p value in the library
/// carries one of these as its arithmetic context.
class Prime {
 public:
  /// Largest supported modulus. Keeps p^2 (the alphabet size) inside 32 bits
  /// and every product of two residues inside 64 bits.
  static constexpr std::uint32_t kMaxModulus = 65521;

  explicit Prime(std::uint32_t value) : p_(value) {
    if (!is_prime(value)) throw NotPrime(std::to_string(value) + " is not prime");
    if (value > kMaxModulus)
      throw InvalidArgument("modulus " + std::to_string(value) + " exceeds supported maximum " +
                            std::to_string(kMaxModulus));
  }

  std::uint32_t value() const { return p_; }

  /// Trial division; all supported moduli are below 2^16.
  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
  friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

/// An element of Z_p: a value in [0, p) plus its modulus.
class Residue {
 public:
  /// Reduces any signed integer into [0, p).
  Residue(std::int64_t value, Prime modulus) : p_(modulus) {
    const std::int64_t p = static_cast<std::int64_t>(modulus.value());
    v_ = static_cast<std::uint32_t>(((value % p) + p) % p);
  }

  std::uint32_t value() const { return v_; }
  Prime modulus() const { return p_; }

  friend Residue operator+(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue(static_cast<std::int64_t>(a.v_) + b.v_, a.p_);
  }
  friend Residue operator-(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue(static_cast<std::int64_t>(a.v_) - b.v_, a.p_);
  }
  friend Residue operator*(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue(static_cast<std::int64_t>(a.v_) * b.v_, a.p_);
  }
  Residue operator-() const { return Residue(-static_cast<std::int64_t>(v_), p_); }

  friend bool operator==(Residue a, Residue b) { return a.p_ == b.p_ && a.v_ == b.v_; }
  friend bool operator!=(Residue a, Residue b) { return !(a == b); }

 private:
  static void require_same_modulus(Residue a, Residue b) {
    if (a.p_ != b.p_)
      throw ModulusMismatch("residues carry different moduli: " + std::to_string(a.p_.value()) +
                            " vs " + std::to_string(b.p_.value()));
  }

  std::uint32_t v_;
  Prime p_;
};

/// Multiplicative inverse in Z_p via the extended Euclidean algorithm.
/// Throws NotInvertible on zero input.
inline Residue mod_inverse(Residue a) {
  if (a.value() == 0)
    throw NotInvertible("0 is not invertible modulo " + std::to_string(a.modulus().value()));
  std::int64_t r0 = a.modulus().value(), r1 = a.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    t0 -= q * t1;
    std::swap(r0, r1);
    std::swap(t0, t1);
  }
  // r0 = gcd = 1 since p is prime and a != 0
  return Residue(t0, a.modulus());
}

namespace detail {

/// Inverse on raw values; hot-path form of mod_inverse.
inline std::uint32_t inverse_value(std::uint32_t a, Prime p) {
  return mod_inverse(Residue(a, p)).value();
}

}  // namespace detail

}  // namespace orbitlang
