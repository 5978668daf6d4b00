#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"
#include "orbitlang/sl2.hpp"

namespace orbitlang {

/// Two length-n rows of residues mod p, acted on column by column by SL(2, Z_p).
/// Column i is the pair (upper[i], lower[i]). n = 0 is allowed.
class VectorPair {
 public:
  VectorPair(Prime p, std::vector<std::uint32_t> upper, std::vector<std::uint32_t> lower)
      : p_(p), u_(std::move(upper)), v_(std::move(lower)) {
    if (u_.size() != v_.size())
      throw InvalidArgument("rows differ in length: " + std::to_string(u_.size()) + " vs " +
                            std::to_string(v_.size()));
    for (std::uint32_t x : u_) require_residue(x);
    for (std::uint32_t x : v_) require_residue(x);
  }

  static VectorPair zero(Prime p, std::size_t n) {
    return VectorPair(p, std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0));
  }

  Prime modulus() const { return p_; }
  std::size_t length() const { return u_.size(); }
  const std::vector<std::uint32_t>& upper() const { return u_; }
  const std::vector<std::uint32_t>& lower() const { return v_; }

  std::pair<std::uint32_t, std::uint32_t> column(std::size_t i) const { return {u_[i], v_[i]}; }

  bool is_zero() const {
    for (std::size_t i = 0; i < u_.size(); ++i) {
      if (u_[i] != 0 || v_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const VectorPair& x, const VectorPair& y) {
    return x.p_ == y.p_ && x.u_ == y.u_ && x.v_ == y.v_;
  }
  friend bool operator!=(const VectorPair& x, const VectorPair& y) { return !(x == y); }
  friend bool operator<(const VectorPair& x, const VectorPair& y) {
    if (x.p_.value() != y.p_.value()) return x.p_.value() < y.p_.value();
    if (x.u_ != y.u_) return x.u_ < y.u_;
    return x.v_ < y.v_;
  }

 private:
  void require_residue(std::uint32_t x) const {
    if (x >= p_.value())
      throw InvalidArgument("entry " + std::to_string(x) + " is not a residue mod " +
                            std::to_string(p_.value()));
  }

  Prime p_;
  std::vector<std::uint32_t> u_, v_;
};

/// Left action: every column (u_i, v_i) becomes m * (u_i, v_i) mod p.
/// Zero columns stay zero.
inline VectorPair apply_matrix(const SL2Matrix& m, const VectorPair& x) {
  if (m.modulus() != x.modulus())
    throw ModulusMismatch("matrix modulus " + std::to_string(m.modulus().value()) +
                          " differs from vector modulus " + std::to_string(x.modulus().value()));
  const std::uint64_t p = x.modulus().value();
  const std::size_t n = x.length();
  std::vector<std::uint32_t> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t ui = x.upper()[i], vi = x.lower()[i];
    u[i] = static_cast<std::uint32_t>((m.a() * ui + m.b() * vi) % p);
    v[i] = static_cast<std::uint32_t>((m.c() * ui + m.d() * vi) % p);
  }
  return VectorPair(x.modulus(), std::move(u), std::move(v));
}

}  // namespace orbitlang
