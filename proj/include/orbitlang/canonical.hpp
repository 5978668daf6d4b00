#pragma once

#include <cstddef>
#include <optional>

#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"
#include "orbitlang/sl2.hpp"
#include "orbitlang/vector_pair.hpp"

namespace orbitlang {

/// The distinguished representative of an orbit, together with its landmarks.
///
/// A nonzero canonical pair looks like one of
///
///   upper:  0 .. 0 1 u .. u 0 u .. u      upper:  0 .. 0 1 u .. u
///   lower:  0 .. 0 0 0 .. 0 w v .. v  or  lower:  0 .. 0 0 0 .. 0
///                  ^        ^                            ^
///                  lead     lower_start                  lead
///
/// where u, v range over all residues and w over nonzero residues.
/// `lead` is the first nonzero column (always equal to (1,0)); `lower_start`
/// is the first column whose lower entry is nonzero, if any. The zero pair
/// has both landmarks empty.
struct CanonicalForm {
  VectorPair pair;
  std::optional<std::size_t> lead;
  std::optional<std::size_t> lower_start;

  friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
    return x.pair == y.pair;
  }
  friend bool operator!=(const CanonicalForm& x, const CanonicalForm& y) { return !(x == y); }
  friend bool operator<(const CanonicalForm& x, const CanonicalForm& y) {
    return x.pair < y.pair;
  }
};

/// Checks the shape above and derives the landmarks; nullopt when the pair
/// is not canonical.
inline std::optional<CanonicalForm> classify_canonical(const VectorPair& x) {
  const std::size_t n = x.length();
  std::size_t lead = 0;
  while (lead < n && x.upper()[lead] == 0 && x.lower()[lead] == 0) ++lead;
  if (lead == n) return CanonicalForm{x, std::nullopt, std::nullopt};
  if (x.upper()[lead] != 1 || x.lower()[lead] != 0) return std::nullopt;
  std::size_t low = lead + 1;
  while (low < n && x.lower()[low] == 0) ++low;
  if (low == n) return CanonicalForm{x, lead, std::nullopt};
  if (x.upper()[low] != 0) return std::nullopt;
  return CanonicalForm{x, lead, low};
}

inline bool is_canonical(const VectorPair& x) { return classify_canonical(x).has_value(); }

/// Reduces a vector pair to the unique canonical form in its orbit.
///
/// Steps: locate the first nonzero column; swap rows (quarter-turn generator)
/// if its upper entry vanishes; scale that column to (1,0) with
/// (a^-1, 0; -b, a) where (a, b) is the column — any determinant-1 matrix
/// fixing (1,0)-shape would do, the residual freedom being the shear
/// stabilizer removed in the last step; finally, if some later column has
/// nonzero lower entry, a shear (1, r; 0, 1) zeroes that column's upper entry.
inline CanonicalForm canonicalize(const VectorPair& x) {
  const Prime p = x.modulus();
  const std::size_t n = x.length();

  std::size_t lead = 0;
  while (lead < n && x.upper()[lead] == 0 && x.lower()[lead] == 0) ++lead;
  if (lead == n) return CanonicalForm{x, std::nullopt, std::nullopt};

  VectorPair y = x;
  if (y.upper()[lead] == 0) {
    y = apply_matrix(SL2Matrix(p, 0, 1, -1, 0), y);
  }
  const std::int64_t a = y.upper()[lead];
  const std::int64_t b = y.lower()[lead];
  y = apply_matrix(SL2Matrix(p, detail::inverse_value(static_cast<std::uint32_t>(a), p), 0, -b, a), y);

  std::size_t low = lead + 1;
  while (low < n && y.lower()[low] == 0) ++low;
  if (low < n) {
    const std::int64_t uk = y.upper()[low];
    const std::int64_t vk = y.lower()[low];
    const std::int64_t r = -(uk * detail::inverse_value(static_cast<std::uint32_t>(vk), p)) %
                           static_cast<std::int64_t>(p.value());
    y = apply_matrix(SL2Matrix(p, 1, r, 0, 1), y);
    return CanonicalForm{y, lead, low};
  }
  return CanonicalForm{y, lead, std::nullopt};
}

}  // namespace orbitlang
