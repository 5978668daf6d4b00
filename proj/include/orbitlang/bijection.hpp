#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitlang/canonical.hpp"
#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"
#include "orbitlang/vector_pair.hpp"
#include "orbitlang/words.hpp"

namespace orbitlang {

/// Letter -> column: a maps to (a mod p, a div p).
inline std::pair<std::uint32_t, std::uint32_t> phi(std::uint32_t letter, Prime p) {
  const std::uint32_t alphabet = p.value() * p.value();
  if (letter >= alphabet)
    throw InvalidLetter("letter " + std::to_string(letter) + " outside alphabet [0, " +
                        std::to_string(alphabet) + ")");
  return {letter % p.value(), letter / p.value()};
}

/// Column -> letter: (u, v) maps to u + v*p. Inverse of phi.
inline std::uint32_t phi_inv(std::pair<std::uint32_t, std::uint32_t> column, Prime p) {
  if (column.first >= p.value() || column.second >= p.value())
    throw InvalidArgument("column entries must be residues mod " + std::to_string(p.value()));
  return column.first + column.second * p.value();
}

/// Maps a language member to its vector pair, column by column. The image is
/// always a canonical pair; a non-member input throws NotInLanguage.
inline VectorPair word_to_vector(const Word& w) {
  if (!is_word(w)) throw NotInLanguage("word is not in the language");
  const std::size_t n = w.length();
  std::vector<std::uint32_t> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto col = phi(w.letters()[i], w.modulus());
    u[i] = col.first;
    v[i] = col.second;
  }
  return VectorPair(w.modulus(), std::move(u), std::move(v));
}

/// Maps a language member to the orbit it represents.
inline CanonicalForm word_to_orbit(const Word& w) {
  auto form = classify_canonical(word_to_vector(w));
  if (!form)
    throw InternalInvariantViolation("image of a language member is not canonical");
  return *form;
}

/// Maps any vector pair to the unique language member representing its orbit:
/// reduce to canonical form, then read the columns back as letters.
inline Word vector_to_word(const VectorPair& x) {
  const CanonicalForm form = canonicalize(x);
  const std::size_t n = form.pair.length();
  std::vector<std::uint32_t> letters(n);
  for (std::size_t i = 0; i < n; ++i) letters[i] = phi_inv(form.pair.column(i), x.modulus());
  return Word(x.modulus(), std::move(letters));
}

}  // namespace orbitlang
