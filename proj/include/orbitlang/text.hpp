#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlang/canonical.hpp"
#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"
#include "orbitlang/vector_pair.hpp"
#include "orbitlang/words.hpp"

namespace orbitlang {

namespace detail {

inline std::uint32_t parse_u32(std::string_view token) {
  std::uint32_t value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("not a decimal integer: '" + std::string(token) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

/// Word text: comma-separated decimal letters ("1,0,2"). For p <= 3 a compact
/// digit string ("102") is also accepted. The empty string is the empty word.
inline Word parse_word(std::string_view text, Prime p) {
  std::vector<std::uint32_t> letters;
  if (text.empty()) return Word(p, letters);
  if (text.find(',') != std::string_view::npos) {
    for (std::string_view token : detail::split(text, ','))
      letters.push_back(detail::parse_u32(token));
  } else if (p.value() <= 3) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError(std::string("bad letter digit '") + c + "'");
      letters.push_back(static_cast<std::uint32_t>(c - '0'));
    }
  } else {
    letters.push_back(detail::parse_u32(text));
  }
  return Word(p, std::move(letters));
}

/// Compact digits for p <= 3 (every letter is a single digit), comma-separated
/// decimal otherwise.
inline std::string format_word(const Word& w) {
  std::string out;
  if (w.modulus().value() <= 3) {
    for (std::uint32_t a : w.letters()) out += static_cast<char>('0' + a);
    return out;
  }
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

/// Vector pair text: "u1,...,un|v1,...,vn"; "|" is the empty pair.
inline VectorPair parse_vector_pair(std::string_view text, Prime p) {
  const auto halves = detail::split(text, '|');
  if (halves.size() != 2)
    throw ParseError("vector pair must contain exactly one '|' separator");
  const auto parse_row = [](std::string_view row) {
    std::vector<std::uint32_t> out;
    if (row.empty()) return out;
    for (std::string_view token : detail::split(row, ','))
      out.push_back(detail::parse_u32(token));
    return out;
  };
  std::vector<std::uint32_t> u = parse_row(halves[0]);
  std::vector<std::uint32_t> v = parse_row(halves[1]);
  if (u.size() != v.size())
    throw ParseError("rows differ in length: " + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()));
  return VectorPair(p, std::move(u), std::move(v));
}

inline std::string format_vector_pair(const VectorPair& x) {
  std::string out;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x.upper()[i]);
  }
  out += '|';
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x.lower()[i]);
  }
  return out;
}

inline std::string format_canonical(const CanonicalForm& form) {
  return format_vector_pair(form.pair);
}

}  // namespace orbitlang
