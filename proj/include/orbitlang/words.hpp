#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlang/bigcount.hpp"
#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"

namespace orbitlang {

/// A length-n word over the alphabet {0, 1, ..., p^2 - 1}.
class Word {
 public:
  Word(Prime p, std::vector<std::uint32_t> letters) : p_(p), letters_(std::move(letters)) {
    const std::uint32_t alphabet = p.value() * p.value();
    for (std::uint32_t a : letters_) {
      if (a >= alphabet)
        throw InvalidLetter("letter " + std::to_string(a) + " outside alphabet [0, " +
                            std::to_string(alphabet) + ")");
    }
  }

  Prime modulus() const { return p_; }
  std::size_t length() const { return letters_.size(); }
  const std::vector<std::uint32_t>& letters() const { return letters_; }

  friend bool operator==(const Word& x, const Word& y) {
    return x.p_ == y.p_ && x.letters_ == y.letters_;
  }
  friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }
  friend bool operator<(const Word& x, const Word& y) {
    if (x.p_.value() != y.p_.value()) return x.p_.value() < y.p_.value();
    return x.letters_ < y.letters_;
  }

 private:
  Prime p_;
  std::vector<std::uint32_t> letters_;
};

/// Membership test. A word belongs to the language iff it is all zeros, or
/// it reads: zeros, then a single 1, then letters below p, then optionally
/// one positive multiple of p followed by arbitrary letters.
inline bool is_word(const Word& w) {
  const std::uint32_t p = w.modulus().value();
  const auto& a = w.letters();
  const std::size_t n = a.size();
  std::size_t j = 0;
  while (j < n && a[j] == 0) ++j;
  if (j == n) return true;
  if (a[j] != 1) return false;
  std::size_t k = j + 1;
  while (k < n && a[k] < p) ++k;
  if (k == n) return true;
  return a[k] % p == 0;
}

/// Streams the members of the language of a given length in strictly
/// increasing lexicographic order. Generative: walks only accepted prefixes,
/// never filters the full alphabet power.
///
/// The walk runs a three-state automaton per position:
///   leading  — only zeros seen so far; next letter 0 (stay) or 1 (enter body)
///   body     — letters below p stay; a positive multiple of p enters the tail
///   tail     — every letter allowed
class WordStream {
 public:
  WordStream(Prime p, std::size_t length)
      : p_(p), n_(length), letters_(length, 0), state_(length + 1, State::leading) {}

  /// Next word, or nullopt when exhausted.
  std::optional<Word> next() {
    if (done_) return std::nullopt;
    if (first_) {
      first_ = false;
      return Word(p_, letters_);  // the all-zero word
    }
    std::size_t pos = n_;
    while (pos > 0) {
      --pos;
      if (auto cand = next_letter(state_[pos], letters_[pos])) {
        letters_[pos] = *cand;
        state_[pos + 1] = step(state_[pos], *cand);
        for (std::size_t i = pos + 1; i < n_; ++i) {
          letters_[i] = 0;
          state_[i + 1] = state_[i];  // letter 0 never changes state
        }
        return Word(p_, letters_);
      }
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  enum class State { leading, body, tail };

  State step(State s, std::uint32_t letter) const {
    const std::uint32_t p = p_.value();
    switch (s) {
      case State::leading:
        return letter == 0 ? State::leading : State::body;
      case State::body:
        return letter < p ? State::body : State::tail;
      case State::tail:
        return State::tail;
    }
    return State::tail;
  }

  /// Smallest admissible letter greater than `current` in state `s`.
  std::optional<std::uint32_t> next_letter(State s, std::uint32_t current) const {
    const std::uint32_t p = p_.value();
    switch (s) {
      case State::leading:
        return current == 0 ? std::optional<std::uint32_t>(1) : std::nullopt;
      case State::body:
        if (current + 1 < p) return current + 1;
        if (current == p - 1) return p;
        // current is a positive multiple of p; the next candidate is the next multiple
        if (current / p < p - 1) return current + p;
        return std::nullopt;
      case State::tail:
        if (current + 1 < p * p) return current + 1;
        return std::nullopt;
    }
    return std::nullopt;
  }

  Prime p_;
  std::size_t n_;
  std::vector<std::uint32_t> letters_;
  std::vector<State> state_;  // state_[i] = automaton state before position i
  bool first_ = true;
  bool done_ = false;
};

/// Language density, computed combinatorially: one all-zero word, plus for
/// each position j of the leading 1 the words that never leave the body
/// (p^(n-j) tails), plus for each body exit at position k the
/// p^(k-j-1) * (p-1) * p^(2(n-k)) words that pass through it.
inline BigCount count_words(Prime p, std::size_t n) {
  const std::uint64_t P = p.value();
  BigCount total = 1;
  for (std::size_t j = 1; j <= n; ++j) total += pow_count(P, n - j);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = j + 1; k <= n; ++k) {
      total += pow_count(P, k - j - 1) * (P - 1) * pow_count(P, 2 * (n - k));
    }
  }
  return total;
}

}  // namespace orbitlang
