#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orbitlang/bigcount.hpp"
#include "orbitlang/canonical.hpp"
#include "orbitlang/errors.hpp"
#include "orbitlang/prime.hpp"
#include "orbitlang/sl2.hpp"
#include "orbitlang/vector_pair.hpp"

namespace orbitlang {

/// Default cap on brute-force state spaces (p^(2n) packed states).
inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

/// A fully materialized orbit: sorted members plus the canonical representative.
struct Orbit {
  CanonicalForm representative;
  std::vector<VectorPair> members;

  std::size_t size() const { return members.size(); }
  bool contains(const VectorPair& x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

/// Breadth-first closure of {start} under the quarter-turn S, the shear T and
/// its inverse. S has order 4, so its inverse is reachable and the closure is
/// the full group orbit. Every member is checked to canonicalize identically.
inline Orbit orbit_bfs(const VectorPair& start) {
  const Prime p = start.modulus();
  const auto [s, t] = generators(p);
  const SL2Matrix gens[3] = {s, t, t.inverse()};

  std::set<VectorPair> seen{start};
  std::vector<VectorPair> frontier{start};
  while (!frontier.empty()) {
    std::vector<VectorPair> next;
    for (const VectorPair& y : frontier) {
      for (const SL2Matrix& g : gens) {
        VectorPair z = apply_matrix(g, y);
        if (seen.insert(z).second) next.push_back(std::move(z));
      }
    }
    frontier = std::move(next);
  }

  const CanonicalForm rep = canonicalize(start);
  for (const VectorPair& m : seen) {
    if (canonicalize(m) != rep)
      throw InternalInvariantViolation("orbit member canonicalizes to a different form");
  }
  return Orbit{rep, std::vector<VectorPair>(seen.begin(), seen.end())};
}

/// True iff both pairs reduce to the same canonical form.
inline bool same_orbit(const VectorPair& x, const VectorPair& y) {
  if (x.modulus() != y.modulus() || x.length() != y.length())
    throw ShapeMismatch("orbit comparison requires equal lengths and moduli");
  return canonicalize(x) == canonicalize(y);
}

/// Streams every canonical form of length n exactly once, in a fixed order:
/// the zero form; then the forms with zero lower row, by ascending lead and
/// lexicographic upper tail; then the forms with a nonzero lower row, by
/// ascending (lead, lower_start) and lexicographic free entries. The free
/// entries of a split form read, left to right: the upper entries strictly
/// between the landmarks, the lower entry at lower_start (from 1), then the
/// (upper, lower) pairs of the remaining columns.
class CanonicalFormStream {
 public:
  CanonicalFormStream(Prime p, std::size_t length) : p_(p), n_(length) {}

  std::optional<CanonicalForm> next() {
    switch (phase_) {
      case Phase::zero: {
        advance_phase();
        return CanonicalForm{VectorPair::zero(p_, n_), std::nullopt, std::nullopt};
      }
      case Phase::upper_only: {
        CanonicalForm out = make_upper_only();
        if (!advance_digits()) {
          if (++lead_ >= n_) advance_phase();
          reset_digits();
        }
        return out;
      }
      case Phase::split: {
        CanonicalForm out = make_split();
        if (!advance_digits()) {
          if (++low_ >= n_) {
            ++lead_;
            low_ = lead_ + 1;
            if (low_ >= n_) phase_ = Phase::done;
          }
          reset_digits();
        }
        return out;
      }
      case Phase::done:
        return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  enum class Phase { zero, upper_only, split, done };

  void advance_phase() {
    if (phase_ == Phase::zero) {
      lead_ = 0;
      if (n_ >= 1) {
        phase_ = Phase::upper_only;
      } else {
        phase_ = Phase::done;
      }
    } else if (phase_ == Phase::upper_only) {
      lead_ = 0;
      low_ = 1;
      phase_ = n_ >= 2 ? Phase::split : Phase::done;
    }
    reset_digits();
  }

  void reset_digits() {
    digits_.clear();
    mins_.clear();
    if (phase_ == Phase::upper_only && lead_ < n_) {
      digits_.assign(n_ - lead_ - 1, 0);
      mins_.assign(digits_.size(), 0);
    } else if (phase_ == Phase::split && low_ < n_) {
      const std::size_t count = (low_ - lead_ - 1) + 1 + 2 * (n_ - low_ - 1);
      digits_.assign(count, 0);
      mins_.assign(count, 0);
      const std::size_t low_slot = low_ - lead_ - 1;
      digits_[low_slot] = 1;  // the lower entry at lower_start is nonzero
      mins_[low_slot] = 1;
    }
  }

  bool advance_digits() {
    const std::uint32_t p = p_.value();
    std::size_t i = digits_.size();
    while (i > 0) {
      --i;
      if (digits_[i] + 1 < p) {
        ++digits_[i];
        return true;
      }
      digits_[i] = mins_[i];
    }
    return false;
  }

  CanonicalForm make_upper_only() const {
    std::vector<std::uint32_t> u(n_, 0), v(n_, 0);
    u[lead_] = 1;
    for (std::size_t i = 0; i < digits_.size(); ++i) u[lead_ + 1 + i] = digits_[i];
    return CanonicalForm{VectorPair(p_, std::move(u), std::move(v)), lead_, std::nullopt};
  }

  CanonicalForm make_split() const {
    std::vector<std::uint32_t> u(n_, 0), v(n_, 0);
    u[lead_] = 1;
    std::size_t slot = 0;
    for (std::size_t i = lead_ + 1; i < low_; ++i) u[i] = digits_[slot++];
    v[low_] = digits_[slot++];
    for (std::size_t i = low_ + 1; i < n_; ++i) {
      u[i] = digits_[slot++];
      v[i] = digits_[slot++];
    }
    return CanonicalForm{VectorPair(p_, std::move(u), std::move(v)), lead_, low_};
  }

  Prime p_;
  std::size_t n_;
  Phase phase_ = Phase::zero;
  std::size_t lead_ = 0, low_ = 0;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint32_t> mins_;
};

/// Counts canonical forms without enumerating them: the zero form, the
/// upper-only forms (p^(n-j) tails per lead position j), and the split forms
/// (p^(k-j-1) * (p-1) * p^(2(n-k)) per landmark pair j < k).
inline BigCount count_canonical_census(Prime p, std::size_t n) {
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

namespace detail {

/// Packs a state as base-p digits: upper row in positions 0..n-1, lower row
/// in positions n..2n-1. Valid whenever p^(2n) fits the brute-force budget.
inline std::uint64_t pack_state(const VectorPair& x) {
  const std::uint64_t p = x.modulus().value();
  const std::size_t n = x.length();
  std::uint64_t key = 0;
  for (std::size_t i = 2 * n; i > 0; --i) {
    const std::size_t d = i - 1;
    key = key * p + (d < n ? x.upper()[d] : x.lower()[d - n]);
  }
  return key;
}

inline VectorPair unpack_state(Prime p, std::size_t n, std::uint64_t key) {
  const std::uint64_t P = p.value();
  std::vector<std::uint32_t> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = static_cast<std::uint32_t>(key % P);
    key /= P;
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(key % P);
    key /= P;
  }
  return VectorPair(p, std::move(u), std::move(v));
}

}  // namespace detail

/// Partitions the full state space into orbits by repeated closure over
/// unvisited seeds; returns the orbit sizes in seed order. Uses a dense
/// visited bitmap for small spaces and a hash set above 2^24 states.
/// Throws BudgetExceeded when p^(2n) exceeds the budget.
inline std::vector<std::uint64_t> orbit_size_partition(Prime p, std::size_t n,
                                                       std::uint64_t budget = kDefaultStateBudget) {
  const BigCount space = pow_count(p.value(), 2 * n);
  if (space > budget)
    throw BudgetExceeded("state space of size " + space.str() + " exceeds budget " +
                         std::to_string(budget));
  const std::uint64_t total = space.convert_to<std::uint64_t>();
  const std::uint64_t P = p.value();

  const auto [s, t] = generators(p);
  const SL2Matrix ti = t.inverse();
  const std::uint64_t mats[3][4] = {{s.a(), s.b(), s.c(), s.d()},
                                    {t.a(), t.b(), t.c(), t.d()},
                                    {ti.a(), ti.b(), ti.c(), ti.d()}};

  std::vector<std::uint64_t> powers(2 * n + 1, 1);
  for (std::size_t i = 1; i <= 2 * n; ++i) powers[i] = powers[i - 1] * P;

  const auto neighbor = [&](std::uint64_t key, const std::uint64_t* m) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t u = key / powers[i] % P;
      const std::uint64_t v = key / powers[n + i] % P;
      out += ((m[0] * u + m[1] * v) % P) * powers[i];
      out += ((m[2] * u + m[3] * v) % P) * powers[n + i];
    }
    return out;
  };

  const bool dense = total <= (std::uint64_t{1} << 24);
  std::vector<bool> bitmap(dense ? total : 0, false);
  std::unordered_set<std::uint64_t> hashed;

  const auto visited = [&](std::uint64_t key) {
    return dense ? bool(bitmap[key]) : hashed.count(key) != 0;
  };
  const auto mark = [&](std::uint64_t key) {
    if (dense) {
      bitmap[key] = true;
    } else {
      hashed.insert(key);
    }
  };

  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> stack;
  std::uint64_t visited_total = 0;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    if (visited(seed)) continue;
    std::uint64_t size = 0;
    mark(seed);
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::uint64_t key = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& m : mats) {
        const std::uint64_t next = neighbor(key, m);
        if (!visited(next)) {
          mark(next);
          stack.push_back(next);
        }
      }
    }
    sizes.push_back(size);
    visited_total += size;
  }
  if (visited_total != total)
    throw InternalInvariantViolation("orbit sizes do not sum to the state space size");
  return sizes;
}

/// Orbit count by exhaustive partition; the independent oracle for the
/// counting formulas.
inline BigCount count_orbits_bruteforce(Prime p, std::size_t n,
                                        std::uint64_t budget = kDefaultStateBudget) {
  return BigCount(orbit_size_partition(p, n, budget).size());
}

}  // namespace orbitlang
