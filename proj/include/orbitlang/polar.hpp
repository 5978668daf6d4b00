#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitlang/errors.hpp"

namespace orbitlang {

/// A vector over GF(2) of even dimension, packed into the low bits of a word.
struct GFVector {
  std::uint32_t bits = 0;
  unsigned dim = 0;
};

/// Standard symplectic form with hyperbolic pairs on adjacent coordinates
/// (0,1), (2,3), ...: sum of x_{2i} y_{2i+1} + x_{2i+1} y_{2i} over GF(2).
/// Any nondegenerate alternating form gives an isomorphic geometry, so the
/// convention does not affect counts.
inline int symplectic_form(GFVector x, GFVector y) {
  if (x.dim != y.dim) throw ShapeMismatch("symplectic form requires equal dimensions");
  if (x.dim % 2 != 0) throw InvalidArgument("symplectic form requires even dimension");
  std::uint32_t acc = 0;
  for (unsigned i = 0; i + 1 < x.dim; i += 2) {
    acc ^= ((x.bits >> i) & 1u) & ((y.bits >> (i + 1)) & 1u);
    acc ^= ((x.bits >> (i + 1)) & 1u) & ((y.bits >> i) & 1u);
  }
  return static_cast<int>(acc);
}

/// A subspace of GF(2)^d in reduced row echelon form. The basis rows are
/// fully reduced and sorted by pivot, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(unsigned ambient_dim) : ambient_(ambient_dim) {}

  unsigned ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::uint32_t>& basis() const { return rows_; }

  /// Reduces v against the basis; zero result means membership.
  std::uint32_t reduce(std::uint32_t v) const {
    for (std::uint32_t row : rows_) {
      if (v & pivot_bit(row)) v ^= row;
    }
    return v;
  }

  bool contains_vector(std::uint32_t v) const { return reduce(v) == 0; }

  bool contains(const Subspace& other) const {
    for (std::uint32_t row : other.rows_) {
      if (!contains_vector(row)) return false;
    }
    return true;
  }

  /// Span of this subspace and one extra vector, in canonical form.
  Subspace extended(std::uint32_t v) const {
    Subspace out = *this;
    out.insert(v);
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.rows_ < b.rows_;
  }

 private:
  static std::uint32_t pivot_bit(std::uint32_t row) { return row & (~row + 1); }  // lowest set bit

  void insert(std::uint32_t v) {
    v = reduce(v);
    if (v == 0) return;
    const std::uint32_t pb = pivot_bit(v);
    for (std::uint32_t& row : rows_) {
      if (row & pb) row ^= v;
    }
    rows_.push_back(v);
    std::sort(rows_.begin(), rows_.end(),
              [](std::uint32_t a, std::uint32_t b) { return pivot_bit(a) < pivot_bit(b); });
  }

  unsigned ambient_;
  std::vector<std::uint32_t> rows_;
};

/// The point-line geometry on GF(2)^(2n): points are the maximal totally
/// isotropic subspaces (dimension n), lines the totally isotropic subspaces
/// of dimension n-1, incidence is containment. Every line lies on exactly
/// three points.
struct Configuration {
  unsigned rank = 0;  // n
  std::vector<Subspace> points;
  std::vector<Subspace> lines;
  std::vector<std::vector<std::uint32_t>> line_points;  // per line, indices of incident points
};

/// Builds the geometry by extending isotropic flags level by level, with
/// canonical-form deduplication at each level. Supported for 1 <= n <= 3.
inline Configuration build_dual_polar_space(unsigned n) {
  if (n < 1 || n > 3)
    throw BudgetExceeded("dual polar space build supports 1 <= n <= 3, got " + std::to_string(n));
  const unsigned dim = 2 * n;
  const std::uint32_t vectors = 1u << dim;

  std::set<Subspace> level{Subspace(dim)};
  std::set<Subspace> lines_level;
  for (unsigned d = 1; d <= n; ++d) {
    if (d == n) lines_level = level;  // dimension n-1 reached
    std::set<Subspace> next;
    for (const Subspace& sub : level) {
      for (std::uint32_t v = 1; v < vectors; ++v) {
        if (sub.contains_vector(v)) continue;
        bool isotropic = true;
        for (std::uint32_t row : sub.basis()) {
          if (symplectic_form({v, dim}, {row, dim}) != 0) {
            isotropic = false;
            break;
          }
        }
        if (isotropic) next.insert(sub.extended(v));
      }
    }
    level = std::move(next);
  }

  Configuration cfg;
  cfg.rank = n;
  cfg.points.assign(level.begin(), level.end());
  cfg.lines.assign(lines_level.begin(), lines_level.end());
  cfg.line_points.resize(cfg.lines.size());
  for (std::size_t li = 0; li < cfg.lines.size(); ++li) {
    for (std::size_t pi = 0; pi < cfg.points.size(); ++pi) {
      if (cfg.points[pi].contains(cfg.lines[li])) cfg.line_points[li].push_back(pi);
    }
    if (cfg.line_points[li].size() != 3)
      throw InternalInvariantViolation("line incident to " +
                                       std::to_string(cfg.line_points[li].size()) +
                                       " points, expected 3");
  }
  return cfg;
}

/// Dimension of the quotient of the free GF(2) point space by the span of
/// the line sums: |points| - rank of the line/point incidence matrix.
inline std::size_t universal_embedding_dim(const Configuration& cfg) {
  const std::size_t width = (cfg.points.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots;  // reduced rows with distinct leading bits
  std::size_t rank = 0;
  for (const auto& incident : cfg.line_points) {
    std::vector<std::uint64_t> row(width, 0);
    for (std::uint32_t pi : incident) row[pi / 64] |= std::uint64_t{1} << (pi % 64);
    for (const auto& pivot : pivots) {
      std::size_t lead = 0;
      while (pivot[lead] == 0) ++lead;
      const std::uint64_t bit = pivot[lead] & (~pivot[lead] + 1);
      if (row[lead] & bit) {
        for (std::size_t w = 0; w < width; ++w) row[w] ^= pivot[w];
      }
    }
    if (std::any_of(row.begin(), row.end(), [](std::uint64_t w) { return w != 0; })) {
      pivots.push_back(std::move(row));
      ++rank;
    }
  }
  return cfg.points.size() - rank;
}

/// Least fixed point of the marking rule: a line with two marked points marks
/// its third. Monotone and idempotent; returns the sorted marked indices.
inline std::vector<std::uint32_t> closure(const Configuration& cfg,
                                          const std::vector<std::uint32_t>& marked) {
  std::vector<char> mark(cfg.points.size(), 0);
  for (std::uint32_t pi : marked) {
    if (pi >= cfg.points.size()) throw InvalidArgument("point index out of range");
    mark[pi] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& incident : cfg.line_points) {
      int count = mark[incident[0]] + mark[incident[1]] + mark[incident[2]];
      if (count == 2) {
        for (std::uint32_t pi : incident) {
          if (!mark[pi]) {
            mark[pi] = 1;
            changed = true;
          }
        }
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t pi = 0; pi < mark.size(); ++pi) {
    if (mark[pi]) out.push_back(pi);
  }
  return out;
}

/// First subset of the given size (in lexicographic index order) whose
/// closure marks every point; nullopt when none exists.
inline std::optional<std::vector<std::uint32_t>> find_closure_witness(const Configuration& cfg,
                                                                      std::size_t subset_size) {
  const std::size_t total = cfg.points.size();
  if (subset_size > total) return std::nullopt;
  std::vector<std::uint32_t> pick(subset_size);
  for (std::size_t i = 0; i < subset_size; ++i) pick[i] = i;
  while (true) {
    if (closure(cfg, pick).size() == total) return pick;
    // next lexicographic combination
    std::size_t i = subset_size;
    while (i > 0) {
      --i;
      if (pick[i] + (subset_size - i) < total) {
        ++pick[i];
        for (std::size_t j = i + 1; j < subset_size; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return std::nullopt;
    }
    if (subset_size == 0) return std::nullopt;
  }
}

}  // namespace orbitlang
