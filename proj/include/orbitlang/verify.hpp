#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "orbitlang/bigcount.hpp"
#include "orbitlang/bijection.hpp"
#include "orbitlang/canonical.hpp"
#include "orbitlang/formulas.hpp"
#include "orbitlang/orbits.hpp"
#include "orbitlang/text.hpp"
#include "orbitlang/words.hpp"

namespace orbitlang {

/// Cross-check results for one (p, n) cell.
struct VerifyCell {
  std::uint32_t p = 0;
  std::size_t n = 0;
  BigCount words, census, closed, recursive;
  std::optional<BigCount> bruteforce;  // empty when the state space exceeds the budget
  bool counts_agree = false;
  // "ok", "failed", or "skipped" (budget); exhaustive checks only run when the
  // state space is enumerable.
  std::string roundtrips = "skipped";
  std::string partition = "skipped";
  std::string failure;  // first counterexample, empty when the cell passes

  bool pass() const { return counts_agree && roundtrips != "failed" && partition != "failed"; }
};

struct VerifyReport {
  std::vector<VerifyCell> cells;
  std::uint64_t budget = kDefaultStateBudget;
  bool pass = false;
};

namespace detail {

inline VerifyCell verify_cell(Prime p, std::size_t n, std::uint64_t budget) {
  VerifyCell cell;
  cell.p = p.value();
  cell.n = n;
  cell.words = count_words(p, n);
  cell.census = count_canonical_census(p, n);
  cell.closed = r_closed(p, n);
  cell.recursive = r_recursive(p, n);

  const bool enumerable = pow_count(p.value(), 2 * n) <= budget;
  if (enumerable) cell.bruteforce = count_orbits_bruteforce(p, n, budget);

  cell.counts_agree = cell.words == cell.census && cell.census == cell.closed &&
                      cell.closed == cell.recursive &&
                      (!cell.bruteforce || *cell.bruteforce == cell.closed);
  if (!cell.counts_agree) {
    cell.failure = "count disagreement: words=" + cell.words.str() + " census=" + cell.census.str() +
                   " closed=" + cell.closed.str() + " recursive=" + cell.recursive.str() +
                   (cell.bruteforce ? " bruteforce=" + cell.bruteforce->str() : "");
    return cell;
  }

  if (!enumerable) return cell;

  // Word -> vector -> word over the whole language, and the vector image must
  // be canonical and pairwise distinct (counted against the census).
  cell.roundtrips = "ok";
  {
    WordStream stream(p, n);
    std::set<VectorPair> images;
    while (auto w = stream.next()) {
      const VectorPair image = word_to_vector(*w);
      if (!is_canonical(image) || vector_to_word(image) != *w) {
        cell.roundtrips = "failed";
        cell.failure = "word roundtrip failed at '" + format_word(*w) + "'";
        return cell;
      }
      images.insert(image);
    }
    if (BigCount(images.size()) != cell.words) {
      cell.roundtrips = "failed";
      cell.failure = "word images are not pairwise distinct";
      return cell;
    }
  }
  // Vector -> word -> orbit over the whole state space.
  {
    const std::uint64_t total = pow_count(p.value(), 2 * n).convert_to<std::uint64_t>();
    for (std::uint64_t key = 0; key < total; ++key) {
      const VectorPair x = detail::unpack_state(p, n, key);
      if (word_to_orbit(vector_to_word(x)) != canonicalize(x)) {
        cell.roundtrips = "failed";
        cell.failure = "vector roundtrip failed at '" + format_vector_pair(x) + "'";
        return cell;
      }
    }
  }

  // Orbit sizes partition the state space and divide the group order.
  cell.partition = "ok";
  {
    const auto sizes = orbit_size_partition(p, n, budget);
    const std::uint64_t group_order =
        std::uint64_t{p.value()} * (std::uint64_t{p.value()} * p.value() - 1);
    BigCount sum = 0;
    for (std::uint64_t size : sizes) {
      sum += size;
      if (group_order % size != 0) {
        cell.partition = "failed";
        cell.failure = "orbit size " + std::to_string(size) + " does not divide the group order " +
                       std::to_string(group_order);
        return cell;
      }
    }
    if (sum != pow_count(p.value(), 2 * n) || BigCount(sizes.size()) != cell.closed) {
      cell.partition = "failed";
      cell.failure = "orbit partition does not cover the state space";
      return cell;
    }
  }
  return cell;
}

}  // namespace detail

/// Runs the full cross-check suite over the (p, n) grid. Cells are
/// independent; with jobs > 1 they are computed by a worker pool, and the
/// report is identical regardless of the worker count.
inline VerifyReport run_verification(const std::vector<std::uint32_t>& primes,
                                     const std::vector<std::size_t>& lengths,
                                     std::uint64_t budget = kDefaultStateBudget,
                                     unsigned jobs = 1) {
  std::vector<std::pair<Prime, std::size_t>> grid;
  for (std::uint32_t p : primes) {
    for (std::size_t n : lengths) grid.emplace_back(Prime(p), n);
  }

  VerifyReport report;
  report.budget = budget;
  report.cells.resize(grid.size());

  if (jobs <= 1 || grid.size() <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      report.cells[i] = detail::verify_cell(grid[i].first, grid[i].second, budget);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    const unsigned count = std::min<std::size_t>(jobs, grid.size());
    for (unsigned w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= grid.size()) return;
          report.cells[i] = detail::verify_cell(grid[i].first, grid[i].second, budget);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  report.pass = true;
  for (const VerifyCell& cell : report.cells) report.pass = report.pass && cell.pass();
  return report;
}

}  // namespace orbitlang
