// Command-line front end: counting, enumeration, word/vector mapping,
// cross-verification, and the GF(2) dual polar space report.
//
// Exit codes: 0 success, 2 usage/input error, 3 cross-check or internal
// invariant failure, 4 word not in the language.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitlang/orbitlang.hpp"

namespace {

using nlohmann::ordered_json;
using namespace orbitlang;

constexpr std::uint64_t kEnumerateWarnThreshold = 1'000'000;

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ORBITLANG_BUDGET")) {
    char* end = nullptr;
    const std::uint64_t value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw ParseError(std::string("bad ORBITLANG_BUDGET value '") + env + "'");
    return value;
  }
  return kDefaultStateBudget;
}

std::vector<std::uint64_t> parse_range_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (std::string_view token : detail::split(text, ',')) {
    const std::size_t dots = token.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(detail::parse_u32(token));
      continue;
    }
    const std::uint64_t lo = detail::parse_u32(token.substr(0, dots));
    const std::uint64_t hi = detail::parse_u32(token.substr(dots + 2));
    if (lo > hi) throw ParseError("empty range '" + std::string(token) + "'");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int run_count(std::uint32_t p_raw, std::size_t n, const std::string& method,
              std::optional<std::uint64_t> budget_flag) {
  const Prime p(p_raw);
  const std::uint64_t budget = resolve_budget(budget_flag);

  ordered_json out{{"p", p_raw},           {"n", n},     {"r_closed", nullptr},
                   {"r_recursive", nullptr}, {"words", nullptr}, {"bruteforce", nullptr},
                   {"agree", true}};
  std::vector<BigCount> values;
  const auto record = [&](const char* key, BigCount value) {
    out[key] = value.str();
    values.push_back(std::move(value));
  };

  if (method == "closed" || method == "all") record("r_closed", r_closed(p, n));
  if (method == "recursive" || method == "all") record("r_recursive", r_recursive(p, n));
  if (method == "words" || method == "all") record("words", count_words(p, n));
  if (method == "bruteforce") {
    record("bruteforce", count_orbits_bruteforce(p, n, budget));
  } else if (method == "all" && pow_count(p_raw, 2 * n) <= budget) {
    record("bruteforce", count_orbits_bruteforce(p, n, budget));
  }

  bool agree = true;
  for (const BigCount& v : values) agree = agree && v == values.front();
  out["agree"] = agree;
  std::cout << out.dump() << "\n";
  return agree ? 0 : 3;
}

int run_enumerate(std::uint32_t p_raw, std::size_t n, const std::string& kind,
                  const std::string& format, bool force) {
  const Prime p(p_raw);
  const BigCount total = kind == "words" ? count_words(p, n) : count_canonical_census(p, n);
  if (!force && total > kEnumerateWarnThreshold) {
    std::cerr << "refusing to enumerate " << total << " items (threshold "
              << kEnumerateWarnThreshold << "); pass --force to override\n";
    return 2;
  }

  if (format == "csv") std::cout << (kind == "words" ? "word\n" : "u,v\n");

  if (kind == "words") {
    WordStream stream(p, n);
    while (auto w = stream.next()) {
      if (format == "text") {
        std::cout << format_word(*w) << "\n";
      } else if (format == "json") {
        std::cout << ordered_json{{"letters", w->letters()}}.dump() << "\n";
      } else {
        std::cout << csv_field(format_word(*w)) << "\n";
      }
    }
  } else {
    CanonicalFormStream stream(p, n);
    while (auto form = stream.next()) {
      if (format == "text") {
        std::cout << format_canonical(*form) << "\n";
      } else if (format == "json") {
        std::cout << ordered_json{{"u", form->pair.upper()}, {"v", form->pair.lower()}}.dump()
                  << "\n";
      } else {
        std::string u, v;
        for (std::size_t i = 0; i < form->pair.length(); ++i) {
          if (i > 0) {
            u += ',';
            v += ',';
          }
          u += std::to_string(form->pair.upper()[i]);
          v += std::to_string(form->pair.lower()[i]);
        }
        std::cout << csv_field(u) << "," << csv_field(v) << "\n";
      }
    }
  }
  return 0;
}

int run_map(std::uint32_t p_raw, const std::optional<std::string>& word_text,
            const std::optional<std::string>& vector_text) {
  const Prime p(p_raw);
  if (word_text) {
    const Word w = parse_word(*word_text, p);
    std::cout << format_canonical(word_to_orbit(w)) << "\n";
    return 0;
  }
  const VectorPair x = parse_vector_pair(*vector_text, p);
  std::cout << format_canonical(canonicalize(x)) << "\n";
  std::cout << format_word(vector_to_word(x)) << "\n";
  return 0;
}

ordered_json verify_report_json(const VerifyReport& report) {
  ordered_json cells = ordered_json::array();
  for (const VerifyCell& cell : report.cells) {
    ordered_json jc{{"p", cell.p},
                    {"n", cell.n},
                    {"words", cell.words.str()},
                    {"census", cell.census.str()},
                    {"r_closed", cell.closed.str()},
                    {"r_recursive", cell.recursive.str()},
                    {"bruteforce", nullptr},
                    {"counts_agree", cell.counts_agree},
                    {"roundtrips", cell.roundtrips},
                    {"partition", cell.partition},
                    {"pass", cell.pass()}};
    if (cell.bruteforce) jc["bruteforce"] = cell.bruteforce->str();
    if (!cell.failure.empty()) jc["failure"] = cell.failure;
    cells.push_back(std::move(jc));
  }
  return ordered_json{{"budget", report.budget}, {"cells", std::move(cells)}, {"pass", report.pass}};
}

int run_verify(const std::string& p_list, const std::string& n_list, const std::string& format,
               std::optional<std::uint64_t> budget_flag, unsigned jobs) {
  std::vector<std::uint32_t> primes;
  for (std::uint64_t p : parse_range_list(p_list)) {
    Prime check(static_cast<std::uint32_t>(p));  // reject non-primes up front
    primes.push_back(check.value());
  }
  std::vector<std::size_t> lengths;
  for (std::uint64_t n : parse_range_list(n_list)) lengths.push_back(n);

  const VerifyReport report =
      run_verification(primes, lengths, resolve_budget(budget_flag), jobs);

  if (format == "json") {
    std::cout << verify_report_json(report).dump() << "\n";
  } else {
    for (const VerifyCell& cell : report.cells) {
      std::cout << "p=" << cell.p << " n=" << cell.n << " words=" << cell.words
                << " census=" << cell.census << " closed=" << cell.closed
                << " recursive=" << cell.recursive << " bruteforce="
                << (cell.bruteforce ? cell.bruteforce->str() : std::string("-"))
                << " roundtrips=" << cell.roundtrips << " partition=" << cell.partition << " "
                << (cell.pass() ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "verify: " << (report.pass ? "PASS" : "FAIL") << " (" << report.cells.size()
              << " cells)\n";
  }
  if (!report.pass) {
    for (const VerifyCell& cell : report.cells) {
      if (!cell.pass()) {
        std::cerr << "first failure at p=" << cell.p << " n=" << cell.n << ": " << cell.failure
                  << "\n";
        break;
      }
    }
    return 3;
  }
  return 0;
}

int run_polar(unsigned n, bool find_witness) {
  if (find_witness && n > 2) {
    std::cerr << "--find-closure-witness supports n <= 2 only\n";
    return 2;
  }
  const Configuration cfg = build_dual_polar_space(n);
  ordered_json out{{"points", cfg.points.size()},
                   {"lines", cfg.lines.size()},
                   {"udim", universal_embedding_dim(cfg)},
                   {"witness", nullptr},
                   {"computed_line_count", cfg.lines.size()}};
  if (find_witness) {
    if (auto witness = find_closure_witness(cfg, 5)) out["witness"] = *witness;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_rank(std::uint32_t p_raw, std::size_t n) {
  const Prime p(p_raw);
  std::cout << ordered_json{{"p", p_raw}, {"n", n},
                            {"rank_of_fundamental_group", r_closed(p, n).str()}}
                   .dump()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counting and cross-validation of SL(2,Z_p) orbit spaces, their word language,"
               " and the GF(2) dual polar spaces"};
  app.require_subcommand(1);

  std::uint32_t p_value = 2;
  std::size_t n_value = 0;
  std::string method = "all";
  std::string kind;
  std::string format = "text";
  std::string p_list, n_list;
  std::optional<std::uint64_t> budget_flag;
  std::optional<std::string> word_text, vector_text;
  unsigned jobs = 1;
  bool force = false;
  bool report_flag = false;
  bool find_witness = false;
  unsigned polar_n = 1;

  auto* count = app.add_subcommand("count", "count orbits/words with one or all methods");
  count->add_option("-p", p_value, "prime modulus")->required();
  count->add_option("-n", n_value, "length")->required();
  count->add_option("--method", method, "closed|recursive|words|bruteforce|all")
      ->check(CLI::IsMember({"closed", "recursive", "words", "bruteforce", "all"}));
  count->add_option("--budget", budget_flag, "brute-force state budget");

  auto* enumerate = app.add_subcommand("enumerate", "stream all words or all orbit representatives");
  enumerate->add_option("-p", p_value, "prime modulus")->required();
  enumerate->add_option("-n", n_value, "length")->required();
  enumerate->add_option("--kind", kind, "words|orbits")
      ->required()
      ->check(CLI::IsMember({"words", "orbits"}));
  enumerate->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate->add_flag("--force", force, "enumerate past the safety threshold");
  enumerate->add_option("--jobs", jobs, "worker threads (output is identical for any value)");

  auto* map = app.add_subcommand("map", "map a word to its orbit or a vector pair to its word");
  map->add_option("-p", p_value, "prime modulus")->required();
  auto* word_opt = map->add_option("--word", word_text, "word, e.g. '12' or '1,2'");
  auto* vector_opt = map->add_option("--vector", vector_text, "vector pair, e.g. '0,1|1,0'");
  word_opt->excludes(vector_opt);

  auto* verify = app.add_subcommand("verify", "run the full cross-check suite over a (p, n) grid");
  verify->add_option("-p", p_list, "comma-separated primes, e.g. 2,3,5")->required();
  verify->add_option("-n", n_list, "lengths, e.g. 1..4 or 0,2,3")->required();
  verify->add_option("--format", format, "human|json")
      ->check(CLI::IsMember({"human", "json"}));
  verify->add_option("--budget", budget_flag, "brute-force state budget");
  verify->add_option("--jobs", jobs, "worker threads (report is identical for any value)");

  auto* polar = app.add_subcommand("polar", "dual polar space over GF(2): counts, udim, closure");
  polar->add_option("-n,--n", polar_n, "rank (1..3)")->required();
  polar->add_flag("--report", report_flag, "emit the counts/udim report (default)");
  polar->add_flag("--find-closure-witness", find_witness,
                  "search for a 5-point generating set (n <= 2)");

  auto* rank = app.add_subcommand("rank", "rank of the fundamental group invariant (= closed-form count)");
  rank->alias("rank_of_fundamental_group");
  rank->add_option("-p", p_value, "prime modulus")->required();
  rank->add_option("-n", n_value, "length")->required();

  try {
    app.parse(argc, argv);
    if (count->parsed()) return run_count(p_value, n_value, method, budget_flag);
    if (enumerate->parsed()) return run_enumerate(p_value, n_value, kind, format, force);
    if (map->parsed()) {
      if (!word_text && !vector_text) {
        std::cerr << "map requires --word or --vector\n";
        return 2;
      }
      return run_map(p_value, word_text, vector_text);
    }
    if (verify->parsed()) {
      if (format == "text") format = "human";
      return run_verify(p_list, n_list, format, budget_flag, jobs);
    }
    if (polar->parsed()) return run_polar(polar_n, find_witness);
    if (rank->parsed()) return run_rank(p_value, n_value);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const NotInLanguage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InternalInvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
