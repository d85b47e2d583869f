#pragma once

// Check registry and the prime-range runner behind `wilsonlab verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wilsonlab/bernoulli.hpp"
#include "wilsonlab/check_result.hpp"

namespace wilsonlab {

/// Largest prime the exact engine serves. 4(p-1) stays within kSuiteTableIndex.
inline constexpr std::uint64_t kExactPrimeLimit = 97;
/// Size of the exact table every suite run shares.
inline constexpr std::size_t kSuiteTableIndex = 400;

enum class Engine { Exact, Modular, Both };

std::string_view engine_name(Engine e);
/// Throws PreconditionViolated on an unknown name.
Engine parse_engine(std::string_view name);

struct SuiteSpec {
  std::string suite_id;
  std::vector<std::string> check_ids;
  std::uint64_t p_min = 2;
  std::uint64_t p_max = 2;
  /// 0 runs every tier a check knows.
  int modulus_exp = 0;
  Engine engine = Engine::Both;
};

struct SuiteSummary {
  long pass = 0;
  long fail = 0;
  long skipped = 0;
};

struct SuiteReport {
  SuiteSpec suite;
  std::vector<CongruenceCheckResult> results;
  SuiteSummary summary;
  double wall_time = 0.0;
};

struct CheckInputs {
  const BernoulliTable& table;
  Engine engine;
  int modulus_exp;
};

struct CheckInfo {
  std::string id;
  std::string description;
  /// false: the check is indexed by n rather than p and runs once, with p = 0.
  bool per_prime;
  std::function<std::vector<CongruenceCheckResult>(std::uint64_t p, const CheckInputs&)> run;
};

const std::vector<CheckInfo>& registry();
/// Throws UnknownCheck.
const CheckInfo& find_check(std::string_view id);

/// `suite` is a check id, a comma-separated list of ids, or "all".
/// Throws UnknownCheck, and UnknownRange when p_min > p_max.
SuiteSpec make_suite(std::string_view suite, std::uint64_t p_min, std::uint64_t p_max, int modulus_exp = 0,
                     Engine engine = Engine::Both);

/// Results sorted by (check_id, p, modulus_exp), independent of `jobs`.
/// Per-check errors become fail entries carrying the error name. `table`
/// defaults to default_table().
SuiteReport run_suite(const SuiteSpec& spec, unsigned jobs = 1, const BernoulliTable* table = nullptr);

/// Bernoulli table up to `max_index`, through the file named by
/// WILSONLAB_TABLE_CACHE when that variable is set.
BernoulliTable default_table(std::size_t max_index = kSuiteTableIndex);

enum class ScanClass { Wilson, Irregular };

/// Primes <= limit in the class, ascending. The irregular scan needs
/// B_{limit-3} (IndexOutOfTable beyond kMaxTableIndex).
std::vector<std::uint64_t> scan_primes(ScanClass cls, std::uint64_t limit);

}  // namespace wilsonlab
