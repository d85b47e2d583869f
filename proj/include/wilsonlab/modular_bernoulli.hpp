#pragma once

// The fast path: Bernoulli quantities at indices d(p-1) and d(p-1)-2
// recovered modulo small powers of p from power sums S_n(p), in O(p) modular
// exponentiations per prime.
//
// All functions taking (p, precision) build their own context with two
// spare powers of p of working room.

#include <cstdint>
#include <vector>

#include "wilsonlab/bernoulli.hpp"
#include "wilsonlab/check_result.hpp"
#include "wilsonlab/padic.hpp"

namespace wilsonlab {

/// Working room above the precision a result is requested at.
inline constexpr int kPrecisionSlack = 2;

ContextPtr working_context(std::uint64_t p, int precision);

/// S_n(p) = sum_{v=1}^{p-1} v^n mod p^K, with S_0(p) = p - 1.
TrackedResidue power_sum_mod(std::uint64_t n, std::uint64_t p, int K);

/// (S_n(p) - S_0(p)) / p mod p^r. Throws NotDivisible unless
/// S_n(p) = S_0(p) mod p, which holds whenever (p-1) | n.
TrackedResidue sh_value(std::uint64_t n, std::uint64_t p, int r);

/// B_m mod p^K as S_m(p)/p.
///
/// K = 1 needs p >= 5 and (p-1) not dividing m. K = 2 additionally needs
/// p >= 7 and (p-1) not dividing m - 2: then the v = 1 term of the
/// integrated power-sum expansion vanishes, the v = 2 term carries p^3/3, and
/// every term with p in the Bernoulli denominator starts at p^3.
TrackedResidue folklore_bernoulli_mod(std::uint64_t m, std::uint64_t p, int K);

/// delta in the admissibility bound p >= max(5, r + 3 - delta): 0 when
/// d >= 2 and d = 1 mod p, else 1.
int admissibility_delta(std::uint64_t d, std::uint64_t p);
bool is_admissible(std::uint64_t d, std::uint64_t p, int r);

/// B^_{d(p-1)} mod p^r, solving
///   S-bar_n(p) = B^_n + sum_{v=2, v even}^{r-1} C(n, v+1) beta_{n-v} p^v  (mod p^r)
/// for B^_n. For r <= 4 the beta inputs come from the folklore route; r = 5
/// and 6 need `exact_inputs` to supply beta_{n-2} and beta_{n-4}.
/// Throws InadmissibleCase outside the admissible (p, r, d) range.
TrackedResidue adjusted_bernoulli_mod(std::uint64_t d, std::uint64_t p, int r,
                                      const BernoulliTable* exact_inputs = nullptr);

/// B-bar_d = B^_{d(p-1)} / (d(p-1)) mod p^(r - ord_p d).
TrackedResidue bar_mod(std::uint64_t d, std::uint64_t p, int r, const BernoulliTable* exact_inputs = nullptr);

/// B-bar_{d,2} mod p^K, K <= 2. d = 1, 2 come straight from the folklore
/// route; larger d use the order-2 Kummer relation
/// b_j - 2 b_{j+1} + b_{j+2} = 0 (mod p^2), i.e. b_d = b_1 + (d-1)(b_2 - b_1).
TrackedResidue bar2_mod(std::uint64_t d, std::uint64_t p, int K);

/// ord_p C(d(p-1), p-1).
Valuation binomial_valuation(std::uint64_t d, std::uint64_t p);

/// B-bar_1..B-bar_4 at precision r and B-bar_{1,2}, B-bar_{2,2} at
/// precision min(r, 2) (min(r, 1) for p = 5). Entries that a source cannot
/// supply are absent.
struct DividedBernoulliBundle {
  enum class Source { Modular, Exact };

  std::uint64_t p = 0;
  int r = 0;
  Source source = Source::Modular;
  std::vector<TrackedResidue> bars;
  std::vector<TrackedResidue> bars2;

  /// B-bar_d, 1-based; throws PreconditionViolated when absent.
  const TrackedResidue& bar(int d) const;
  /// B-bar_{d,2}, 1-based; throws PreconditionViolated when absent.
  const TrackedResidue& bar2(int d) const;
  bool has_bar(int d) const { return d >= 1 && static_cast<std::size_t>(d) <= bars.size(); }
  bool has_bar2(int d) const { return d >= 1 && static_cast<std::size_t>(d) <= bars2.size(); }
};

/// Modular-engine bundle: p >= 5, r <= 4 and p >= r + 2. Checks the Kummer
/// chain B-bar_i = B-bar_j (mod p) before returning (InvariantViolated).
DividedBernoulliBundle bundle(std::uint64_t p, int r = 4);

/// Same entries reduced from exact values. Works for every prime the table
/// reaches: p = 2 yields B-bar_1 only, p = 3 has no B-bar_{d,2}.
DividedBernoulliBundle exact_bundle(std::uint64_t p, int r, const BernoulliTable& table);

/// B_n/n = B_m/m (mod p) for even n = m != 0 (mod p-1).
CongruenceCheckResult kummer_check(std::uint64_t n, std::uint64_t m, std::uint64_t p, const BernoulliTable& table);

/// r-th forward difference with step p-1 of beta at n vanishes mod p^r,
/// under (1) (p-1) does not divide n and n > r, or (2) (p-1) | n and
/// p > r + n/(p-1). Exact inputs.
CongruenceCheckResult generalized_kummer_check(std::uint64_t n, std::uint64_t p, int r,
                                               const BernoulliTable& table);

/// The same statement at n = d(p-1) (condition 2), with B-bar values from
/// the modular engine. r <= 4.
CongruenceCheckResult generalized_kummer_check_modular(std::uint64_t d, std::uint64_t p, int r);

}  // namespace wilsonlab
