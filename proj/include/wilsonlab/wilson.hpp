#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wilsonlab/bernoulli.hpp"
#include "wilsonlab/check_result.hpp"
#include "wilsonlab/modular_bernoulli.hpp"
#include "wilsonlab/padic.hpp"

namespace wilsonlab {

/// (p-1)! mod p^K, K >= 1.
TrackedResidue factorial_mod(std::uint64_t p, int K);
/// W_p = ((p-1)! + 1)/p mod p^r.
TrackedResidue wilson_quotient(std::uint64_t p, int r);
/// q_p(a) = (a^(p-1) - 1)/p mod p^r; NotCoprime when p | a.
TrackedResidue fermat_quotient(const Integer& a, std::uint64_t p, int r);

enum class QSumMethod {
  /// sum of q_p(a)^n over a = 1..p-1
  Direct,
  /// n-fold division by p of the n-th forward difference (step p-1) of
  /// S_v(p) at v = 0
  Difference,
};

/// Q_p(n) mod p^r. Both methods return the same residue.
TrackedResidue q_sum(std::uint64_t p, int n, int r, QSumMethod method = QSumMethod::Direct);

struct PsiTerm {
  long coefficient;
  std::array<int, 4> exponents;
};

struct PsiPolynomial {
  int nu;
  std::vector<PsiTerm> terms;
};

/// psi_1..psi_4.
const PsiPolynomial& psi(int nu);

/// psi_nu(args...), precision of the least precise argument. Arguments must
/// share the prime (MixedContext).
TrackedResidue psi_eval(int nu, std::span<const TrackedResidue> args);

/// W_p = sum_{v=1}^{r} p^(v-1)/v! psi_v(Q_p(1), ..., Q_p(v)) mod p^r.
/// Needs odd p > r (HypothesisViolated) and r <= 4.
TrackedResidue wilson_via_psi(std::uint64_t p, int r);
/// (p-1)! = -1 + sum_{v=1}^{r} p^v/v! psi_v(...) mod p^(r+1).
TrackedResidue factorial_via_psi(std::uint64_t p, int r);

/// W_p mod p^r from divided Bernoulli numbers. r = 1 holds for every p,
/// r = 2, 3 need p >= 5, r = 4 needs p >= 7.
TrackedResidue wilson_via_bernoulli(std::uint64_t p, int r, const DividedBernoulliBundle& bundle);

/// Right-hand side of the tier for (1/n) p^(n-1) Q_p(n) mod p^r.
/// InadmissibleTier when no tier (n, r) is stated for this p.
TrackedResidue q_sum_tier_rhs(std::uint64_t p, int n, int r, const DividedBernoulliBundle& bundle);
/// (1/n) p^(n-1) Q_p(n) mod p^r from the direct sum.
TrackedResidue q_sum_tier_lhs(std::uint64_t p, int n, int r);
/// Q_p(n) mod p^(r-n+1) recovered from the tier (n, r).
TrackedResidue q_sum_via_bernoulli(std::uint64_t p, int n, int r, const DividedBernoulliBundle& bundle);

/// r W_p = (B_{r p^k (p-1)} + 1/p - 1)/p^k (mod p), with the right-hand
/// side formed exactly. IndexOutOfTable when the index exceeds the table.
CongruenceCheckResult carlitz_check(std::uint64_t p, std::uint64_t r, unsigned k, const BernoulliTable& table);

struct PrimeClass {
  bool wilson = false;
  bool irregular = false;
  std::vector<std::size_t> irregular_indices;
};

/// Odd p. The irregularity scan needs B_2..B_{p-3} from the table.
PrimeClass classify_prime(std::uint64_t p, const BernoulliTable& table);
bool is_wilson_prime(std::uint64_t p);

/// W_p mod p^4 from the r = 4 formula, truncated to t, equals the r = t
/// formula, t = 1, 2, 3. Needs p >= 7 and a bundle at precision 4.
CongruenceCheckResult reduction_chain_check(std::uint64_t p, const DividedBernoulliBundle& bundle);

/// (1/n) p^(n-1) Q_p(n) = (p-1) D + (1/n) p^2 (stated corrections), with D the
/// (n-1)-th difference of B-bar_1, B-bar_2, .... Mod p^3 for p >= 5 and
/// n <= 3 (prop36); mod p^4 for p >= 7 and n <= 4 (prop37). Below the prime
/// bound the result is skipped.
CongruenceCheckResult prop36_check(std::uint64_t p, int n, const DividedBernoulliBundle& bundle);
CongruenceCheckResult prop37_check(std::uint64_t p, int n, const DividedBernoulliBundle& bundle);

}  // namespace wilsonlab
