#pragma once

// Right-hand sides of the Wilson-quotient and Fermat-quotient power-sum
// congruences, written out one term per printed summand. A wrong
// coefficient therefore shows up as one wrong row in this table.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wilsonlab/modular_bernoulli.hpp"

namespace wilsonlab {

/// Exponent slots in a FormulaTerm: B-bar_1..B-bar_4, B-bar_{1,2}, B-bar_{2,2}.
enum BarSlot { kB1, kB2, kB3, kB4, kB12, kB22, kBarSlots };

struct FormulaTerm {
  std::string_view label;
  long num;
  long den;
  /// Extra factor (p - 1).
  bool times_p_minus_1;
  int p_power;
  std::array<int, kBarSlots> exponents;
};

/// One tier: the congruence holds modulo p^modulus_exp for p >= min_prime.
/// n = 0 is the Wilson quotient; n = 1..4 is (1/n) p^(n-1) Q_p(n).
struct TierFormula {
  int n;
  int modulus_exp;
  std::uint64_t min_prime;
  std::vector<FormulaTerm> terms;
};

/// W_p mod p^r, r = 1..4.
const TierFormula& wilson_formula(int r);
/// (1/n) p^(n-1) Q_p(n) mod p^r; nullptr when no such tier is stated.
const TierFormula* qsum_formula(int n, int r);
/// All stated Q tiers, ordered by (n, r).
const std::vector<TierFormula>& qsum_formulas();

/// Sum of the terms over `bundle`, mod p^modulus_exp. Throws
/// PrecisionExhausted when the bundle is too coarse.
TrackedResidue evaluate(const TierFormula& formula, const DividedBernoulliBundle& bundle);

}  // namespace wilsonlab
