#include "wilsonlab/formulas.hpp"

#include <algorithm>
#include <string>

#include "wilsonlab/error.hpp"

namespace wilsonlab {

namespace {

using E = std::array<int, kBarSlots>;

constexpr E b1{1, 0, 0, 0, 0, 0};
constexpr E b2{0, 1, 0, 0, 0, 0};
constexpr E b3{0, 0, 1, 0, 0, 0};
constexpr E b4{0, 0, 0, 1, 0, 0};
constexpr E b12{0, 0, 0, 0, 1, 0};
constexpr E b22{0, 0, 0, 0, 0, 1};
constexpr E b1sq{2, 0, 0, 0, 0, 0};
constexpr E b1cu{3, 0, 0, 0, 0, 0};
constexpr E b1_4{4, 0, 0, 0, 0, 0};
constexpr E b1b2{1, 1, 0, 0, 0, 0};
constexpr E b1b3{1, 0, 1, 0, 0, 0};
constexpr E b2sq{0, 2, 0, 0, 0, 0};
constexpr E b1sq_b2{2, 1, 0, 0, 0, 0};
constexpr E b1_b12{1, 0, 0, 0, 1, 0};

const std::vector<TierFormula>& wilson_formulas() {
  static const std::vector<TierFormula> table = {
      {0, 1, 2, {{"W1: -B1", -1, 1, false, 0, b1}}},
      {0, 2, 5,
       {{"W2: -2 B1", -2, 1, false, 0, b1},
        {"W2: +B2", 1, 1, false, 0, b2},
        {"W2: -p/2 B1^2", -1, 2, false, 1, b1sq}}},
      {0, 3, 5,
       {{"W3: -3 B1", -3, 1, false, 0, b1},
        {"W3: +3 B2", 3, 1, false, 0, b2},
        {"W3: -B3", -1, 1, false, 0, b3},
        {"W3: -3p/2 B1^2", -3, 2, false, 1, b1sq},
        {"W3: +p B1 B2", 1, 1, false, 1, b1b2},
        {"W3: -p^2/6 B1^3", -1, 6, false, 2, b1cu},
        {"W3: -p^2/3 B12", -1, 3, false, 2, b12}}},
      {0, 4, 7,
       {{"W4: -4 B1", -4, 1, false, 0, b1},
        {"W4: +6 B2", 6, 1, false, 0, b2},
        {"W4: -4 B3", -4, 1, false, 0, b3},
        {"W4: +B4", 1, 1, false, 0, b4},
        {"W4: -3p B1^2", -3, 1, false, 1, b1sq},
        {"W4: +4p B1 B2", 4, 1, false, 1, b1b2},
        {"W4: -p B1 B3", -1, 1, false, 1, b1b3},
        {"W4: -p/2 B2^2", -1, 2, false, 1, b2sq},
        {"W4: -2p^2/3 B1^3", -2, 3, false, 2, b1cu},
        {"W4: +p^2/2 B1^2 B2", 1, 2, false, 2, b1sq_b2},
        {"W4: -2p^2/3 B12", -2, 3, false, 2, b12},
        {"W4: +p^2/3 B22", 1, 3, false, 2, b22},
        {"W4: -p^3/24 B1^4", -1, 24, false, 3, b1_4},
        {"W4: -p^3/3 B1 B12", -1, 3, false, 3, b1_b12}}},
  };
  return table;
}

}  // namespace

const std::vector<TierFormula>& qsum_formulas() {
  static const std::vector<TierFormula> table = {
      {1, 1, 3, {{"Q1 mod p: -B1", -1, 1, false, 0, b1}}},
      {1, 2, 5, {{"Q1 mod p^2: (p-1) B1", 1, 1, true, 0, b1}}},
      {1, 3, 5,
       {{"Q1 mod p^3: (p-1) B1", 1, 1, true, 0, b1},
        {"Q1 mod p^3: -p^2 B12", -1, 1, false, 2, b12}}},
      {1, 4, 5,
       {{"Q1 mod p^4: (p-1) B1", 1, 1, true, 0, b1},
        {"Q1 mod p^4: -p^2 B12", -1, 1, false, 2, b12},
        {"Q1 mod p^4: +11p^3/6 B12", 11, 6, false, 3, b12}}},
      {2, 2, 3,
       {{"Q2 mod p^2: -B2", -1, 1, false, 0, b2},
        {"Q2 mod p^2: +B1", 1, 1, false, 0, b1}}},
      {2, 3, 5,
       {{"Q2 mod p^3: (p-1) B2", 1, 1, true, 0, b2},
        {"Q2 mod p^3: -(p-1) B1", -1, 1, true, 0, b1},
        {"Q2 mod p^3: -p^2 B12", -1, 1, false, 2, b12}}},
      {2, 4, 5,
       {{"Q2 mod p^4: (p-1) B2", 1, 1, true, 0, b2},
        {"Q2 mod p^4: -(p-1) B1", -1, 1, true, 0, b1},
        {"Q2 mod p^4: +p^2 B12", 1, 1, false, 2, b12},
        {"Q2 mod p^4: -2p^2 B22", -2, 1, false, 2, b22},
        {"Q2 mod p^4: +5p^3/2 B12", 5, 2, false, 3, b12}}},
      {3, 3, 5,
       {{"Q3 mod p^3: -B3", -1, 1, false, 0, b3},
        {"Q3 mod p^3: +2 B2", 2, 1, false, 0, b2},
        {"Q3 mod p^3: -B1", -1, 1, false, 0, b1},
        {"Q3 mod p^3: -p^2/3 B12", -1, 3, false, 2, b12}}},
      {3, 4, 7,
       {{"Q3 mod p^4: (p-1) B3", 1, 1, true, 0, b3},
        {"Q3 mod p^4: -2(p-1) B2", -2, 1, true, 0, b2},
        {"Q3 mod p^4: (p-1) B1", 1, 1, true, 0, b1},
        {"Q3 mod p^4: +7p^2/3 B12", 7, 3, false, 2, b12},
        {"Q3 mod p^4: -8p^2/3 B22", -8, 3, false, 2, b22},
        {"Q3 mod p^4: +p^3 B12", 1, 1, false, 3, b12}}},
      {4, 4, 7,
       {{"Q4 mod p^4: -B4", -1, 1, false, 0, b4},
        {"Q4 mod p^4: +3 B3", 3, 1, false, 0, b3},
        {"Q4 mod p^4: -3 B2", -3, 1, false, 0, b2},
        {"Q4 mod p^4: +B1", 1, 1, false, 0, b1},
        {"Q4 mod p^4: +p^2 B12", 1, 1, false, 2, b12},
        {"Q4 mod p^4: -p^2 B22", -1, 1, false, 2, b22}}},
  };
  return table;
}

const TierFormula& wilson_formula(int r) {
  if (r < 1 || r > 4) throw Error(ErrorKind::PreconditionViolated, "Wilson formulas exist for r = 1..4");
  return wilson_formulas()[static_cast<std::size_t>(r - 1)];
}

const TierFormula* qsum_formula(int n, int r) {
  for (const auto& f : qsum_formulas()) {
    if (f.n == n && f.modulus_exp == r) return &f;
  }
  return nullptr;
}

TrackedResidue evaluate(const TierFormula& formula, const DividedBernoulliBundle& bundle) {
  const int r = formula.modulus_exp;
  if (bundle.r < r) {
    throw Error(ErrorKind::PrecisionExhausted, "bundle known mod p^" + std::to_string(bundle.r) +
                                                   ", formula needs p^" + std::to_string(r));
  }
  const ContextPtr ctx = working_context(bundle.p, r);
  TrackedResidue sum = TrackedResidue::zero(ctx, r);
  for (const auto& term : formula.terms) {
    // Every factor is needed only to precision r - p_power.
    const int need = r - term.p_power;
    TrackedResidue value(ctx, Integer(1), std::max(need, 0));
    for (int slot = 0; slot < kBarSlots; ++slot) {
      const int e = term.exponents[static_cast<std::size_t>(slot)];
      if (e == 0) continue;
      const TrackedResidue& entry = slot < 4 ? bundle.bar(slot + 1) : bundle.bar2(slot - 3);
      value *= TrackedResidue(ctx, entry.residue(), std::min(entry.precision(), std::max(need, 0)))
                   .pow(static_cast<unsigned long>(e));
    }
    value = value.scaled(make_rational(term.num, term.den));
    if (term.times_p_minus_1) value = value * Integer(static_cast<unsigned long>(bundle.p - 1));
    sum += value.times_p_power(term.p_power);
  }
  return sum;
}

}  // namespace wilsonlab
