#include "wilsonlab/wilson.hpp"

#include <algorithm>
#include <string>

#include "wilsonlab/error.hpp"
#include "wilsonlab/formulas.hpp"
#include "wilsonlab/kernels.hpp"
#include "wilsonlab/primes.hpp"

namespace wilsonlab {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

void require_precision(int r) {
  if (r < 1) throw Error(ErrorKind::PreconditionViolated, "precision must be >= 1");
}

Integer z(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void require_bundle(const DividedBernoulliBundle& bundle, std::uint64_t p, int r) {
  if (bundle.p != p) {
    throw Error(ErrorKind::PreconditionViolated,
                "bundle is for p = " + std::to_string(bundle.p) + ", not " + std::to_string(p));
  }
  if (bundle.r < r) {
    throw Error(ErrorKind::PrecisionExhausted,
                "bundle known mod p^" + std::to_string(bundle.r) + ", need p^" + std::to_string(r));
  }
}

// sum_{j=0}^{n-1} C(n-1, j) (-1)^(n-1-j) B-bar_{1+j}
TrackedResidue bar_difference(const DividedBernoulliBundle& bundle, int n) {
  TrackedResidue d = TrackedResidue::zero(bundle.bar(1).context_ptr(), bundle.bar(1).precision());
  for (int j = 0; j < n; ++j) {
    TrackedResidue term = bundle.bar(1 + j) * binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j));
    if ((n - 1 - j) % 2 != 0) term = -term;
    d += term;
  }
  return d;
}

}  // namespace

TrackedResidue factorial_mod(std::uint64_t p, int K) {
  require_prime(p);
  require_precision(K);
  const ContextPtr ctx = working_context(p, K);
  return TrackedResidue(ctx, kernels::factorial_mod(p, ctx->power(K)), K);
}

TrackedResidue wilson_quotient(std::uint64_t p, int r) {
  require_prime(p);
  require_precision(r);
  const ContextPtr ctx = working_context(p, r);
  const TrackedResidue f(ctx, kernels::factorial_mod(p, ctx->power(r + 1)), r + 1);
  try {
    return divide_by_p(f + Integer(1), 1);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    throw Error(ErrorKind::InvariantViolated, "(p-1)! + 1 not divisible by p = " + std::to_string(p));
  }
}

TrackedResidue fermat_quotient(const Integer& a, std::uint64_t p, int r) {
  require_prime(p);
  require_precision(r);
  if (mpz_divisible_ui_p(a.get_mpz_t(), p) != 0) {
    throw Error(ErrorKind::NotCoprime, a.get_str() + " is divisible by " + std::to_string(p));
  }
  const ContextPtr ctx = working_context(p, r);
  const TrackedResidue x(ctx, pow_mod(a, z(p - 1), ctx->power(r + 1)), r + 1);
  return divide_by_p(x - Integer(1), 1);
}

TrackedResidue q_sum(std::uint64_t p, int n, int r, QSumMethod method) {
  require_prime(p);
  require_precision(r);
  if (n < 1) throw Error(ErrorKind::PreconditionViolated, "Q_p(n) needs n >= 1");
  const ContextPtr ctx = working_context(p, r + n);
  if (method == QSumMethod::Direct) {
    return TrackedResidue(ctx, kernels::fermat_quotient_power_sums(p, r, n).back(), r);
  }
  const auto sums = kernels::power_sums_progression(p, ctx->power(r + n), 0, p - 1, static_cast<std::size_t>(n) + 1);
  std::vector<TrackedResidue> values;
  values.reserve(sums.size());
  for (const auto& s : sums) values.emplace_back(ctx, s, r + n);
  return divide_by_p(forward_difference(values, n), n);
}

// --- psi ------------------------------------------------------------------------

const PsiPolynomial& psi(int nu) {
  static const std::array<PsiPolynomial, 4> table = {{
      {1, {{1, {1, 0, 0, 0}}}},
      {2, {{2, {1, 0, 0, 0}}, {-1, {2, 0, 0, 0}}, {-1, {0, 1, 0, 0}}}},
      {3,
       {{6, {1, 0, 0, 0}},
        {-6, {2, 0, 0, 0}},
        {1, {3, 0, 0, 0}},
        {3, {1, 1, 0, 0}},
        {-3, {0, 1, 0, 0}},
        {2, {0, 0, 1, 0}}}},
      {4,
       {{24, {1, 0, 0, 0}},
        {-36, {2, 0, 0, 0}},
        {12, {3, 0, 0, 0}},
        {-1, {4, 0, 0, 0}},
        {-6, {2, 1, 0, 0}},
        {24, {1, 1, 0, 0}},
        {-8, {1, 0, 1, 0}},
        {-12, {0, 1, 0, 0}},
        {-3, {0, 2, 0, 0}},
        {8, {0, 0, 1, 0}},
        {-6, {0, 0, 0, 1}}}},
  }};
  if (nu < 1 || nu > 4) throw Error(ErrorKind::PreconditionViolated, "psi_nu is tabulated for nu = 1..4");
  return table[static_cast<std::size_t>(nu - 1)];
}

TrackedResidue psi_eval(int nu, std::span<const TrackedResidue> args) {
  const PsiPolynomial& poly = psi(nu);
  if (args.size() != static_cast<std::size_t>(nu)) {
    throw Error(ErrorKind::PreconditionViolated, "psi_" + std::to_string(nu) + " takes " + std::to_string(nu) +
                                                     " arguments");
  }
  int precision = args[0].precision();
  for (const auto& a : args) {
    if (a.prime() != args[0].prime()) throw Error(ErrorKind::MixedContext, "psi arguments mix primes");
    precision = std::min(precision, a.precision());
  }
  TrackedResidue sum = TrackedResidue::zero(args[0].context_ptr(), precision);
  for (const auto& term : poly.terms) {
    TrackedResidue value(args[0].context_ptr(), Integer(term.coefficient), precision);
    for (int i = 0; i < nu; ++i) {
      const int e = term.exponents[static_cast<std::size_t>(i)];
      if (e != 0) value *= args[static_cast<std::size_t>(i)].pow(static_cast<unsigned long>(e));
    }
    sum += value;
  }
  return sum;
}

namespace {

// sum_{v=1}^{r} p^(v - 1 + shift)/v! psi_v(Q_p(1..v)), Q at precision r.
TrackedResidue psi_series(std::uint64_t p, int r, int shift) {
  require_prime(p);
  if (r < 1 || r > 4) throw Error(ErrorKind::PreconditionViolated, "psi route supports r = 1..4");
  if (p == 2 || p <= static_cast<std::uint64_t>(r)) {
    throw Error(ErrorKind::HypothesisViolated, "psi route needs an odd prime p > r (p = " + std::to_string(p) +
                                                   ", r = " + std::to_string(r) + ")");
  }
  const ContextPtr ctx = working_context(p, r + shift);
  const auto q = kernels::fermat_quotient_power_sums(p, r, r);
  std::vector<TrackedResidue> args;
  for (const auto& v : q) args.emplace_back(ctx, v, r);
  TrackedResidue sum = TrackedResidue::zero(ctx, r + shift);
  for (int nu = 1; nu <= r; ++nu) {
    const TrackedResidue value = psi_eval(nu, std::span(args).first(static_cast<std::size_t>(nu)));
    sum += (value * inv_mod(factorial(nu), ctx, r)).times_p_power(nu - 1 + shift);
  }
  return sum;
}

}  // namespace

TrackedResidue wilson_via_psi(std::uint64_t p, int r) { return psi_series(p, r, 0); }

TrackedResidue factorial_via_psi(std::uint64_t p, int r) { return psi_series(p, r, 1) - Integer(1); }

// --- Bernoulli routes -------------------------------------------------------------

TrackedResidue wilson_via_bernoulli(std::uint64_t p, int r, const DividedBernoulliBundle& bundle) {
  require_prime(p);
  const TierFormula& f = wilson_formula(r);
  if (p < f.min_prime) {
    throw Error(ErrorKind::HypothesisViolated,
                "W_p mod p^" + std::to_string(r) + " formula needs p >= " + std::to_string(f.min_prime));
  }
  require_bundle(bundle, p, r);
  return evaluate(f, bundle);
}

TrackedResidue q_sum_tier_rhs(std::uint64_t p, int n, int r, const DividedBernoulliBundle& bundle) {
  require_prime(p);
  const TierFormula* f = qsum_formula(n, r);
  if (f == nullptr || p < f->min_prime) {
    throw Error(ErrorKind::InadmissibleTier,
                "no Q_p(" + std::to_string(n) + ") tier mod p^" + std::to_string(r) + " for p = " + std::to_string(p));
  }
  require_bundle(bundle, p, r);
  return evaluate(*f, bundle);
}

TrackedResidue q_sum_tier_lhs(std::uint64_t p, int n, int r) {
  require_prime(p);
  if (n < 1 || r < n) throw Error(ErrorKind::PreconditionViolated, "tier needs 1 <= n <= r");
  // p^(n-1)/n = p^e u with u a unit.
  const long k = ord_p(Integer(n), p).value();
  const int e = n - 1 - static_cast<int>(k);
  const TrackedResidue q = q_sum(p, n, r - e);
  Integer unit_den(n);
  for (long i = 0; i < k; ++i) mpz_divexact_ui(unit_den.get_mpz_t(), unit_den.get_mpz_t(), p);
  const TrackedResidue lifted(working_context(p, r), q.residue(), q.precision());
  return (lifted * inv_mod(unit_den, lifted.context_ptr(), r)).times_p_power(e).truncated(r);
}

TrackedResidue q_sum_via_bernoulli(std::uint64_t p, int n, int r, const DividedBernoulliBundle& bundle) {
  const TrackedResidue rhs = q_sum_tier_rhs(p, n, r, bundle);
  return divide_by_p(rhs * Integer(n), n - 1);
}

// --- named checks ------------------------------------------------------------------

CongruenceCheckResult carlitz_check(std::uint64_t p, std::uint64_t r, unsigned k, const BernoulliTable& table) {
  require_prime(p);
  if (r < 1) throw Error(ErrorKind::PreconditionViolated, "Carlitz multiplier must be >= 1");
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  const Integer index = z(r) * pk * z(p - 1);
  if (index > z(table.max_index())) {
    throw Error(ErrorKind::IndexOutOfTable, "B_" + index.get_str() + " is beyond the table (max " +
                                                std::to_string(table.max_index()) + ")");
  }
  const ExactRational rhs = (table[index.get_ui()] + make_rational(1, static_cast<long>(p)) - 1) / ExactRational(pk);
  const TrackedResidue lhs = wilson_quotient(p, 1) * z(r);
  if (ord_p(rhs, p) < 0) {
    auto out = CongruenceCheckResult::failed("carlitz", p, 1, "right-hand side not p-integral");
    out.lhs = lhs;
    out.rhs = rhs;
    return out;
  }
  return CongruenceCheckResult::congruence("carlitz", p, 1, lhs, reduce_rational(rhs, lhs.context_ptr(), 1));
}

bool is_wilson_prime(std::uint64_t p) {
  if (p < 5) {
    require_prime(p);
    return false;  // W_2 = W_3 = 1
  }
  return wilson_quotient(p, 1).residue() == 0;
}

PrimeClass classify_prime(std::uint64_t p, const BernoulliTable& table) {
  require_prime(p);
  if (p == 2) throw Error(ErrorKind::PreconditionViolated, "classification is for odd primes");
  PrimeClass out;
  out.wilson = is_wilson_prime(p);
  if (p >= 5 && p - 3 > table.max_index()) {
    throw Error(ErrorKind::IndexOutOfTable, "irregularity of " + std::to_string(p) + " needs B_" +
                                                std::to_string(p - 3));
  }
  for (std::size_t l = 2; l + 3 <= p; l += 2) {
    if (mpz_divisible_ui_p(table[l].get_num_mpz_t(), p) != 0) out.irregular_indices.push_back(l);
  }
  out.irregular = !out.irregular_indices.empty();
  return out;
}

CongruenceCheckResult reduction_chain_check(std::uint64_t p, const DividedBernoulliBundle& bundle) {
  if (p < 7) throw Error(ErrorKind::HypothesisViolated, "reduction chain needs p >= 7");
  const TrackedResidue w4 = wilson_via_bernoulli(p, 4, bundle);
  CongruenceCheckResult out;
  for (int t = 1; t <= 3; ++t) {
    out = CongruenceCheckResult::congruence("reduction_chain", p, t, w4, wilson_via_bernoulli(p, t, bundle));
    if (!out.passed()) return out;
  }
  return out;
}

CongruenceCheckResult prop36_check(std::uint64_t p, int n, const DividedBernoulliBundle& bundle) {
  if (n < 1 || n > 3) throw Error(ErrorKind::PreconditionViolated, "the mod p^3 form covers n = 1..3");
  if (p < 5) return CongruenceCheckResult::skipped("prop36", p, 3, "needs p >= 5");
  require_bundle(bundle, p, 3);
  static constexpr std::array<long, 3> alpha = {1, 2, 1};
  const TrackedResidue rhs =
      bar_difference(bundle, n) * z(p - 1) -
      bundle.bar2(1).scaled(make_rational(alpha[static_cast<std::size_t>(n - 1)], n)).times_p_power(2);
  return CongruenceCheckResult::congruence("prop36", p, 3, q_sum_tier_lhs(p, n, 3), rhs);
}

CongruenceCheckResult prop37_check(std::uint64_t p, int n, const DividedBernoulliBundle& bundle) {
  if (n < 1 || n > 4) throw Error(ErrorKind::PreconditionViolated, "the mod p^4 form covers n = 1..4");
  if (p < 7) return CongruenceCheckResult::skipped("prop37", p, 4, "needs p >= 7");
  require_bundle(bundle, p, 4);
  static const std::array<ExactRational, 4> alpha = {-1, 2, 7, 4};
  static const std::array<ExactRational, 4> beta = {0, -4, -8, -4};
  static const std::array<ExactRational, 4> gamma = {make_rational(11, 6), 5, 3, 0};
  const auto i = static_cast<std::size_t>(n - 1);
  const ExactRational inv_n = make_rational(1, n);
  const TrackedResidue rhs = bar_difference(bundle, n) * z(p - 1) +
                             bundle.bar2(1).scaled(alpha[i] * inv_n).times_p_power(2) +
                             bundle.bar2(2).scaled(beta[i] * inv_n).times_p_power(2) +
                             bundle.bar2(1).scaled(gamma[i] * inv_n).times_p_power(3);
  return CongruenceCheckResult::congruence("prop37", p, 4, q_sum_tier_lhs(p, n, 4), rhs);
}

}  // namespace wilsonlab
