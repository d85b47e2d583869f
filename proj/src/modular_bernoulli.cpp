#include "wilsonlab/modular_bernoulli.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "wilsonlab/error.hpp"
#include "wilsonlab/kernels.hpp"
#include "wilsonlab/primes.hpp"

namespace wilsonlab {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

Integer z(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// S_n(p) mod p^K as a residue of `ctx`.
TrackedResidue power_sum_in(const ContextPtr& ctx, std::uint64_t n, int K) {
  const auto sums = kernels::power_sums_progression(ctx->prime(), ctx->power(K), n, 1, 1);
  return TrackedResidue(ctx, sums.front(), K);
}

TrackedResidue sh_from_sum(const TrackedResidue& s_n) {
  return divide_by_p(s_n - z(s_n.prime() - 1), 1);
}

TrackedResidue extrapolate_bar2(const TrackedResidue& b1, const TrackedResidue& b2, std::uint64_t d) {
  if (d == 1) return b1;
  if (d == 2) return b2;
  return b1 + (b2 - b1) * z(d - 1);
}

// B^_n = S-bar_n - C(n,3) beta_{n-2} p^2 - C(n,5) beta_{n-4} p^4 (mod p^r),
// only the terms with v <= r - 1 present.
TrackedResidue adjusted_from_sh(const TrackedResidue& sh, std::uint64_t n, int r,
                                const std::optional<TrackedResidue>& beta_minus2,
                                const std::optional<TrackedResidue>& beta_minus4) {
  TrackedResidue out = sh.truncated(r);
  if (r >= 3) {
    out -= (beta_minus2->truncated(r - 2) * binomial(n, 3)).times_p_power(2);
  }
  if (r >= 5) {
    out -= (beta_minus4->truncated(r - 4) * binomial(n, 5)).times_p_power(4);
  }
  return out;
}

TrackedResidue divide_by_index(const TrackedResidue& x, std::uint64_t n) {
  const long k = ord_p(z(n), x.prime()).value();
  Integer unit = z(n);
  for (long i = 0; i < k; ++i) mpz_divexact_ui(unit.get_mpz_t(), unit.get_mpz_t(), x.prime());
  return divide_by_p(x * inv_mod(unit, x.context_ptr(), x.precision()), static_cast<int>(k));
}

void check_kummer_chain(const DividedBernoulliBundle& b) {
  for (std::size_t i = 1; i < b.bars.size(); ++i) {
    if (!agree_at(b.bars[i], b.bars[0], 1)) {
      throw Error(ErrorKind::InvariantViolated,
                  "B-bar_" + std::to_string(i + 1) + " != B-bar_1 mod p at p = " + std::to_string(b.p));
    }
  }
  if (b.bars2.size() == 2 && !agree_at(b.bars2[1], b.bars2[0], 1)) {
    throw Error(ErrorKind::InvariantViolated, "B-bar_{2,2} != B-bar_{1,2} mod p at p = " + std::to_string(b.p));
  }
}

}  // namespace

ContextPtr working_context(std::uint64_t p, int precision) {
  return make_context(p, std::max(precision, 1) + kPrecisionSlack);
}

TrackedResidue power_sum_mod(std::uint64_t n, std::uint64_t p, int K) {
  if (K < 1) throw Error(ErrorKind::PreconditionViolated, "power_sum_mod needs K >= 1");
  return power_sum_in(working_context(p, K), n, K);
}

TrackedResidue sh_value(std::uint64_t n, std::uint64_t p, int r) {
  if (n < 1 || r < 1) throw Error(ErrorKind::PreconditionViolated, "sh_value needs n >= 1 and r >= 1");
  return sh_from_sum(power_sum_in(working_context(p, r), n, r + 1));
}

TrackedResidue folklore_bernoulli_mod(std::uint64_t m, std::uint64_t p, int K) {
  require_prime(p);
  if (K < 1 || K > 2) throw Error(ErrorKind::PreconditionViolated, "folklore route gives at most mod p^2");
  if (m < 2 || m % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "folklore route needs even m >= 2");
  if (p < 5 || m % (p - 1) == 0) {
    throw Error(ErrorKind::PreconditionViolated,
                "folklore route needs p >= 5 and (p-1) not dividing m (m = " + std::to_string(m) +
                    ", p = " + std::to_string(p) + ")");
  }
  if (K == 2 && (p < 7 || (m - 2) % (p - 1) == 0)) {
    throw Error(ErrorKind::PreconditionViolated,
                "mod p^2 folklore route needs p >= 7 and (p-1) not dividing m - 2 (m = " + std::to_string(m) +
                    ", p = " + std::to_string(p) + ")");
  }
  return divide_by_p(power_sum_in(working_context(p, K), m, K + 1), 1);
}

int admissibility_delta(std::uint64_t d, std::uint64_t p) { return (d >= 2 && d % p == 1) ? 0 : 1; }

bool is_admissible(std::uint64_t d, std::uint64_t p, int r) {
  if (d < 1 || r < 1 || r > 6) return false;
  const long bound = std::max<long>(5, r + 3 - admissibility_delta(d, p));
  return static_cast<long>(p) >= bound;
}

TrackedResidue bar2_mod(std::uint64_t d, std::uint64_t p, int K) {
  require_prime(p);
  if (d < 1) throw Error(ErrorKind::PreconditionViolated, "B-bar_{d,2} needs d >= 1");
  if (K < 1 || K > 2 || p < (K == 1 ? 5u : 7u)) {
    throw Error(ErrorKind::PreconditionViolated, "B-bar_{d,2} mod p^" + std::to_string(K) +
                                                     " needs p >= " + (K == 1 ? "5" : "7"));
  }
  const ContextPtr ctx = working_context(p, K);
  const auto s = kernels::power_sums_progression(p, ctx->power(K + 1), p - 3, p - 1, 2);
  const TrackedResidue b1 = divide_by_index(divide_by_p(TrackedResidue(ctx, s[0], K + 1), 1), p - 3);
  const TrackedResidue b2 = divide_by_index(divide_by_p(TrackedResidue(ctx, s[1], K + 1), 1), 2 * p - 4);
  return extrapolate_bar2(b1, b2, d);
}

TrackedResidue adjusted_bernoulli_mod(std::uint64_t d, std::uint64_t p, int r, const BernoulliTable* exact_inputs) {
  require_prime(p);
  if (!is_admissible(d, p, r)) {
    throw Error(ErrorKind::InadmissibleCase, "(p, r, d) = (" + std::to_string(p) + ", " + std::to_string(r) +
                                                 ", " + std::to_string(d) + ") outside the admissible range");
  }
  if (r >= 5 && exact_inputs == nullptr) {
    throw Error(ErrorKind::InadmissibleCase, "r = " + std::to_string(r) + " needs exact beta inputs");
  }
  const std::uint64_t n = d * (p - 1);
  const ContextPtr ctx = working_context(p, r);
  const TrackedResidue sh = sh_from_sum(power_sum_in(ctx, n, r + 1));

  std::optional<TrackedResidue> beta2, beta4;
  if (r >= 5) {
    beta2 = reduce_rational(divided_bernoulli(DividedKind::Beta, n - 2, p, *exact_inputs), ctx, r - 2);
    beta4 = reduce_rational(divided_bernoulli(DividedKind::Beta, n - 4, p, *exact_inputs), ctx, r - 4);
  } else if (r >= 3) {
    beta2 = bar2_mod(d, p, r - 2);
  }
  return adjusted_from_sh(sh, n, r, beta2, beta4);
}

TrackedResidue bar_mod(std::uint64_t d, std::uint64_t p, int r, const BernoulliTable* exact_inputs) {
  return divide_by_index(adjusted_bernoulli_mod(d, p, r, exact_inputs), d * (p - 1));
}

Valuation binomial_valuation(std::uint64_t d, std::uint64_t p) {
  return ord_p(binomial(d * (p - 1), p - 1), p);
}

// --- bundles ------------------------------------------------------------------

const TrackedResidue& DividedBernoulliBundle::bar(int d) const {
  if (!has_bar(d)) {
    throw Error(ErrorKind::PreconditionViolated, "bundle for p = " + std::to_string(p) + " has no B-bar_" +
                                                     std::to_string(d));
  }
  return bars[static_cast<std::size_t>(d - 1)];
}

const TrackedResidue& DividedBernoulliBundle::bar2(int d) const {
  if (!has_bar2(d)) {
    throw Error(ErrorKind::PreconditionViolated, "bundle for p = " + std::to_string(p) + " has no B-bar_{" +
                                                     std::to_string(d) + ",2}");
  }
  return bars2[static_cast<std::size_t>(d - 1)];
}

DividedBernoulliBundle bundle(std::uint64_t p, int r) {
  require_prime(p);
  if (p < 5 || r < 1 || r > 4 || p < static_cast<std::uint64_t>(r) + 2) {
    throw Error(ErrorKind::InadmissibleCase,
                "modular bundle needs p >= 5, r <= 4, p >= r + 2 (p = " + std::to_string(p) +
                    ", r = " + std::to_string(r) + ")");
  }
  DividedBernoulliBundle out;
  out.p = p;
  out.r = r;
  out.source = DividedBernoulliBundle::Source::Modular;
  const ContextPtr ctx = working_context(p, r);

  // One pass for S_{d(p-1)}, d = 0..4, and one for S_{p-3}, S_{2p-4}.
  const auto sums = kernels::power_sums_progression(p, ctx->power(r + 1), 0, p - 1, 5);
  const int k2 = std::min(r, p >= 7 ? 2 : 1);
  const auto folk = kernels::power_sums_progression(p, ctx->power(k2 + 1), p - 3, p - 1, 2);
  const TrackedResidue b1 = divide_by_index(divide_by_p(TrackedResidue(ctx, folk[0], k2 + 1), 1), p - 3);
  const TrackedResidue b2 = divide_by_index(divide_by_p(TrackedResidue(ctx, folk[1], k2 + 1), 1), 2 * p - 4);
  out.bars2 = {b1, b2};

  for (std::uint64_t d = 1; d <= 4; ++d) {
    const std::uint64_t n = d * (p - 1);
    const TrackedResidue sh = sh_from_sum(TrackedResidue(ctx, sums[d], r + 1));
    std::optional<TrackedResidue> beta2;
    if (r >= 3) beta2 = extrapolate_bar2(b1, b2, d);
    out.bars.push_back(divide_by_index(adjusted_from_sh(sh, n, r, beta2, std::nullopt), n));
  }
  check_kummer_chain(out);
  return out;
}

DividedBernoulliBundle exact_bundle(std::uint64_t p, int r, const BernoulliTable& table) {
  require_prime(p);
  if (r < 1) throw Error(ErrorKind::PreconditionViolated, "bundle precision must be >= 1");
  DividedBernoulliBundle out;
  out.p = p;
  out.r = r;
  out.source = DividedBernoulliBundle::Source::Exact;
  const ContextPtr ctx = working_context(p, r);
  const std::size_t max_d = p == 2 ? 1 : 4;
  for (std::size_t d = 1; d <= max_d; ++d) {
    const ExactRational v = divided_bernoulli(DividedKind::Bar, d, p, table);
    if (ord_p(v, p) < 0) break;
    out.bars.push_back(reduce_rational(v, ctx, r));
  }
  if (p >= 5) {
    for (std::size_t d = 1; d <= 2; ++d) {
      out.bars2.push_back(reduce_rational(divided_bernoulli(DividedKind::Bar2, d, p, table), ctx, r));
    }
  }
  if (p >= 5) check_kummer_chain(out);
  return out;
}

// --- Kummer checks --------------------------------------------------------------

CongruenceCheckResult kummer_check(std::uint64_t n, std::uint64_t m, std::uint64_t p, const BernoulliTable& table) {
  require_prime(p);
  const bool ok = n >= 2 && m >= 2 && n % 2 == 0 && m % 2 == 0 && p > 2 &&
                  (std::max(n, m) - std::min(n, m)) % (p - 1) == 0 && n % (p - 1) != 0;
  if (!ok) {
    throw Error(ErrorKind::HypothesisViolated, "Kummer needs even n = m != 0 mod (p-1); got n = " +
                                                   std::to_string(n) + ", m = " + std::to_string(m) +
                                                   ", p = " + std::to_string(p));
  }
  const ExactRational a = table[n] / static_cast<long>(n);
  const ExactRational b = table[m] / static_cast<long>(m);
  const ContextPtr ctx = working_context(p, 1);
  auto out = CongruenceCheckResult::congruence("kummer", p, 1, reduce_rational(a, ctx, 1), reduce_rational(b, ctx, 1));
  // The residues decide only when both sides are p-integral; confirm in Q.
  if (ord_p(ExactRational(a - b), p) < 1) out.status = CheckStatus::Fail;
  return out;
}

CongruenceCheckResult generalized_kummer_check(std::uint64_t n, std::uint64_t p, int r, const BernoulliTable& table) {
  require_prime(p);
  const std::string id = "gen_kummer_r" + std::to_string(r);
  if (p < 5 || n < 2 || n % 2 != 0 || r < 0) {
    throw Error(ErrorKind::HypothesisViolated, "generalized Kummer needs p >= 5 and even n >= 2");
  }
  const bool cond1 = n % (p - 1) != 0 && n > static_cast<std::uint64_t>(r);
  const bool cond2 = n % (p - 1) == 0 && p > static_cast<std::uint64_t>(r) + n / (p - 1);
  if (!cond1 && !cond2) {
    throw Error(ErrorKind::HypothesisViolated, "neither condition holds for n = " + std::to_string(n) +
                                                   ", p = " + std::to_string(p) + ", r = " + std::to_string(r));
  }
  const ContextPtr ctx = working_context(p, r);
  if (r == 0) {
    return CongruenceCheckResult::congruence(id, p, 0, TrackedResidue::zero(ctx, 0), TrackedResidue::zero(ctx, 0));
  }
  ExactRational diff;
  for (int j = 0; j <= r; ++j) {
    ExactRational term = divided_bernoulli(DividedKind::Beta, n + static_cast<std::size_t>(j) * (p - 1), p, table) *
                         binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(j));
    if ((r - j) % 2 != 0) term = -term;
    diff += term;
  }
  if (ord_p(diff, p) < r) {
    auto out = CongruenceCheckResult::failed(id, p, r, "ord_p of the difference is " + ord_p(diff, p).to_string());
    out.lhs = diff;
    out.rhs = ExactRational(0);
    return out;
  }
  return CongruenceCheckResult::congruence(id, p, r, reduce_rational(diff, ctx, r), TrackedResidue::zero(ctx, r));
}

CongruenceCheckResult generalized_kummer_check_modular(std::uint64_t d, std::uint64_t p, int r) {
  require_prime(p);
  const std::string id = "gen_kummer_r" + std::to_string(r);
  if (p < 5 || d < 1 || r < 0 || r > 4 || p <= static_cast<std::uint64_t>(r) + d) {
    throw Error(ErrorKind::HypothesisViolated, "modular generalized Kummer needs p >= 5, r <= 4, p > r + d");
  }
  const ContextPtr ctx = working_context(p, r);
  if (r == 0) {
    return CongruenceCheckResult::congruence(id, p, 0, TrackedResidue::zero(ctx, 0), TrackedResidue::zero(ctx, 0));
  }
  std::vector<TrackedResidue> values;
  for (int j = 0; j <= r; ++j) values.push_back(bar_mod(d + static_cast<std::uint64_t>(j), p, r));
  return CongruenceCheckResult::congruence(id, p, r, forward_difference(values, r), TrackedResidue::zero(ctx, r));
}

}  // namespace wilsonlab
