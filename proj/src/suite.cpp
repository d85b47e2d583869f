#include "wilsonlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <thread>
#include <tuple>

#include "wilsonlab/error.hpp"
#include "wilsonlab/formulas.hpp"
#include "wilsonlab/modular_bernoulli.hpp"
#include "wilsonlab/primes.hpp"
#include "wilsonlab/wilson.hpp"

namespace wilsonlab {

namespace {

using Results = std::vector<CongruenceCheckResult>;
using Result = CongruenceCheckResult;

Integer z(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

std::string variant(std::string_view id, const std::string& tag) { return std::string(id) + "[" + tag + "]"; }

Result renamed(Result r, std::string id) {
  r.check_id = std::move(id);
  return r;
}

bool exact_covers(std::uint64_t p) { return p <= kExactPrimeLimit; }

bool tier_selected(const CheckInputs& in, int k) { return in.modulus_exp == 0 || in.modulus_exp == k; }

// Status of a statement evaluated below its stated prime bound.
Result informational(std::string id, std::uint64_t p, int k, const std::string& bound,
                     const std::function<bool()>& holds) {
  std::string verdict;
  try {
    verdict = holds() ? "holds" : "fails";
  } catch (const Error& e) {
    verdict = std::string("not evaluable (") + std::string(e.name()) + ")";
  }
  return Result::skipped(std::move(id), p, k, "below the stated bound " + bound + "; " + verdict);
}

// Accumulates a tally; keeps the first failure's description.
struct Tally {
  long passed = 0;
  long tested = 0;
  std::string first_failure;

  void add(bool ok, const std::function<std::string()>& describe) {
    ++tested;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = describe();
    }
  }

  Result result(std::string id, std::uint64_t p, int k, const std::string& empty_reason) const {
    if (tested == 0) return Result::skipped(std::move(id), p, k, empty_reason);
    return Result::tally(std::move(id), p, k, passed, tested, first_failure);
  }
};

// --- engines ----------------------------------------------------------------

bool modular_bundle_ok(std::uint64_t p, int r) { return p >= 5 && r <= 4 && p >= static_cast<std::uint64_t>(r) + 2; }

// Runs `check` on the bundles the engine setting selects. Where the modular
// bundle does not exist the exact one stands in, within the oracle range.
// With two bundles the results must agree.
Result with_bundles(const std::string& id, std::uint64_t p, int r, int k, const CheckInputs& in,
                    const std::function<Result(const DividedBernoulliBundle&)>& check) {
  const bool use_modular = in.engine != Engine::Exact && modular_bundle_ok(p, r);
  const bool use_exact = exact_covers(p) && (in.engine != Engine::Modular || !modular_bundle_ok(p, r));
  if (!use_modular && !use_exact) {
    return Result::skipped(id, p, k,
                           in.engine == Engine::Exact ? "exact engine covers p <= 97" : "no engine covers this p");
  }
  std::optional<Result> modular, exact;
  if (use_modular) modular = renamed(check(bundle(p, r)), id);
  if (use_exact) exact = renamed(check(exact_bundle(p, r, in.table)), id);
  if (modular && exact) {
    if (!exact->passed()) return *exact;
    if (modular->passed() && value_string(modular->rhs) != value_string(exact->rhs)) {
      modular->status = CheckStatus::Fail;
      modular->reason = "engines disagree: exact gives " + value_string(exact->rhs);
    }
    return *modular;
  }
  return modular ? *modular : *exact;
}

// Same selection for a right-hand side computed directly rather than from a
// bundle. `modular` is empty where no modular route exists.
Result dual_route(const std::string& id, std::uint64_t p, int k, const TrackedResidue& lhs, const CheckInputs& in,
                  const std::function<TrackedResidue()>& exact,
                  const std::function<TrackedResidue()>& modular) {
  const bool use_modular = in.engine != Engine::Exact && static_cast<bool>(modular);
  const bool use_exact = exact_covers(p) && (in.engine != Engine::Modular || !modular);
  if (!use_modular && !use_exact) {
    return Result::skipped(id, p, k,
                           in.engine == Engine::Exact ? "exact engine covers p <= 97" : "no engine covers this p");
  }
  std::optional<TrackedResidue> m, e;
  if (use_modular) m = modular();
  if (use_exact) e = exact();
  Result out = Result::congruence(id, p, k, lhs, m ? *m : *e);
  if (m && e && !agree_at(*m, *e, k)) {
    out.status = CheckStatus::Fail;
    out.reason = "engines disagree: exact gives " + e->truncated(std::min(k, e->precision())).residue().get_str();
  }
  return out;
}

TrackedResidue reduce_in(const ExactRational& x, std::uint64_t p, int k) {
  return reduce_rational(x, working_context(p, k), k);
}

// --- individual checks ----------------------------------------------------------

Results lerch(std::uint64_t p, const CheckInputs&) {
  if (p == 2) {
    return {informational("lerch", p, 1, "(odd p)",
                          [&] { return agree_at(wilson_quotient(p, 1), q_sum(p, 1, 1), 1); })};
  }
  return {Result::congruence("lerch", p, 1, wilson_quotient(p, 1), q_sum(p, 1, 1))};
}

Results glaisher_beeger(std::uint64_t p, const CheckInputs& in) {
  const auto exact = [&] { return reduce_in(in.table[p - 1] + make_rational(1, static_cast<long>(p)) - 1, p, 1); };
  std::function<TrackedResidue()> modular;
  if (p >= 5) modular = [&] { return bundle(p, 1).bar(1) * z(p - 1); };
  return {dual_route("glaisher_beeger", p, 1, wilson_quotient(p, 1), in, exact, modular)};
}

Results lehmer(std::uint64_t p, const CheckInputs& in) {
  Results out;
  for (std::uint64_t r = 1; r <= 4; ++r) {
    const std::string id = variant("lehmer", "r=" + std::to_string(r));
    const TrackedResidue lhs = wilson_quotient(p, 1) * z(r);
    const auto exact = [&] {
      return reduce_in(in.table[r * (p - 1)] + make_rational(1, static_cast<long>(p)) - 1, p, 1);
    };
    if (p < 5) {
      out.push_back(informational(id, p, 1, "p >= 5", [&] { return agree_at(lhs, exact(), 1); }));
      continue;
    }
    const auto modular = [&] { return bundle(p, 1).bar(static_cast<int>(r)) * (z(r) * z(p - 1)); };
    out.push_back(dual_route(id, p, 1, lhs, in, exact, modular));
  }
  return out;
}

Results lehmer_diff(std::uint64_t p, const CheckInputs& in) {
  const TrackedResidue lhs = wilson_quotient(p, 1);
  const auto exact = [&] { return reduce_in(in.table[2 * (p - 1)] - in.table[p - 1], p, 1); };
  if (p == 2) return {informational("lehmer_diff", p, 1, "(odd p)", [&] { return agree_at(lhs, exact(), 1); })};
  std::function<TrackedResidue()> modular;
  if (p >= 5) {
    modular = [&] {
      const auto b = bundle(p, 1);
      return b.bar(2) * (2 * z(p - 1)) - b.bar(1) * z(p - 1);
    };
  }
  return {dual_route("lehmer_diff", p, 1, lhs, in, exact, modular)};
}

Results carlitz(std::uint64_t p, const CheckInputs& in) {
  Results out;
  for (std::uint64_t r = 1; r <= 3; ++r) {
    Integer pk(1);
    for (unsigned k = 0; k <= 2; ++k, pk *= z(p)) {
      if (z(r) * pk * z(p - 1) > z(in.table.max_index())) continue;
      const std::string id = variant("carlitz", "r=" + std::to_string(r) + ",k=" + std::to_string(k));
      if (p < 5) {
        out.push_back(informational(id, p, 1, "p >= 5", [&] { return carlitz_check(p, r, k, in.table).passed(); }));
      } else {
        out.push_back(renamed(carlitz_check(p, r, k, in.table), id));
      }
    }
  }
  if (out.empty()) out.push_back(Result::skipped("carlitz", p, 1, "every index is beyond the exact table"));
  return out;
}

Results wilson_tier(std::uint64_t p, const CheckInputs& in, int r, const std::string& id) {
  const TierFormula& f = wilson_formula(r);
  if (p < f.min_prime) {
    if (p < 5) {
      return {informational(id, p, r, "p >= " + std::to_string(f.min_prime), [&] {
        return agree_at(wilson_quotient(p, r), evaluate(f, exact_bundle(p, r, in.table)), r);
      })};
    }
    return {Result::skipped(id, p, r, "needs p >= " + std::to_string(f.min_prime))};
  }
  const TrackedResidue lhs = wilson_quotient(p, r);
  return {with_bundles(id, p, r, r, in,
                       [&](const auto& b) { return Result::congruence(id, p, r, lhs, evaluate(f, b)); })};
}

Results q_tiers(std::uint64_t p, const CheckInputs& in, int n) {
  const std::string id = "thm_main3_q" + std::to_string(n);
  Results out;
  for (const auto& f : qsum_formulas()) {
    if (f.n != n || !tier_selected(in, f.modulus_exp)) continue;
    const int r = f.modulus_exp;
    if (p == 2) {
      out.push_back(Result::skipped(id, p, r, "stated for odd primes"));
      continue;
    }
    const TrackedResidue lhs = q_sum_tier_lhs(p, n, r);
    if (p < f.min_prime) {
      out.push_back(informational(id, p, r, "p >= " + std::to_string(f.min_prime),
                                  [&] { return agree_at(lhs, evaluate(f, exact_bundle(p, r, in.table)), r); }));
      continue;
    }
    out.push_back(with_bundles(id, p, r, r, in,
                               [&](const auto& b) { return Result::congruence(id, p, r, lhs, evaluate(f, b)); }));
  }
  return out;
}

Results psi_route(std::uint64_t p, int r) {
  const std::string id = "thm_kel_psi_r" + std::to_string(r);
  if (p == 2 || p <= static_cast<std::uint64_t>(r)) return {Result::skipped(id, p, r, "needs an odd prime p > r")};
  return {Result::congruence(id, p, r, wilson_quotient(p, r), wilson_via_psi(p, r)),
          Result::congruence(id, p, r + 1, factorial_mod(p, r + 1), factorial_via_psi(p, r))};
}

Results reduction_chain(std::uint64_t p, const CheckInputs& in) {
  if (p < 7) return {Result::skipped("reduction_chain", p, 3, "needs p >= 7")};
  return {with_bundles("reduction_chain", p, 4, 3, in, [&](const auto& b) { return reduction_chain_check(p, b); })};
}

Results kummer(std::uint64_t p, const CheckInputs& in) {
  if (p < 5) return {Result::skipped("kummer", p, 1, "needs p >= 5")};
  if (!exact_covers(p)) return {Result::skipped("kummer", p, 1, "exact oracle covers p <= 97")};
  Tally t;
  for (std::size_t n = 2; n + (p - 1) <= in.table.max_index(); n += 2) {
    if (n % (p - 1) == 0) continue;
    t.add(kummer_check(n, n + (p - 1), p, in.table).passed(), [&] { return "n = " + std::to_string(n); });
  }
  return {t.result("kummer", p, 1, "no index pair within the table")};
}

Results gen_kummer(std::uint64_t p, const CheckInputs& in, int r) {
  const std::string id = "gen_kummer_r" + std::to_string(r);
  if (p < 5) return {Result::skipped(id, p, r, "needs p >= 5")};
  Tally t;
  if (in.engine != Engine::Modular && exact_covers(p)) {
    for (std::size_t n = 2; n + r * (p - 1) <= in.table.max_index(); n += 2) {
      const bool cond1 = n % (p - 1) != 0 && n > static_cast<std::size_t>(r);
      const bool cond2 = n % (p - 1) == 0 && p > r + n / (p - 1);
      if (!cond1 && !cond2) continue;
      t.add(generalized_kummer_check(n, p, r, in.table).passed(), [&] { return "exact, n = " + std::to_string(n); });
    }
  }
  if (in.engine != Engine::Exact) {
    for (std::uint64_t d = 1; d <= 3 && p > r + d; ++d) {
      t.add(generalized_kummer_check_modular(d, p, r).passed(), [&] { return "modular, d = " + std::to_string(d); });
    }
  }
  return {t.result(id, p, r, "no admissible index for this engine")};
}

Results cor35(std::uint64_t p, const CheckInputs& in) {
  if (p < 5) return {Result::skipped("cor35_tiers", p, 1, "needs p >= 5")};
  if (!exact_covers(p)) return {Result::skipped("cor35_tiers", p, 1, "exact oracle covers p <= 97")};
  std::vector<std::uint64_t> ds = {1, 2, 3, 4};
  for (std::uint64_t d = p + 1; d * (p - 1) <= in.table.max_index(); d += p) ds.push_back(d);
  Results out;
  for (int r = 1; r <= 6; ++r) {
    if (!tier_selected(in, r)) continue;
    Tally t;
    for (auto d : ds) {
      if (!is_admissible(d, p, r) || d * (p - 1) > in.table.max_index()) continue;
      const TrackedResidue fast = adjusted_bernoulli_mod(d, p, r, &in.table);
      const TrackedResidue slow = reduce_rational(adjusted_bernoulli(d * (p - 1), p, in.table), fast.context_ptr(), r);
      t.add(agree_at(fast, slow, r), [&] { return "d = " + std::to_string(d); });
    }
    out.push_back(t.result("cor35_tiers", p, r, "no admissible d"));
  }
  return out;
}

Results prop36(std::uint64_t p, const CheckInputs& in) {
  Results out;
  for (int n = 1; n <= 3; ++n) {
    const std::string id = variant("prop36", "n=" + std::to_string(n));
    if (p < 5) {
      out.push_back(Result::skipped(id, p, 3, "needs p >= 5"));
      continue;
    }
    out.push_back(with_bundles(id, p, 3, 3, in, [&](const auto& b) { return prop36_check(p, n, b); }));
  }
  return out;
}

Results prop37(std::uint64_t p, const CheckInputs& in) {
  Results out;
  for (int n = 1; n <= 4; ++n) {
    const std::string id = variant("prop37", "n=" + std::to_string(n));
    if (p < 7) {
      out.push_back(Result::skipped(id, p, 4, "needs p >= 7"));
      continue;
    }
    out.push_back(with_bundles(id, p, 4, 4, in, [&](const auto& b) { return prop37_check(p, n, b); }));
  }
  return out;
}

Results prop34(std::uint64_t p, const CheckInputs& in) {
  Results out;
  for (std::size_t d = 1; d <= 3; ++d) {
    const std::string id = variant("prop34_remainder", "d=" + std::to_string(d));
    if (p < 5) {
      out.push_back(Result::skipped(id, p, 0, "needs p >= 5"));
      continue;
    }
    if (!exact_covers(p)) {
      out.push_back(Result::skipped(id, p, 0, "exact oracle covers p <= 97"));
      continue;
    }
    const ExactRational rem = power_sum_remainder(d, p, in.table);
    if (d == 1) {
      Integer half;
      mpz_ui_pow_ui(half.get_mpz_t(), p, p - 2);
      out.push_back(Result::identity(id, p, rem, ExactRational(half) / 2));
      continue;
    }
    const long bound = static_cast<long>(p) - (d % p == 1 ? 3 : 2);
    const Valuation v = ord_p(rem, p);
    Result r = Result::tally(id, p, static_cast<int>(bound), v >= bound ? 1 : 0, 1, "");
    r.lhs = v.is_infinite() ? CheckValue{} : CheckValue{ExactRational(v.value())};
    r.rhs = ExactRational(bound);
    r.reason = "ord_p of the remainder is " + v.to_string() + ", bound " + std::to_string(bound);
    out.push_back(r);
  }
  return out;
}

Results lemma33(std::uint64_t p, const CheckInputs&) {
  Tally t;
  for (std::uint64_t d = 1; d <= 3 * p; ++d) {
    const bool zero = binomial_valuation(d, p) == 0;
    t.add(zero == (d % p == 1), [&] { return "d = " + std::to_string(d); });
  }
  return {t.result("lemma33_binom", p, 1, "")};
}

Results prop22(std::uint64_t p, const CheckInputs& in) {
  if (p < 5) return {Result::skipped("prop22", p, 1, "needs p >= 5")};
  const TrackedResidue w = wilson_quotient(p, 1);
  Tally t;
  if (in.engine != Engine::Modular && exact_covers(p)) {
    for (std::size_t n = 2; n <= in.table.max_index(); n += 2) {
      const ExactRational bh = adjusted_bernoulli(n, p, in.table);
      t.add(ord_p(bh, p) >= ord_p(Integer(static_cast<unsigned long>(n)), p),
            [&] { return "part 1, n = " + std::to_string(n); });
      const std::size_t np = n % (p - 1);
      const TrackedResidue lhs = reduce_in(-bh / ExactRational(static_cast<unsigned long>(n)), p, 1);
      const TrackedResidue rhs =
          np == 0 ? w : reduce_in(-in.table[np] / ExactRational(static_cast<unsigned long>(np)), p, 1);
      t.add(agree_at(lhs, rhs, 1), [&] { return "part 2, n = " + std::to_string(n); });
    }
  }
  if (in.engine != Engine::Exact) {
    const auto b = bundle(p, 1);
    for (int d = 1; d <= 4; ++d) {
      t.add(agree_at(-b.bar(d), w, 1), [&] { return "Wilson branch, d = " + std::to_string(d); });
    }
  }
  return {t.result("prop22", p, 1, "exact engine covers p <= 97")};
}

Results folklore(std::uint64_t p, const CheckInputs& in) {
  if (p < 5) return {Result::skipped("folklore", p, 1, "needs p >= 5")};
  if (!exact_covers(p)) return {Result::skipped("folklore", p, 1, "exact oracle covers p <= 97")};
  Results out;
  for (int K = 1; K <= 2; ++K) {
    if (!tier_selected(in, K)) continue;
    if (K == 2 && p < 7) {
      out.push_back(Result::skipped("folklore", p, K, "mod p^2 needs p >= 7"));
      continue;
    }
    Tally t;
    for (std::uint64_t m = 2; m <= in.table.max_index(); m += 2) {
      if (m % (p - 1) == 0 || (K == 2 && (m - 2) % (p - 1) == 0)) continue;
      const TrackedResidue fast = folklore_bernoulli_mod(m, p, K);
      t.add(agree_at(fast, reduce_rational(in.table[m], fast.context_ptr(), K), K),
            [&] { return "m = " + std::to_string(m); });
    }
    out.push_back(t.result("folklore", p, K, "no admissible m"));
  }
  return out;
}

Results denominators(std::uint64_t, const CheckInputs& in) {
  Tally t;
  for (std::size_t n = 1; n <= 200; ++n) {
    t.add(reduced_bernoulli_polynomial(n, in.table).denominator() == dn_product(n),
          [&] { return "denom of B_n(x) - B_n, n = " + std::to_string(n); });
    const PolynomialRational s = power_sum_polynomial(n, in.table);
    t.add(s.denominator() == Integer(static_cast<unsigned long>(n + 1)) * dn_product(n + 1),
          [&] { return "denom of S_n(x), n = " + std::to_string(n); });
    t.add(s == power_sum_polynomial(n, in.table, PowerSumForm::Integrated),
          [&] { return "two forms of S_n(x), n = " + std::to_string(n); });
  }
  return {t.result("denominators_dn", 0, 0, "")};
}

Results vsc(std::uint64_t, const CheckInputs& in) {
  Tally t;
  const auto primes = primes_between(2, in.table.max_index() + 1);
  for (std::size_t n = 2; n <= in.table.max_index(); n += 2) {
    ExactRational x = in.table[n];
    for (auto q : primes) {
      if (n % (q - 1) == 0) x += make_rational(1, static_cast<long>(q));
    }
    t.add(x.get_den() == 1, [&] { return "n = " + std::to_string(n); });
  }
  return {t.result("vsc", 0, 0, "")};
}

Results lemma26(std::uint64_t p, const CheckInputs& in) {
  Results out;
  for (int r = 1; r <= 4; ++r) {
    if (!tier_selected(in, r)) continue;
    Tally t;
    for (int n = 1; n <= 4; ++n) {
      t.add(agree_at(q_sum(p, n, r), q_sum(p, n, r, QSumMethod::Difference), r),
            [&] { return "n = " + std::to_string(n); });
    }
    out.push_back(t.result("lemma26_qdiff", p, r, ""));
  }
  return out;
}

Results bundle_chain(std::uint64_t p, const CheckInputs& in) {
  if (p < 5) return {Result::skipped("bundle_kummer_chain", p, 1, "needs p >= 5")};
  const int r = static_cast<int>(std::min<std::uint64_t>(4, p - 2));
  std::vector<DividedBernoulliBundle> bundles;
  if (in.engine != Engine::Exact) bundles.push_back(bundle(p, r));
  if (in.engine != Engine::Modular && exact_covers(p)) bundles.push_back(exact_bundle(p, r, in.table));
  Tally t;
  for (const auto& b : bundles) {
    const char* src = b.source == DividedBernoulliBundle::Source::Modular ? "modular" : "exact";
    for (int d = 2; d <= 4; ++d) {
      t.add(agree_at(b.bar(d), b.bar(1), 1), [&] { return std::string(src) + ", d = " + std::to_string(d); });
    }
    t.add(agree_at(b.bar2(2), b.bar2(1), 1), [&] { return std::string(src) + ", B-bar_{2,2}"; });
  }
  return {t.result("bundle_kummer_chain", p, 1, "exact engine covers p <= 97")};
}

CheckInfo per_prime(std::string id, std::string description,
                    std::function<Results(std::uint64_t, const CheckInputs&)> run) {
  return CheckInfo{std::move(id), std::move(description), true, std::move(run)};
}

std::vector<CheckInfo> build_registry() {
  std::vector<CheckInfo> r;
  r.push_back(per_prime("lerch", "W_p = Q_p(1) mod p", lerch));
  r.push_back(per_prime("glaisher_beeger", "W_p = B_{p-1} + 1/p - 1 mod p", glaisher_beeger));
  r.push_back(per_prime("lehmer", "r W_p = B_{r(p-1)} + 1/p - 1 mod p, r = 1..4", lehmer));
  r.push_back(per_prime("lehmer_diff", "W_p = B_{2(p-1)} - B_{p-1} mod p", lehmer_diff));
  r.push_back(per_prime("carlitz", "r W_p = (B_{r p^k (p-1)} + 1/p - 1)/p^k mod p", carlitz));
  for (int t = 1; t <= 3; ++t) {
    const std::string id = "thm_main_p" + std::to_string(t);
    r.push_back(per_prime(id, "W_p mod p^" + std::to_string(t) + " from divided Bernoulli numbers",
                          [t, id](std::uint64_t p, const CheckInputs& in) { return wilson_tier(p, in, t, id); }));
  }
  r.push_back(per_prime("thm_main2_p4", "W_p mod p^4 from divided Bernoulli numbers",
                        [](std::uint64_t p, const CheckInputs& in) { return wilson_tier(p, in, 4, "thm_main2_p4"); }));
  for (int n = 1; n <= 4; ++n) {
    r.push_back(per_prime("thm_main3_q" + std::to_string(n),
                          "every stated tier of (1/n) p^(n-1) Q_p(n), n = " + std::to_string(n),
                          [n](std::uint64_t p, const CheckInputs& in) { return q_tiers(p, in, n); }));
  }
  for (int t = 1; t <= 4; ++t) {
    r.push_back(per_prime("thm_kel_psi_r" + std::to_string(t),
                          "W_p and (p-1)! through psi_1..psi_" + std::to_string(t),
                          [t](std::uint64_t p, const CheckInputs&) { return psi_route(p, t); }));
  }
  r.push_back(per_prime("reduction_chain", "W_p mod p^4 formula reduces to the p^3, p^2, p forms", reduction_chain));
  r.push_back(per_prime("kummer", "B_n/n = B_{n+p-1}/(n+p-1) mod p", kummer));
  for (int t = 1; t <= 4; ++t) {
    r.push_back(per_prime("gen_kummer_r" + std::to_string(t),
                          "order-" + std::to_string(t) + " difference of beta vanishes mod p^" + std::to_string(t),
                          [t](std::uint64_t p, const CheckInputs& in) { return gen_kummer(p, in, t); }));
  }
  r.push_back(per_prime("cor35_tiers", "fast B^_{d(p-1)} mod p^r against the exact value, r = 1..6", cor35));
  r.push_back(per_prime("prop36", "(1/n) p^(n-1) Q_p(n) mod p^3, n = 1..3", prop36));
  r.push_back(per_prime("prop37", "(1/n) p^(n-1) Q_p(n) mod p^4, n = 1..4", prop37));
  r.push_back(per_prime("prop34_remainder", "exact tail of the power-sum expansion, d = 1..3", prop34));
  r.push_back(per_prime("lemma33_binom", "ord_p C(d(p-1), p-1) = 0 iff d = 1 mod p, d <= 3p", lemma33));
  r.push_back(per_prime("prop22", "ord_p B^_n >= ord_p n, and -B^_n/n mod p", prop22));
  r.push_back(per_prime("folklore", "B_m = S_m(p)/p mod p and mod p^2", folklore));
  r.push_back(CheckInfo{"denominators_dn", "denominators of B_n(x) - B_n and S_n(x), n <= 200", false, denominators});
  r.push_back(CheckInfo{"vsc", "B_n + sum over (p-1) | n of 1/p is an integer, even n <= 400", false, vsc});
  r.push_back(per_prime("lemma26_qdiff", "Q_p(n) directly and by differences of power sums", lemma26));
  r.push_back(per_prime("bundle_kummer_chain", "B-bar entries agree mod p", bundle_chain));
  return r;
}

struct WorkItem {
  std::size_t check;
  std::uint64_t p;
};

}  // namespace

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Exact: return "exact";
    case Engine::Modular: return "modular";
    case Engine::Both: return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view name) {
  if (name == "exact") return Engine::Exact;
  if (name == "modular") return Engine::Modular;
  if (name == "both") return Engine::Both;
  throw Error(ErrorKind::PreconditionViolated, "unknown engine '" + std::string(name) + "'");
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> checks = build_registry();
  return checks;
}

const CheckInfo& find_check(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::UnknownCheck, "no check named '" + std::string(id) + "'");
}

SuiteSpec make_suite(std::string_view suite, std::uint64_t p_min, std::uint64_t p_max, int modulus_exp,
                     Engine engine) {
  if (p_min > p_max) {
    throw Error(ErrorKind::UnknownRange,
                "p-min " + std::to_string(p_min) + " exceeds p-max " + std::to_string(p_max));
  }
  if (modulus_exp < 0) throw Error(ErrorKind::PreconditionViolated, "mod-exp must be >= 0");
  SuiteSpec spec;
  spec.suite_id = std::string(suite);
  spec.p_min = p_min;
  spec.p_max = p_max;
  spec.modulus_exp = modulus_exp;
  spec.engine = engine;
  if (suite == "all") {
    for (const auto& c : registry()) spec.check_ids.push_back(c.id);
    return spec;
  }
  std::size_t start = 0;
  while (start <= suite.size()) {
    const std::size_t comma = std::min(suite.find(',', start), suite.size());
    const std::string_view id = suite.substr(start, comma - start);
    spec.check_ids.push_back(find_check(id).id);
    start = comma + 1;
  }
  return spec;
}

BernoulliTable default_table(std::size_t max_index) {
  if (const char* path = std::getenv("WILSONLAB_TABLE_CACHE"); path != nullptr && *path != '\0') {
    return load_or_build_table(max_index, path);
  }
  return BernoulliTable::build(max_index);
}

SuiteReport run_suite(const SuiteSpec& spec, unsigned jobs, const BernoulliTable* table) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.p_min > spec.p_max) throw Error(ErrorKind::UnknownRange, "p-min exceeds p-max");
  std::vector<const CheckInfo*> checks;
  for (const auto& id : spec.check_ids) checks.push_back(&find_check(id));

  std::optional<BernoulliTable> own;
  if (table == nullptr || table->max_index() < kSuiteTableIndex) {
    own = default_table(kSuiteTableIndex);
    table = &*own;
  }
  const CheckInputs inputs{*table, spec.engine, spec.modulus_exp};

  const auto primes = primes_between(spec.p_min, spec.p_max);
  std::vector<WorkItem> items;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    if (!checks[c]->per_prime) {
      items.push_back({c, 0});
      continue;
    }
    for (auto p : primes) items.push_back({c, p});
  }

  std::vector<Results> slots(items.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& item = items[i];
      const CheckInfo& check = *checks[item.check];
      try {
        slots[i] = check.run(item.p, inputs);
      } catch (const Error& e) {
        slots[i] = {Result::failed(check.id, item.p, spec.modulus_exp, e.what())};
      } catch (const std::exception& e) {
        slots[i] = {Result::failed(check.id, item.p, spec.modulus_exp, std::string("internal error: ") + e.what())};
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SuiteReport report;
  report.suite = spec;
  for (auto& s : slots) {
    for (auto& r : s) report.results.push_back(std::move(r));
  }
  std::stable_sort(report.results.begin(), report.results.end(), [](const Result& a, const Result& b) {
    return std::tie(a.check_id, a.p, a.modulus_exp) < std::tie(b.check_id, b.p, b.modulus_exp);
  });
  for (const auto& r : report.results) {
    switch (r.status) {
      case CheckStatus::Pass: ++report.summary.pass; break;
      case CheckStatus::Fail: ++report.summary.fail; break;
      case CheckStatus::Skipped: ++report.summary.skipped; break;
    }
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::uint64_t> scan_primes(ScanClass cls, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  if (cls == ScanClass::Wilson) {
    for (auto p : primes_between(2, limit)) {
      if (is_wilson_prime(p)) out.push_back(p);
    }
    return out;
  }
  if (limit > kMaxTableIndex + 3) {
    throw Error(ErrorKind::IndexOutOfTable, "irregular scan to " + std::to_string(limit) + " needs B_" +
                                                std::to_string(limit - 3) + ", beyond the table cap " +
                                                std::to_string(kMaxTableIndex));
  }
  const BernoulliTable table = default_table(std::max<std::size_t>(2, limit >= 3 ? limit - 3 : 2));
  for (auto p : primes_between(3, limit)) {
    if (classify_prime(p, table).irregular) out.push_back(p);
  }
  return out;
}

}  // namespace wilsonlab
