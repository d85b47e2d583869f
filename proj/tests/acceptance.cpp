// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wilsonlab/error.hpp"
#include "wilsonlab/formulas.hpp"
#include "wilsonlab/modular_bernoulli.hpp"
#include "wilsonlab/primes.hpp"
#include "wilsonlab/suite.hpp"
#include "wilsonlab/wilson.hpp"

using namespace wilsonlab;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

const BernoulliTable& table() {
  static const BernoulliTable t = default_table(kSuiteTableIndex);
  return t;
}

Outcome suite_clean(const std::string& ids, std::uint64_t lo, std::uint64_t hi, Engine engine, unsigned jobs,
                    bool allow_skips = false) {
  const auto report = run_suite(make_suite(ids, lo, hi, 0, engine), jobs, &table());
  std::ostringstream s;
  s << report.summary.pass << " pass, " << report.summary.fail << " fail, " << report.summary.skipped << " skipped";
  for (const auto& r : report.results) {
    if (r.status == CheckStatus::Fail) {
      s << "; first fail " << r.check_id << " p=" << r.p << " mod p^" << r.modulus_exp << ": lhs "
        << value_string(r.lhs) << ", rhs " << value_string(r.rhs);
      break;
    }
  }
  const bool ok = report.summary.fail == 0 && (allow_skips || report.summary.skipped == 0);
  return {ok, s.str()};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

Outcome wilson_primes() {
  const auto got = scan_primes(ScanClass::Wilson, 1000);
  return {got == std::vector<std::uint64_t>{5, 13, 563}, "found " + join(got)};
}

Outcome irregular_primes() {
  const auto got = scan_primes(ScanClass::Irregular, 100);
  return {got == std::vector<std::uint64_t>{37, 59, 67}, "found " + join(got)};
}

Outcome wilson_low_tiers() {
  const auto a = suite_clean("thm_main_p1", 2, 10000, Engine::Modular, 8);
  const auto b = suite_clean("thm_main_p2,thm_main_p3", 5, 2000, Engine::Modular, 8);
  return {a.ok && b.ok, "p^1 to 10^4: " + a.detail + "; p^2, p^3 to 2000: " + b.detail};
}

Outcome wilson_p4() { return suite_clean("thm_main2_p4", 7, 1000, Engine::Modular, 8); }

Outcome qsum_tiers() {
  long tested = 0, failed = 0;
  std::string first;
  for (auto p : primes_between(3, 500)) {
    const bool modular = p >= 7;
    const auto b = modular ? bundle(p, 4) : exact_bundle(p, 4, table());
    for (const auto& f : qsum_formulas()) {
      if (p < f.min_prime) continue;
      ++tested;
      const auto lhs = q_sum_tier_lhs(p, f.n, f.modulus_exp);
      const auto rhs = q_sum_tier_rhs(p, f.n, f.modulus_exp, b);
      if (!agree_at(lhs, rhs, f.modulus_exp)) {
        if (failed++ == 0) {
          first = "n=" + std::to_string(f.n) + " mod p^" + std::to_string(f.modulus_exp) + " at p=" +
                  std::to_string(p) + ": lhs " + lhs.residue().get_str() + ", rhs " + rhs.residue().get_str();
        }
      }
    }
  }
  std::string detail = std::to_string(tested - failed) + "/" + std::to_string(tested) + " tier instances";
  if (failed) detail += "; first fail " + first;
  return {failed == 0, detail};
}

Outcome psi_route() {
  long tested = 0, failed = 0;
  for (auto p : primes_between(5, 500)) {
    for (int r = 1; r <= 4; ++r) {
      ++tested;
      if (wilson_via_psi(p, r).residue() != wilson_quotient(p, r).residue()) ++failed;
    }
  }
  return {failed == 0, std::to_string(tested - failed) + "/" + std::to_string(tested) + " (p, r) pairs"};
}

Outcome oracle_agreement() {
  long tested = 0, failed = 0;
  for (auto p : primes_between(5, 97)) {
    for (std::uint64_t d = 1; d <= 4; ++d) {
      for (int r = 1; r <= 4; ++r) {
        if (!is_admissible(d, p, r)) continue;
        ++tested;
        const auto want = oracle::reduce(adjusted_bernoulli(d * (p - 1), p, table()), oracle::pow_p(p, r));
        if (adjusted_bernoulli_mod(d, p, r).residue() != want) ++failed;
      }
    }
    for (std::uint64_t m = 2; m <= 400; m += 2) {
      if (m % (p - 1) == 0) continue;
      const int K = p >= 7 && (m - 2) % (p - 1) != 0 ? 2 : 1;
      ++tested;
      const auto want = oracle::reduce(table()[m], oracle::pow_p(p, K));
      if (folklore_bernoulli_mod(m, p, K).residue() != want) ++failed;
    }
  }
  return {failed == 0, std::to_string(tested - failed) + "/" + std::to_string(tested) + " reductions"};
}

Outcome fixed_points() {
  std::vector<std::string> bad;
  const auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  expect(oracle::wilson_quotient(5) == 5, "W_5 = 5");
  expect(wilson_quotient(5, 2).residue() == 5, "W_5 mod 25, direct");
  expect(wilson_via_psi(5, 2).residue() == 5, "W_5 mod 25, psi");
  expect(wilson_via_bernoulli(5, 2, bundle(5, 2)).residue() == 5, "W_5 mod 25, Bernoulli");
  expect(q_sum(5, 1, 3).residue() == 70, "Q_5(1), direct");
  expect(q_sum(5, 1, 3, QSumMethod::Difference).residue() == 70, "Q_5(1), differences");
  expect(divided_bernoulli(DividedKind::Bar, 1, 2, table()) == -1, "B-bar_1 at p = 2");
  expect(divided_bernoulli(DividedKind::Bar, 1, 3, table()) == make_rational(-1, 4), "B-bar_1 at p = 3");
  expect(bar2_mod(1, 7, 2).residue() == 20, "B-bar_{1,2} mod 49, power sums");
  expect(oracle::reduce(divided_bernoulli(DividedKind::Bar2, 1, 7, table()), 49) == 20, "B-bar_{1,2} mod 49, exact");
  std::string detail = bad.empty() ? "10 values" : "wrong:";
  for (const auto& b : bad) detail += " [" + b + "]";
  return {bad.empty(), detail};
}

Outcome remainder() {
  std::vector<std::string> bad;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    if (power_sum_remainder(1, p, table()) != ExactRational(oracle::pow_p(p, p - 2)) / 2) {
      bad.push_back("d=1 p=" + std::to_string(p));
    }
    for (std::uint64_t d = 2; d <= 3; ++d) {
      const long bound = d % p == 1 ? static_cast<long>(p) - 3 : static_cast<long>(p) - 2;
      if (ord_p(power_sum_remainder(d, p, table()), p) < bound) {
        bad.push_back("d=" + std::to_string(d) + " p=" + std::to_string(p));
      }
    }
  }
  std::string detail = bad.empty() ? "12 cases" : "wrong:";
  for (const auto& b : bad) detail += " " + b;
  return {bad.empty(), detail};
}

Outcome property_suites() {
  const auto a = suite_clean("kummer,gen_kummer_r1,gen_kummer_r2,gen_kummer_r3,gen_kummer_r4,lemma33_binom", 5, 97,
                             Engine::Both, 8);
  const auto b = suite_clean("denominators_dn,vsc", 2, 2, Engine::Both, 1);
  const auto c = suite_clean("reduction_chain", 7, 500, Engine::Modular, 8);
  return {a.ok && b.ok && c.ok, "Kummer family: " + a.detail + "; denominators: " + b.detail +
                                    "; reduction chain: " + c.detail};
}

struct Criterion {
  int id;
  const char* title;
  double time_limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Wilson primes up to 1000", 10.0, wilson_primes},
      {2, "irregular primes up to 100", 5.0, irregular_primes},
      {3, "W_p mod p, p^2, p^3 from divided Bernoulli numbers", 120.0, wilson_low_tiers},
      {4, "W_p mod p^4 from divided Bernoulli numbers, 7 <= p <= 1000", 120.0, wilson_p4},
      {5, "every Q_p(n) tier at its stated bound, p <= 500", 0.0, qsum_tiers},
      {6, "psi route equals the Wilson quotient, r <= 4 < p <= 500", 0.0, psi_route},
      {7, "power-sum Bernoulli residues equal exact reductions, p <= 97", 0.0, oracle_agreement},
      {8, "worked fixed points", 0.0, fixed_points},
      {9, "power-sum remainder, p in {5, 7, 11, 13}", 30.0, remainder},
      {10, "Kummer, denominator and reduction-chain properties", 0.0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      out.ok = false;
      out.detail += "; over the " + std::to_string(static_cast<int>(c.time_limit)) + " s limit";
    }
    if (!out.ok) ++failures;
    std::printf("%s  %2d  %s  (%.2f s)  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
