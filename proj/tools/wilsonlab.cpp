// wilsonlab: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "wilsonlab/bernoulli.hpp"
#include "wilsonlab/error.hpp"
#include "wilsonlab/modular_bernoulli.hpp"
#include "wilsonlab/report.hpp"
#include "wilsonlab/suite.hpp"
#include "wilsonlab/wilson.hpp"

namespace {

using namespace wilsonlab;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyArgs {
  std::string suite;
  std::uint64_t p_min = 2;
  std::uint64_t p_max = 100;
  int mod_exp = 0;
  std::string engine = "both";
  unsigned jobs = 0;
  std::string format = "text";
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const SuiteSpec spec = make_suite(a.suite, a.p_min, a.p_max, a.mod_exp, parse_engine(a.engine));
  const ReportFormat format = parse_format(a.format);
  const unsigned jobs = a.jobs != 0 ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  const SuiteReport report = run_suite(spec, jobs);
  const std::string text = render_report(report, format);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(a.out);
    if (!file) throw Error(ErrorKind::PreconditionViolated, "cannot write " + a.out);
    file << text;
  }
  return report.summary.fail == 0 ? 0 : kExitFail;
}

int run_wilson(std::uint64_t p, int r, const std::string& method) {
  TrackedResidue w = wilson_quotient(p, r);
  if (method == "psi") {
    w = wilson_via_psi(p, r);
  } else if (method == "bernoulli") {
    w = wilson_via_bernoulli(p, r, p >= 5 && p >= static_cast<std::uint64_t>(r) + 2 && r <= 4
                                       ? bundle(p, r)
                                       : exact_bundle(p, r, default_table(4 * (p - 1))));
  } else if (method != "direct") {
    throw Error(ErrorKind::PreconditionViolated, "unknown method '" + method + "'");
  }
  std::cout << w.residue() << '\n';
  return 0;
}

int run_qsum(std::uint64_t p, int n, int r, const std::string& method) {
  TrackedResidue q = q_sum(p, n, r);
  if (method == "difference") {
    q = q_sum(p, n, r, QSumMethod::Difference);
  } else if (method == "bernoulli") {
    // Q_p(n) mod p^r comes from the tier mod p^(r+n-1).
    const int tier = r + n - 1;
    if (tier > 4) throw Error(ErrorKind::InadmissibleTier, "needs a tier mod p^" + std::to_string(tier));
    const bool modular = p >= 5 && p >= static_cast<std::uint64_t>(tier) + 2;
    q = q_sum_via_bernoulli(p, n, tier, modular ? bundle(p, tier) : exact_bundle(p, tier, default_table(4 * (p - 1))));
  } else if (method != "direct") {
    throw Error(ErrorKind::PreconditionViolated, "unknown method '" + method + "'");
  }
  std::cout << q.residue() << '\n';
  return 0;
}

int run_bernoulli(std::size_t max_index, const std::string& cache) {
  const BernoulliTable table =
      cache.empty() ? default_table(max_index) : load_or_build_table(max_index, cache);
  for (std::size_t n = 0; n <= max_index; ++n) std::cout << n << '\t' << table[n].get_str() << '\n';
  return 0;
}

int run_scan(const std::string& cls, std::uint64_t limit) {
  ScanClass c;
  if (cls == "wilson") {
    c = ScanClass::Wilson;
  } else if (cls == "irregular") {
    c = ScanClass::Irregular;
  } else {
    throw Error(ErrorKind::PreconditionViolated, "unknown class '" + cls + "'");
  }
  const auto primes = scan_primes(c, limit);
  for (std::size_t i = 0; i < primes.size(); ++i) std::cout << (i ? " " : "") << primes[i];
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson quotients, Fermat quotients and Bernoulli numbers modulo prime powers"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run registered congruence checks over a prime range");
  verify->add_option("--suite", va.suite, "check id, comma-separated ids, or 'all'")->required();
  verify->add_option("--p-min", va.p_min, "smallest p")->required();
  verify->add_option("--p-max", va.p_max, "largest p")->required();
  verify->add_option("--mod-exp", va.mod_exp, "only tiers mod p^r (0: all)");
  verify->add_option("--engine", va.engine, "exact | modular | both")
      ->check(CLI::IsMember({"exact", "modular", "both"}));
  verify->add_option("--jobs", va.jobs, "worker threads (0: all cores)");
  verify->add_option("--format", va.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", va.out, "write the report here");

  std::uint64_t p = 0;
  int r = 1;
  int n = 1;
  std::string method = "direct";
  auto* wilson = app.add_subcommand("wilson", "W_p mod p^r");
  wilson->add_option("--p", p, "prime")->required();
  wilson->add_option("--mod-exp", r, "r")->required();
  wilson->add_option("--method", method, "direct | psi | bernoulli")
      ->check(CLI::IsMember({"direct", "psi", "bernoulli"}));

  auto* qsum = app.add_subcommand("qsum", "Q_p(n) mod p^r");
  qsum->add_option("--p", p, "prime")->required();
  qsum->add_option("--n", n, "power")->required();
  qsum->add_option("--mod-exp", r, "r")->required();
  qsum->add_option("--method", method, "direct | difference | bernoulli")
      ->check(CLI::IsMember({"direct", "difference", "bernoulli"}));

  std::size_t max_index = 0;
  std::string cache;
  auto* bern = app.add_subcommand("bernoulli", "print B_0..B_N");
  bern->add_option("--max-index", max_index, "N")->required();
  bern->add_option("--cache", cache, "table cache file");

  std::string cls;
  std::uint64_t limit = 0;
  auto* scan = app.add_subcommand("scan", "list Wilson or irregular primes");
  scan->add_option("--class", cls, "wilson | irregular")->required()->check(CLI::IsMember({"wilson", "irregular"}));
  scan->add_option("--limit", limit, "largest p")->required();

  std::uint64_t dn_n = 0;
  auto* dn = app.add_subcommand("dn", "D_n, the denominator of B_n(x) - B_n");
  dn->add_option("--n", dn_n, "n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*wilson) return run_wilson(p, r, method);
    if (*qsum) return run_qsum(p, n, r, method);
    if (*bern) return run_bernoulli(max_index, cache);
    if (*scan) return run_scan(cls, limit);
    if (*dn) {
      std::cout << dn_product(dn_n) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
