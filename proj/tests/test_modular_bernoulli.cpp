#include <doctest.h>

#include "oracle.hpp"
#include "wilsonlab/error.hpp"
#include "wilsonlab/modular_bernoulli.hpp"
#include "wilsonlab/primes.hpp"

using namespace wilsonlab;

namespace {

const BernoulliTable& table() {
  static const BernoulliTable t = BernoulliTable::build(400);
  return t;
}

Integer exact_mod(const ExactRational& x, std::uint64_t p, int K) { return oracle::reduce(x, oracle::pow_p(p, K)); }

bool raises(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("power sums: fixed values") {
  CHECK(power_sum_mod(0, 5, 3).residue() == 4);
  CHECK(power_sum_mod(4, 5, 4).residue() == 354);
  CHECK(sh_value(4, 5, 2).residue() == 20);
  CHECK(raises(ErrorKind::NotDivisible, [] { sh_value(3, 5, 2); }));
}

TEST_CASE("power_sum_mod matches the direct sum") {
  for (auto p : primes_between(2, 31)) {
    for (unsigned n = 0; n <= 50; ++n) {
      for (int K = 1; K <= 5; ++K) {
        const Integer want = n == 0 ? Integer(static_cast<unsigned long>(p - 1)) : oracle::power_sum(n, p);
        CHECK(power_sum_mod(n, p, K).residue() == oracle::mod(want, oracle::pow_p(p, K)));
      }
    }
  }
}

TEST_CASE("folklore route: fixed values") {
  CHECK(folklore_bernoulli_mod(4, 7, 2).residue() == 31);
  CHECK(folklore_bernoulli_mod(10, 7, 1).residue() == 4);
  CHECK(raises(ErrorKind::PreconditionViolated, [] { folklore_bernoulli_mod(6, 7, 1); }));
  CHECK(raises(ErrorKind::PreconditionViolated, [] { folklore_bernoulli_mod(8, 7, 2); }));
}

TEST_CASE("folklore route equals the exact reduction, m <= 400, p <= 97") {
  long tested = 0;
  for (auto p : primes_between(5, 97)) {
    for (std::uint64_t m = 2; m <= 400; m += 2) {
      if (m % (p - 1) == 0) continue;
      CHECK(folklore_bernoulli_mod(m, p, 1).residue() == exact_mod(table()[m], p, 1));
      ++tested;
      if (p >= 7 && (m - 2) % (p - 1) != 0) {
        CHECK(folklore_bernoulli_mod(m, p, 2).residue() == exact_mod(table()[m], p, 2));
      }
    }
  }
  CHECK(tested > 4000);
}

TEST_CASE("admissibility") {
  CHECK(admissibility_delta(1, 7) == 1);
  CHECK(admissibility_delta(8, 7) == 0);
  CHECK(is_admissible(1, 5, 2));
  CHECK(is_admissible(1, 5, 3));
  CHECK_FALSE(is_admissible(1, 5, 4));
  CHECK(is_admissible(1, 7, 4));
  CHECK_FALSE(is_admissible(1, 3, 1));
  CHECK(raises(ErrorKind::InadmissibleCase, [] { adjusted_bernoulli_mod(1, 5, 4); }));
}

TEST_CASE("adjusted_bernoulli_mod: fixed values") {
  CHECK(adjusted_bernoulli_mod(1, 5, 2).residue() == 20);
  CHECK(adjusted_bernoulli_mod(2, 7, 4).residue() == 633);
  CHECK(bar_mod(1, 5, 3).residue() == 5);
  CHECK(bar2_mod(1, 7, 2).residue() == 20);
}

TEST_CASE("adjusted_bernoulli_mod equals the exact reduction, p <= 97, d <= 4, r <= 4") {
  long tested = 0;
  for (auto p : primes_between(5, 97)) {
    for (std::uint64_t d = 1; d <= 4; ++d) {
      for (int r = 1; r <= 4; ++r) {
        if (!is_admissible(d, p, r)) continue;
        const auto want = exact_mod(adjusted_bernoulli(d * (p - 1), p, table()), p, r);
        CHECK(adjusted_bernoulli_mod(d, p, r).residue() == want);
        ++tested;
      }
    }
  }
  CHECK(tested > 300);
}

TEST_CASE("r = 5, 6 with exact correction inputs") {
  for (std::uint64_t p : {7, 11, 13, 17, 19, 23}) {
    for (int r = 5; r <= 6; ++r) {
      for (std::uint64_t d = 1; d <= 3; ++d) {
        if (!is_admissible(d, p, r)) continue;
        const auto want = exact_mod(adjusted_bernoulli(d * (p - 1), p, table()), p, r);
        CHECK(adjusted_bernoulli_mod(d, p, r, &table()).residue() == want);
      }
    }
  }
  CHECK(raises(ErrorKind::InadmissibleCase, [] { adjusted_bernoulli_mod(1, 11, 5); }));
}

TEST_CASE("bar2_mod beyond d = 2 follows the exact values") {
  for (auto p : primes_between(7, 97)) {
    for (std::uint64_t d = 1; d <= 4; ++d) {
      const auto want = exact_mod(divided_bernoulli(DividedKind::Bar2, d, p, table()), p, 2);
      CHECK(bar2_mod(d, p, 2).residue() == want);
    }
  }
}

TEST_CASE("bundles: modular against exact") {
  for (auto p : primes_between(5, 97)) {
    const int r = static_cast<int>(std::min<std::uint64_t>(4, p - 2));
    const auto m = bundle(p, r);
    const auto e = exact_bundle(p, r, table());
    REQUIRE(m.bars.size() == 4);
    for (int d = 1; d <= 4; ++d) CHECK(agree_at(m.bar(d), e.bar(d), m.bar(d).precision()));
    for (int d = 1; d <= 2; ++d) CHECK(agree_at(m.bar2(d), e.bar2(d), m.bar2(d).precision()));
  }
  const auto two = exact_bundle(2, 1, table());
  CHECK(two.bars.size() == 1);
  CHECK(two.bar(1).residue() == 1);
  CHECK(exact_bundle(3, 1, table()).bars2.empty());
  CHECK(raises(ErrorKind::PreconditionViolated, [&] { (void)two.bar(2); }));
}

TEST_CASE("Kummer congruences") {
  CHECK(kummer_check(2, 6, 5, table()).passed());
  const auto g = generalized_kummer_check(6, 5, 2, table());
  CHECK(g.passed());
  CHECK(generalized_kummer_check(4, 5, 1, table()).passed());
  for (auto p : primes_between(5, 37)) {
    for (std::uint64_t n = 2; n + 4 * (p - 1) <= 400; n += 2) {
      for (int r = 1; r <= 4; ++r) {
        const bool cond1 = n % (p - 1) != 0 && n > static_cast<std::uint64_t>(r);
        const bool cond2 = n % (p - 1) == 0 && p > r + n / (p - 1);
        if (cond1 || cond2) CHECK(generalized_kummer_check(n, p, r, table()).passed());
      }
    }
  }
  for (auto p : primes_between(11, 97)) {
    for (std::uint64_t d = 1; d <= 3; ++d) {
      for (int r = 1; r <= 4; ++r) CHECK(generalized_kummer_check_modular(d, p, r).passed());
    }
  }
}

TEST_CASE("binomial valuation dichotomy") {
  for (auto p : primes_between(3, 61)) {
    for (std::uint64_t d = 1; d <= 3 * p; ++d) {
      CHECK((binomial_valuation(d, p) == 0) == (d % p == 1));
    }
  }
}
