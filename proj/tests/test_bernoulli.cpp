#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "wilsonlab/bernoulli.hpp"
#include "wilsonlab/error.hpp"
#include "wilsonlab/primes.hpp"

using namespace wilsonlab;

namespace {

const BernoulliTable& table() {
  static const BernoulliTable t = BernoulliTable::build(400);
  return t;
}

}  // namespace

TEST_CASE("table: first entries and known values") {
  const auto& b = table();
  CHECK(b[0] == 1);
  CHECK(b[1] == make_rational(-1, 2));
  CHECK(b[2] == make_rational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[4] == make_rational(-1, 30));
  CHECK(b[12] == make_rational(-691, 2730));
  CHECK(b[20] == make_rational(-174611, 330));
  CHECK_THROWS_AS(b[401], Error);
  CHECK_THROWS_AS(BernoulliTable::build(kMaxTableIndex + 1), Error);
}

TEST_CASE("table agrees with the Akiyama-Tanigawa transform") {
  const auto ref = oracle::bernoulli(120);
  for (std::size_t n = 0; n <= 120; ++n) CHECK(table()[n] == ref[n]);
}

TEST_CASE("von Staudt-Clausen: B_n + sum 1/p is an integer for even n <= 400") {
  for (std::size_t n = 2; n <= 400; n += 2) {
    ExactRational s = table()[n];
    for (auto p : primes_between(2, n + 1)) {
      if (n % (p - 1) == 0) s += make_rational(1, static_cast<long>(p));
    }
    CHECK(s.get_den() == 1);
    CHECK(table()[n].get_den() == vsc_denominator(n));
  }
  CHECK(vsc_denominator(4) == 30);
  CHECK(vsc_denominator(12) == 2730);
  for (std::size_t n = 3; n <= 399; n += 2) CHECK(table()[n] == 0);
}

TEST_CASE("Bernoulli polynomials") {
  const auto b1 = bernoulli_polynomial(1, table());
  CHECK(b1 == PolynomialRational({make_rational(-1, 2), make_rational(1)}));
  CHECK(bernoulli_polynomial(6, table()).coefficient(6) == 1);
  const auto t3 = reduced_bernoulli_polynomial(3, table());
  CHECK(t3 == PolynomialRational({make_rational(0), make_rational(1, 2), make_rational(-3, 2), make_rational(1)}));
  CHECK(t3.denominator() == 2);
}

TEST_CASE("power-sum polynomials: both forms agree and match direct sums") {
  const auto s4 = power_sum_polynomial(4, table());
  CHECK(s4(make_rational(5)) == 354);
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto a = power_sum_polynomial(n, table(), PowerSumForm::Appell);
    const auto i = power_sum_polynomial(n, table(), PowerSumForm::Integrated);
    CHECK(a == i);
    for (std::uint64_t m : {2, 5, 11}) CHECK(a(ExactRational(static_cast<unsigned long>(m))) == oracle::power_sum(n, m));
  }
}

TEST_CASE("denominators: D_n and (n+1) D_{n+1}") {
  CHECK(dn_product(3) == 2);
  CHECK(dn_product(6) == 2);
  CHECK(power_sum_polynomial(5, table()).denominator() == 12);
  for (std::size_t n = 1; n <= 200; ++n) {
    CHECK(reduced_bernoulli_polynomial(n, table()).denominator() == dn_product(n));
    CHECK(power_sum_polynomial(n, table()).denominator() == Integer(static_cast<unsigned long>(n + 1)) * dn_product(n + 1));
  }
}

TEST_CASE("adjusted and divided Bernoulli numbers") {
  CHECK(adjusted_bernoulli(0, 5, table()) == 0);
  CHECK(adjusted_bernoulli(4, 5, table()) == make_rational(-5, 6));
  CHECK(adjusted_bernoulli(6, 5, table()) == table()[6]);
  CHECK(divided_bernoulli(DividedKind::Bar, 1, 2, table()) == -1);
  CHECK(divided_bernoulli(DividedKind::Bar, 1, 3, table()) == make_rational(-1, 4));
  CHECK(divided_bernoulli(DividedKind::Bar, 1, 5, table()) == make_rational(-5, 24));
  CHECK(divided_bernoulli(DividedKind::Bar2, 1, 7, table()) == make_rational(-1, 120));
  CHECK(divided_bernoulli(DividedKind::Beta, 6, 5, table()) == make_rational(1, 252));
  // B^_n is p-integral with ord_p B^_n >= ord_p n.
  for (auto p : primes_between(3, 97)) {
    for (std::size_t n = 2; n <= 400; n += 2) {
      const auto b = adjusted_bernoulli(n, p, table());
      CHECK(ord_p(b, p) >= ord_p(Integer(static_cast<unsigned long>(n)), p));
    }
  }
}

TEST_CASE("power-sum remainder") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const ExactRational half = ExactRational(oracle::pow_p(p, p - 2)) / 2;
    CHECK(power_sum_remainder(1, p, table()) == half);
    for (std::size_t d = 2; d <= 3; ++d) {
      const long bound = (d % p == 1) ? static_cast<long>(p) - 3 : static_cast<long>(p) - 2;
      CHECK(ord_p(power_sum_remainder(d, p, table()), p) >= bound);
    }
  }
}

TEST_CASE("table cache round trip and corruption") {
  const auto dir = std::filesystem::temp_directory_path() / "wilsonlab_test_cache";
  std::filesystem::create_directories(dir);
  const auto path = dir / "table.txt";
  std::filesystem::remove(path);
  const auto built = load_or_build_table(60, path);
  CHECK(std::filesystem::exists(path));
  const auto loaded = load_or_build_table(60, path);
  CHECK(loaded.values() == built.values());

  std::stringstream s;
  write_table(s, built);
  CHECK(read_table(s).values() == built.values());

  std::stringstream bad("0\t1/1\n1\t-1/2\n2\t1/7\n");
  CHECK_THROWS_AS(read_table(bad), Error);
  {
    std::ofstream out(path);
    out << "garbage\n";
  }
  CHECK(load_or_build_table(60, path).values() == built.values());
  std::filesystem::remove_all(dir);
}
