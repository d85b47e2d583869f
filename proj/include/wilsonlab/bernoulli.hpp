#pragma once

// Exact Bernoulli machinery: the slow, trusted side of every dual-route
// check. Everything here is big-rational arithmetic with no reductions.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "wilsonlab/padic.hpp"

namespace wilsonlab {

/// Largest index the exact table will build. Covers 4(p-1) for p <= 600.
inline constexpr std::size_t kMaxTableIndex = 2400;

/// B_0..B_N, with B_1 = -1/2.
class BernoulliTable {
 public:
  /// Classical recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0. Throws
  /// IndexOutOfTable when N > kMaxTableIndex.
  static BernoulliTable build(std::size_t max_index);
  /// Revalidates B_0, B_1, B_2, vanishing odd values and the von
  /// Staudt-Clausen denominators; throws CacheFormat on any violation.
  static BernoulliTable from_values(std::vector<ExactRational> values);

  std::size_t max_index() const { return values_.size() - 1; }
  /// B_n; throws IndexOutOfTable beyond max_index().
  const ExactRational& operator[](std::size_t n) const;
  const std::vector<ExactRational>& values() const { return values_; }

 private:
  explicit BernoulliTable(std::vector<ExactRational> values) : values_(std::move(values)) {}
  std::vector<ExactRational> values_;
};

/// Cache file: one `index<TAB>numerator/denominator` line per entry.
void write_table(std::ostream& out, const BernoulliTable& table);
BernoulliTable read_table(std::istream& in);
/// Loads `path` when it exists and covers `max_index`; otherwise builds and
/// (re)writes it. An unreadable or invalid cache is rebuilt.
BernoulliTable load_or_build_table(std::size_t max_index, const std::filesystem::path& path);

/// Dense polynomial over Q, coefficients in ascending degree, trailing zeros
/// trimmed. The zero polynomial has no coefficients and degree -1.
class PolynomialRational {
 public:
  PolynomialRational() = default;
  explicit PolynomialRational(std::vector<ExactRational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactRational>& coefficients() const { return coeffs_; }
  ExactRational coefficient(std::size_t k) const;

  ExactRational operator()(const ExactRational& x) const;
  /// Least common multiple of the coefficient denominators.
  Integer denominator() const;
  /// Minimum valuation over the coefficients.
  Valuation ord_p(std::uint64_t p) const;

  friend bool operator==(const PolynomialRational&, const PolynomialRational&) = default;

 private:
  std::vector<ExactRational> coeffs_;
};

PolynomialRational operator-(const PolynomialRational& a, const PolynomialRational& b);

/// B_n(x) = sum_k C(n, k) B_{n-k} x^k.
PolynomialRational bernoulli_polynomial(std::size_t n, const BernoulliTable& table);
/// B_n(x) - B_n, for n >= 1.
PolynomialRational reduced_bernoulli_polynomial(std::size_t n, const BernoulliTable& table);

enum class PowerSumForm {
  /// (1/(n+1)) sum_{k=1}^{n+1} C(n+1, k) B_{n+1-k} x^k
  Appell,
  /// sum_{v=0}^{n} C(n, v) B_{n-v} x^{v+1}/(v+1)
  Integrated,
};

/// S_n(x), with S_n(m) = 1^n + ... + (m-1)^n for n >= 1. S_0 is not produced
/// here; callers use S_0(m) = m - 1.
PolynomialRational power_sum_polynomial(std::size_t n, const BernoulliTable& table,
                                        PowerSumForm form = PowerSumForm::Appell);

/// Product of the primes p with (p-1) | n; the denominator of B_n for even n.
Integer vsc_denominator(std::uint64_t n);
/// D_n: product of the primes p <= n whose base-p digit sum of n is >= p.
Integer dn_product(std::uint64_t n);

/// B^_n: 0 for n = 0, B_n + 1/p - 1 when (p-1) | n, B_n otherwise.
/// Defined for odd p and even n.
ExactRational adjusted_bernoulli(std::size_t n, std::uint64_t p, const BernoulliTable& table);

enum class DividedKind {
  /// beta_n = B^_n / n, n even >= 2
  Beta,
  /// B-bar_d = (B_{d(p-1)} + 1/p - 1) / (d(p-1)); also p = 2 with d = 1
  Bar,
  /// B-bar_{d,2} = B_{d(p-1)-2} / (d(p-1)-2), p >= 5
  Bar2,
};

ExactRational divided_bernoulli(DividedKind kind, std::size_t index, std::uint64_t p,
                                const BernoulliTable& table);

/// For n = d(p-1), p >= 5: the exact tail
///   (S_n(p) - S_0(p))/p - B^_n - sum_{v=2, v even}^{p-3} C(n, v+1) beta_{n-v} p^v.
ExactRational power_sum_remainder(std::size_t d, std::uint64_t p, const BernoulliTable& table);

}  // namespace wilsonlab
