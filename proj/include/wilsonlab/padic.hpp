#pragma once

// Residues modulo prime powers with explicit precision, p-adic valuations of
// rationals, and the two difference operators every congruence check is
// built from: the forward difference with caller-chosen step, and division
// by p (the backward shift on pZ_p).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wilsonlab {

using Integer = mpz_class;
using ExactRational = mpq_class;

/// num/den in lowest terms with positive denominator.
ExactRational make_rational(const Integer& num, const Integer& den);
ExactRational make_rational(long num, long den = 1);

/// Exact C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// p-adic valuation, with +infinity for zero.
class Valuation {
 public:
  constexpr explicit Valuation(long v) : value_(v) {}
  static constexpr Valuation infinity() { return Valuation(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  /// Finite value; infinity reads as LONG_MAX so that `v >= k` comparisons
  /// stay meaningful.
  constexpr long value() const { return value_; }

  constexpr auto operator<=>(const Valuation&) const = default;
  constexpr bool operator==(long v) const { return value_ == v; }
  constexpr auto operator<=>(long v) const { return value_ <=> v; }

  std::string to_string() const;

 private:
  static constexpr long kInfinite = std::numeric_limits<long>::max();
  long value_;
};

Valuation ord_p(const Integer& x, std::uint64_t p);
Valuation ord_p(const ExactRational& x, std::uint64_t p);
/// |x|_p = p^(-ord_p x); zero for x = 0.
ExactRational padic_norm(const ExactRational& x, std::uint64_t p);

/// A prime together with the working exponent R of the ambient ring Z/p^R.
class PrimePowerContext {
 public:
  PrimePowerContext(std::uint64_t p, int working_exp);

  std::uint64_t prime() const { return p_; }
  const Integer& prime_z() const { return powers_[1]; }
  int working_exp() const { return static_cast<int>(powers_.size()) - 1; }
  const Integer& modulus() const { return powers_.back(); }
  /// p^k for 0 <= k <= working_exp().
  const Integer& power(int k) const;

 private:
  std::uint64_t p_;
  std::vector<Integer> powers_;
};

using ContextPtr = std::shared_ptr<const PrimePowerContext>;

ContextPtr make_context(std::uint64_t p, int working_exp);

/// An integer known modulo p^K, 0 <= K <= R. K = 0 carries no information.
///
/// Ring operations on two residues keep the smaller precision; multiplying by
/// p^j raises precision to min(K + j, R). Operands must share the prime; the
/// result lives in whichever operand context has the larger working exponent.
class TrackedResidue {
 public:
  TrackedResidue(ContextPtr ctx, const Integer& value, int precision);

  static TrackedResidue zero(const ContextPtr& ctx, int precision) {
    return TrackedResidue(ctx, Integer(0), precision);
  }

  const PrimePowerContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  std::uint64_t prime() const { return ctx_->prime(); }
  int precision() const { return precision_; }
  const Integer& residue() const { return residue_; }

  /// Same value at a lower (or equal) precision.
  TrackedResidue truncated(int precision) const;
  /// Residue times p^j.
  TrackedResidue times_p_power(int j) const;
  /// Multiplicative inverse of a unit; throws NotInvertible otherwise.
  TrackedResidue inverse() const;
  TrackedResidue pow(unsigned long e) const;
  /// Multiply by a p-integral rational; throws NotPIntegral otherwise.
  TrackedResidue scaled(const ExactRational& c) const;

  bool is_unit() const;

  TrackedResidue operator-() const;
  TrackedResidue& operator+=(const TrackedResidue& rhs);
  TrackedResidue& operator-=(const TrackedResidue& rhs);
  TrackedResidue& operator*=(const TrackedResidue& rhs);

  friend TrackedResidue operator+(TrackedResidue a, const TrackedResidue& b) { return a += b; }
  friend TrackedResidue operator-(TrackedResidue a, const TrackedResidue& b) { return a -= b; }
  friend TrackedResidue operator*(TrackedResidue a, const TrackedResidue& b) { return a *= b; }

  // Exact integers carry unbounded precision.
  friend TrackedResidue operator+(const TrackedResidue& a, const Integer& b);
  friend TrackedResidue operator-(const TrackedResidue& a, const Integer& b);
  friend TrackedResidue operator*(const TrackedResidue& a, const Integer& b);
  friend TrackedResidue operator*(const Integer& a, const TrackedResidue& b) { return b * a; }

  std::string to_string() const;

 private:
  void adopt_context(const TrackedResidue& other);

  ContextPtr ctx_;
  int precision_;
  Integer residue_;
};

/// True iff both residues are known to precision `k` and agree modulo p^k.
bool agree_at(const TrackedResidue& a, const TrackedResidue& b, int k);

/// Image of a p-integral rational in Z/p^K. Throws NotPIntegral when
/// ord_p(x) < 0.
TrackedResidue reduce_rational(const ExactRational& x, const ContextPtr& ctx, int precision);

/// x / p^j at precision K - j. Throws PrecisionExhausted when K < j and
/// NotDivisible when p^j does not divide the residue.
TrackedResidue divide_by_p(const TrackedResidue& x, int j = 1);

/// sum_{v=0}^{n} C(n, v) (-1)^(n-v) values[v], where values[v] is the
/// caller-evaluated f(s + v h). Requires exactly n + 1 values.
TrackedResidue forward_difference(std::span<const TrackedResidue> values, int order);

Integer pow_mod(const Integer& a, const Integer& e, const Integer& m);
/// a^-1 mod p^K; throws NotInvertible when p | a.
TrackedResidue inv_mod(const Integer& a, const ContextPtr& ctx, int precision);

}  // namespace wilsonlab
