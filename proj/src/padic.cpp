#include "wilsonlab/padic.hpp"

#include <algorithm>
#include <utility>

#include "wilsonlab/error.hpp"
#include "wilsonlab/primes.hpp"

namespace wilsonlab {

ExactRational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::PreconditionViolated, "zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

Valuation ord_p(const Integer& x, std::uint64_t p) {
  if (x == 0) return Valuation::infinity();
  Integer rest;
  const Integer pz(static_cast<unsigned long>(p));
  const auto count = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return Valuation(static_cast<long>(count));
}

Valuation ord_p(const ExactRational& x, std::uint64_t p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(ord_p(Integer(x.get_num()), p).value() - ord_p(Integer(x.get_den()), p).value());
}

ExactRational padic_norm(const ExactRational& x, std::uint64_t p) {
  const Valuation v = ord_p(x, p);
  if (v.is_infinite()) return ExactRational(0);
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(std::labs(v.value())));
  return v.value() >= 0 ? make_rational(Integer(1), pk) : ExactRational(pk);
}

// --- PrimePowerContext ---------------------------------------------------

PrimePowerContext::PrimePowerContext(std::uint64_t p, int working_exp) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (working_exp < 1) throw Error(ErrorKind::PreconditionViolated, "working exponent must be >= 1");
  powers_.reserve(static_cast<std::size_t>(working_exp) + 1);
  powers_.emplace_back(1);
  const Integer pz(static_cast<unsigned long>(p));
  for (int k = 1; k <= working_exp; ++k) powers_.push_back(powers_.back() * pz);
}

const Integer& PrimePowerContext::power(int k) const {
  if (k < 0 || k > working_exp()) {
    throw Error(ErrorKind::PrecisionExhausted,
                "p^" + std::to_string(k) + " exceeds working exponent " + std::to_string(working_exp()));
  }
  return powers_[static_cast<std::size_t>(k)];
}

ContextPtr make_context(std::uint64_t p, int working_exp) {
  return std::make_shared<const PrimePowerContext>(p, working_exp);
}

// --- TrackedResidue -------------------------------------------------------

TrackedResidue::TrackedResidue(ContextPtr ctx, const Integer& value, int precision)
    : ctx_(std::move(ctx)), precision_(precision) {
  if (!ctx_) throw Error(ErrorKind::PreconditionViolated, "null context");
  if (precision < 0 || precision > ctx_->working_exp()) {
    throw Error(ErrorKind::PrecisionExhausted,
                "precision " + std::to_string(precision) + " outside [0, " +
                    std::to_string(ctx_->working_exp()) + "]");
  }
  mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), ctx_->power(precision).get_mpz_t());
}

TrackedResidue TrackedResidue::truncated(int precision) const {
  if (precision > precision_) {
    throw Error(ErrorKind::PrecisionExhausted,
                "cannot raise precision from " + std::to_string(precision_) + " to " + std::to_string(precision));
  }
  return TrackedResidue(ctx_, residue_, precision);
}

TrackedResidue TrackedResidue::times_p_power(int j) const {
  if (j < 0) throw Error(ErrorKind::PreconditionViolated, "negative p-power");
  const int target = std::min(precision_ + j, ctx_->working_exp());
  Integer pj;
  mpz_ui_pow_ui(pj.get_mpz_t(), ctx_->prime(), static_cast<unsigned long>(j));
  return TrackedResidue(ctx_, residue_ * pj, target);
}

bool TrackedResidue::is_unit() const {
  return precision_ >= 1 && mpz_divisible_p(residue_.get_mpz_t(), ctx_->prime_z().get_mpz_t()) == 0;
}

TrackedResidue TrackedResidue::inverse() const {
  if (!is_unit()) {
    throw Error(ErrorKind::NotInvertible, to_string() + " is not a unit mod " + std::to_string(prime()));
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), ctx_->power(precision_).get_mpz_t());
  return TrackedResidue(ctx_, inv, precision_);
}

TrackedResidue TrackedResidue::pow(unsigned long e) const {
  Integer out;
  mpz_powm_ui(out.get_mpz_t(), residue_.get_mpz_t(), e, ctx_->power(precision_).get_mpz_t());
  return TrackedResidue(ctx_, out, precision_);
}

TrackedResidue TrackedResidue::scaled(const ExactRational& c) const {
  return *this * reduce_rational(c, ctx_, precision_);
}

TrackedResidue TrackedResidue::operator-() const {
  return TrackedResidue(ctx_, -residue_, precision_);
}

void TrackedResidue::adopt_context(const TrackedResidue& other) {
  if (other.prime() != prime()) {
    throw Error(ErrorKind::MixedContext,
                "residues over p = " + std::to_string(prime()) + " and p = " + std::to_string(other.prime()));
  }
  if (other.ctx_->working_exp() > ctx_->working_exp()) ctx_ = other.ctx_;
}

TrackedResidue& TrackedResidue::operator+=(const TrackedResidue& rhs) {
  adopt_context(rhs);
  precision_ = std::min(precision_, rhs.precision_);
  residue_ += rhs.residue_;
  mpz_fdiv_r(residue_.get_mpz_t(), residue_.get_mpz_t(), ctx_->power(precision_).get_mpz_t());
  return *this;
}

TrackedResidue& TrackedResidue::operator-=(const TrackedResidue& rhs) {
  adopt_context(rhs);
  precision_ = std::min(precision_, rhs.precision_);
  residue_ -= rhs.residue_;
  mpz_fdiv_r(residue_.get_mpz_t(), residue_.get_mpz_t(), ctx_->power(precision_).get_mpz_t());
  return *this;
}

TrackedResidue& TrackedResidue::operator*=(const TrackedResidue& rhs) {
  adopt_context(rhs);
  precision_ = std::min(precision_, rhs.precision_);
  residue_ *= rhs.residue_;
  mpz_fdiv_r(residue_.get_mpz_t(), residue_.get_mpz_t(), ctx_->power(precision_).get_mpz_t());
  return *this;
}

TrackedResidue operator+(const TrackedResidue& a, const Integer& b) {
  return TrackedResidue(a.ctx_, a.residue_ + b, a.precision_);
}

TrackedResidue operator-(const TrackedResidue& a, const Integer& b) {
  return TrackedResidue(a.ctx_, a.residue_ - b, a.precision_);
}

TrackedResidue operator*(const TrackedResidue& a, const Integer& b) {
  return TrackedResidue(a.ctx_, a.residue_ * b, a.precision_);
}

std::string TrackedResidue::to_string() const {
  return residue_.get_str() + " mod " + std::to_string(prime()) + "^" + std::to_string(precision_);
}

bool agree_at(const TrackedResidue& a, const TrackedResidue& b, int k) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorKind::MixedContext, "comparing residues over different primes");
  }
  if (a.precision() < k || b.precision() < k) return false;
  return a.truncated(k).residue() == b.truncated(k).residue();
}

// --- free operations --------------------------------------------------------

TrackedResidue reduce_rational(const ExactRational& x, const ContextPtr& ctx, int precision) {
  if (x == 0) return TrackedResidue::zero(ctx, precision);
  if (ord_p(x, ctx->prime()).value() < 0) {
    throw Error(ErrorKind::NotPIntegral, x.get_str() + " has p = " + std::to_string(ctx->prime()) +
                                             " in its denominator");
  }
  const Integer& mod = ctx->power(precision);
  if (precision == 0) return TrackedResidue::zero(ctx, 0);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), mod.get_mpz_t());
  return TrackedResidue(ctx, Integer(x.get_num()) * inv, precision);
}

TrackedResidue divide_by_p(const TrackedResidue& x, int j) {
  if (j < 0) throw Error(ErrorKind::PreconditionViolated, "negative shift count");
  if (x.precision() < j) {
    throw Error(ErrorKind::PrecisionExhausted,
                "cannot divide a residue of precision " + std::to_string(x.precision()) + " by p^" +
                    std::to_string(j));
  }
  const Integer& pj = x.context().power(j);
  if (mpz_divisible_p(x.residue().get_mpz_t(), pj.get_mpz_t()) == 0) {
    throw Error(ErrorKind::NotDivisible,
                x.to_string() + " is not divisible by " + std::to_string(x.prime()) + "^" + std::to_string(j));
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.residue().get_mpz_t(), pj.get_mpz_t());
  return TrackedResidue(x.context_ptr(), q, x.precision() - j);
}

TrackedResidue forward_difference(std::span<const TrackedResidue> values, int order) {
  if (order < 0 || values.size() != static_cast<std::size_t>(order) + 1) {
    throw Error(ErrorKind::PreconditionViolated,
                "forward difference of order " + std::to_string(order) + " needs " +
                    std::to_string(order + 1) + " values, got " + std::to_string(values.size()));
  }
  TrackedResidue acc = values[0] * Integer(0);
  for (int v = 0; v <= order; ++v) {
    Integer c = binomial(static_cast<unsigned long>(order), static_cast<unsigned long>(v));
    if ((order - v) % 2 != 0) c = -c;
    acc += values[static_cast<std::size_t>(v)] * c;
  }
  return acc;
}

Integer pow_mod(const Integer& a, const Integer& e, const Integer& m) {
  if (e < 0) throw Error(ErrorKind::PreconditionViolated, "negative exponent");
  if (m <= 0) throw Error(ErrorKind::PreconditionViolated, "modulus must be positive");
  Integer out;
  mpz_powm(out.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return out;
}

TrackedResidue inv_mod(const Integer& a, const ContextPtr& ctx, int precision) {
  if (mpz_divisible_p(a.get_mpz_t(), ctx->prime_z().get_mpz_t()) != 0) {
    throw Error(ErrorKind::NotInvertible, a.get_str() + " is divisible by " + std::to_string(ctx->prime()));
  }
  Integer inv;
  if (precision == 0) return TrackedResidue::zero(ctx, 0);
  mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), ctx->power(precision).get_mpz_t());
  return TrackedResidue(ctx, inv, precision);
}

}  // namespace wilsonlab
