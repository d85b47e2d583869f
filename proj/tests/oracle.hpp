#pragma once

// Slow reference values built straight from the definitions, sharing no code
// with the library beyond the GMP number types.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

inline mpz_class factorial(std::uint64_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline mpz_class pow_z(const mpz_class& a, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline mpz_class pow_p(std::uint64_t p, unsigned long e) { return pow_z(mpz_class(static_cast<unsigned long>(p)), e); }

inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

/// x mod m for a rational x whose denominator is prime to m.
inline mpz_class reduce(const mpq_class& x, const mpz_class& m) {
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t());
  return mod(x.get_num() * inv, m);
}

/// ((p-1)! + 1) / p, exactly.
inline mpz_class wilson_quotient(std::uint64_t p) { return (factorial(p - 1) + 1) / static_cast<unsigned long>(p); }

inline mpz_class fermat_quotient(std::uint64_t a, std::uint64_t p) {
  return (pow_z(mpz_class(static_cast<unsigned long>(a)), p - 1) - 1) / static_cast<unsigned long>(p);
}

/// sum_{a=1}^{p-1} q_p(a)^n, exactly.
inline mpz_class q_sum(std::uint64_t p, unsigned n) {
  mpz_class s = 0;
  for (std::uint64_t a = 1; a < p; ++a) s += pow_z(fermat_quotient(a, p), n);
  return s;
}

/// 1^n + ... + (m-1)^n, with the empty-power convention S_0(m) = m - 1.
inline mpz_class power_sum(unsigned n, std::uint64_t m) {
  mpz_class s = 0;
  for (std::uint64_t a = 1; a < m; ++a) s += pow_z(mpz_class(static_cast<unsigned long>(a)), n);
  return s;
}

/// B_0..B_N by the Akiyama-Tanigawa transform, sign of B_1 flipped to -1/2.
inline std::vector<mpq_class> bernoulli(std::size_t N) {
  std::vector<mpq_class> out(N + 1), a(N + 1);
  for (std::size_t m = 0; m <= N; ++m) {
    a[m] = mpq_class(1, static_cast<unsigned long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = static_cast<long>(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out[m] = a[0];
  }
  if (N >= 1) out[1] = -out[1];
  return out;
}

inline long ord(mpz_class x, std::uint64_t p) {
  if (x == 0) return 1L << 40;
  long v = 0;
  while (x % static_cast<unsigned long>(p) == 0) {
    x /= static_cast<unsigned long>(p);
    ++v;
  }
  return v;
}

inline long ord(const mpq_class& x, std::uint64_t p) {
  if (x == 0) return 1L << 40;
  return ord(x.get_num(), p) - ord(x.get_den(), p);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace oracle
