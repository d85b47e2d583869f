#include "wilsonlab/kernels.hpp"

#include "wilsonlab/error.hpp"

namespace wilsonlab::kernels {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Modulus below 2^32: products fit in 64 bits.
struct NarrowMod {
  u64 m;
  u64 mul(u64 a, u64 b) const { return a * b % m; }
  u64 add(u64 a, u64 b) const { return (a + b) % m; }
};

// Modulus below 2^63: products go through 128 bits, sums cannot overflow.
struct WideMod {
  u64 m;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % m); }
  u64 add(u64 a, u64 b) const { return (a + b) % m; }
};

template <class Mod>
u64 powm(const Mod& mod, u64 base, u64 e) {
  u64 result = 1 % mod.m;
  base %= mod.m;
  while (e > 0) {
    if (e & 1) result = mod.mul(result, base);
    base = mod.mul(base, base);
    e >>= 1;
  }
  return result;
}

enum class Width { Narrow, Wide, Big };

Width width_for(const Integer& modulus) {
  if (modulus <= 0) throw Error(ErrorKind::PreconditionViolated, "modulus must be positive");
  if (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 32) return Width::Narrow;
  if (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 63) return Width::Wide;
  return Width::Big;
}

u64 to_u64(const Integer& x) { return static_cast<u64>(mpz_get_ui(x.get_mpz_t())); }

template <class Mod>
std::vector<Integer> progression_words(const Mod& mod, u64 p, u64 first, u64 step, std::size_t count) {
  std::vector<u64> sums(count, 0);
  for (u64 a = 1; a < p; ++a) {
    u64 x = powm(mod, a, first);
    const u64 stride = powm(mod, a, step);
    for (std::size_t j = 0; j < count; ++j) {
      sums[j] = mod.add(sums[j], x);
      x = mod.mul(x, stride);
    }
  }
  return {sums.begin(), sums.end()};
}

std::vector<Integer> progression_big(const Integer& m, u64 p, u64 first, u64 step, std::size_t count) {
  std::vector<Integer> sums(count, Integer(0));
  Integer x, stride, base;
  for (u64 a = 1; a < p; ++a) {
    base = static_cast<unsigned long>(a);
    mpz_powm_ui(x.get_mpz_t(), base.get_mpz_t(), first, m.get_mpz_t());
    mpz_powm_ui(stride.get_mpz_t(), base.get_mpz_t(), step, m.get_mpz_t());
    for (std::size_t j = 0; j < count; ++j) {
      sums[j] += x;
      x *= stride;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
  }
  for (auto& s : sums) mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
  return sums;
}

template <class Mod>
std::vector<Integer> fermat_words(const Mod& lifted, u64 p, u64 pr, int max_n) {
  const WideMod mod{pr};
  std::vector<u64> sums(static_cast<std::size_t>(max_n), 0);
  for (u64 a = 1; a < p; ++a) {
    const u64 x = powm(lifted, a, p - 1);
    const u64 q = (x + lifted.m - 1) % lifted.m / p;  // x = 1 mod p
    u64 qn = q % pr;
    for (int n = 0; n < max_n; ++n) {
      sums[static_cast<std::size_t>(n)] = mod.add(sums[static_cast<std::size_t>(n)], qn);
      qn = mod.mul(qn, q);
    }
  }
  return {sums.begin(), sums.end()};
}

}  // namespace

std::vector<Integer> power_sums_progression(u64 p, const Integer& modulus, u64 first, u64 step,
                                            std::size_t count) {
  switch (width_for(modulus)) {
    case Width::Narrow: return progression_words(NarrowMod{to_u64(modulus)}, p, first, step, count);
    case Width::Wide: return progression_words(WideMod{to_u64(modulus)}, p, first, step, count);
    case Width::Big: return progression_big(modulus, p, first, step, count);
  }
  return {};
}

Integer factorial_mod(u64 p, const Integer& modulus) {
  switch (width_for(modulus)) {
    case Width::Narrow:
    case Width::Wide: {
      const WideMod mod{to_u64(modulus)};
      u64 acc = 1 % mod.m;
      for (u64 a = 2; a < p; ++a) acc = mod.mul(acc, a);
      return Integer(static_cast<unsigned long>(acc));
    }
    case Width::Big: {
      Integer acc(1);
      for (u64 a = 2; a < p; ++a) {
        acc *= static_cast<unsigned long>(a);
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
      }
      return acc;
    }
  }
  return Integer(0);
}

std::vector<Integer> fermat_quotient_power_sums(u64 p, int r, int max_n) {
  if (r < 1 || max_n < 1) throw Error(ErrorKind::PreconditionViolated, "need r >= 1 and n >= 1");
  Integer pr, lifted;
  mpz_ui_pow_ui(pr.get_mpz_t(), p, static_cast<unsigned long>(r));
  lifted = pr * static_cast<unsigned long>(p);
  switch (width_for(lifted)) {
    case Width::Narrow: return fermat_words(NarrowMod{to_u64(lifted)}, p, to_u64(pr), max_n);
    case Width::Wide: return fermat_words(WideMod{to_u64(lifted)}, p, to_u64(pr), max_n);
    case Width::Big: break;
  }
  std::vector<Integer> sums(static_cast<std::size_t>(max_n), Integer(0));
  Integer x, q, qn, base;
  const Integer pexp(static_cast<unsigned long>(p - 1));
  for (u64 a = 1; a < p; ++a) {
    base = static_cast<unsigned long>(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), pexp.get_mpz_t(), lifted.get_mpz_t());
    q = x - 1;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    qn = q;
    for (auto& s : sums) {
      s += qn;
      qn *= q;
      mpz_mod(qn.get_mpz_t(), qn.get_mpz_t(), pr.get_mpz_t());
    }
  }
  for (auto& s : sums) mpz_mod(s.get_mpz_t(), s.get_mpz_t(), pr.get_mpz_t());
  return sums;
}

}  // namespace wilsonlab::kernels
