#include "wilsonlab/primes.hpp"

#include <algorithm>
#include <array>

#include "wilsonlab/error.hpp"

namespace wilsonlab {

namespace {

constexpr std::uint64_t kTrialLimit = 1u << 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool miller_rabin(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 3.3e24, which covers all of uint64.
  constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : kWitnesses) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n && q < kTrialLimit; ++q) {
    if (n % q == 0) return n == q;
  }
  if (n < kTrialLimit * kTrialLimit) return true;
  return miller_rabin(n);
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  if (hi > (std::uint64_t{1} << 32)) {
    throw Error(ErrorKind::PreconditionViolated, "prime range upper bound too large for sieving");
  }
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw Error(ErrorKind::PreconditionViolated, "digit_sum base must be >= 2");
  std::uint64_t s = 0;
  while (n > 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

}  // namespace wilsonlab
