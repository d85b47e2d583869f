#pragma once

#include <cstdint>
#include <vector>

namespace wilsonlab {

/// Deterministic for every 64-bit input: trial division below 2^16, then
/// Miller-Rabin with the first twelve prime bases.
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

}  // namespace wilsonlab
