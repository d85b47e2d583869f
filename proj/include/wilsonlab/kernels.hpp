#pragma once

// O(p) loops over the unit residues 1..p-1. Each picks the narrowest word
// that holds products of residues (64-bit below 2^32, 128-bit below 2^63)
// and falls back to GMP above that.

#include <cstdint>
#include <vector>

#include "wilsonlab/padic.hpp"

namespace wilsonlab::kernels {

/// S_e(p) mod `modulus` for e = first, first + step, ..., (count terms),
/// where S_e(p) = sum_{a=1}^{p-1} a^e (so S_0(p) = p - 1).
std::vector<Integer> power_sums_progression(std::uint64_t p, const Integer& modulus, std::uint64_t first,
                                            std::uint64_t step, std::size_t count);

/// (p-1)! mod `modulus`.
Integer factorial_mod(std::uint64_t p, const Integer& modulus);

/// Q_p(n) mod p^r for n = 1..max_n, from q_p(a) = (a^(p-1) - 1)/p
/// computed modulo p^(r+1).
std::vector<Integer> fermat_quotient_power_sums(std::uint64_t p, int r, int max_n);

}  // namespace wilsonlab::kernels
