#pragma once

#include <cstdint>
#include <vector>

namespace lcseq::nt {

/// Floor of the integer square root.
uint64_t isqrt(uint64_t n);

/// Trial-division primality test; adequate for the 64-bit desk scale here.
bool is_prime(uint64_t n);

/// Prime factorization by trial division, (prime, exponent) pairs in
/// ascending prime order. n must be >= 1; n == 1 yields an empty list.
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);

/// Euler totient from the trial-division factorization.
uint64_t totient(uint64_t n);

} // namespace lcseq::nt
