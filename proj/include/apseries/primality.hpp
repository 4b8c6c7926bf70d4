#pragma once

#include <cstdint>
#include <vector>

namespace aps {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Smallest prime strictly greater than n (n + its successor must fit in 64 bits).
std::uint64_t next_prime_u64(std::uint64_t n);

// The first `count` primes: 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(std::size_t count);

// All primes <= limit by Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace aps
