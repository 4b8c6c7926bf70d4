#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace aps {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Exact determinant by fraction-free single-step Bareiss elimination with row
// pivoting. Returns 0 as soon as a column has no usable pivot.
mpz_class bareiss_determinant(IntMatrix m);

// Determinant of m reduced modulo an odd prime p < 2^63.
std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t p);

// Rank of m modulo p (matrix need not be square).
std::size_t rank_mod(const IntMatrix& m, std::uint64_t p);

// Kernel basis of m (rows = constraints) as primitive integer vectors, one per
// free column of the reduced row echelon form over Q, in column order. Each
// vector is normalized so its last nonzero entry is positive.
std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMatrix& m, std::size_t ncols);

// Exact kernel dimension over Q.
std::size_t kernel_dimension(const IntMatrix& m, std::size_t ncols);

// Deterministic pseudo-random prime with the given bit size (used by the
// modular cross-checks; same seed, same prime).
std::uint64_t random_prime_with_bits(unsigned bits, std::uint64_t seed);

} // namespace aps
