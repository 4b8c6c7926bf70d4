#pragma once

#include <cstdint>

#include "apseries/arith_sequence.hpp"

namespace aps {

// Tuning knobs for the sieves. Below `segment_threshold` entries a linear
// smallest-prime-factor sieve runs in one pass; above it, [1, N] is split into
// `segment_size` blocks processed by `threads` workers (0 = hardware count).
// Output is deterministic regardless of schedule: segments write disjoint
// byte ranges of the packed payload.
struct SieveConfig {
    std::uint64_t segment_threshold = std::uint64_t(1) << 26;
    std::uint64_t segment_size = std::uint64_t(1) << 21;
    unsigned threads = 0;
};

// (lambda(1), ..., lambda(N)); lambda(n) = (-1)^Omega(n).
ArithSequence sieve_liouville(std::uint64_t n, const SieveConfig& config = {});

// (mu(1), ..., mu(N)); mu(n) = 0 unless n squarefree, else (-1)^omega(n).
ArithSequence sieve_mobius(std::uint64_t n, const SieveConfig& config = {});

// (f(1), ..., f(N)) for the completely multiplicative f induced by `assignment`.
ArithSequence sieve_cm(const PrimeAssignment& assignment, std::uint64_t n,
                       const SieveConfig& config = {});

// Independent trial-division oracle; no sieve tables. `source` must be
// Liouville or Moebius (use the assignment overload for CM).
int value_by_factorization(SourceKind source, std::uint64_t n);
int value_by_factorization(const PrimeAssignment& assignment, std::uint64_t n);

} // namespace aps
