#pragma once

#include <cstdint>
#include <optional>

#include "apseries/arith_sequence.hpp"

namespace aps {

// "Periodic after the M-th term with period k": values[i] = values[i+k] for all i > M.
struct PeriodClaim {
    std::uint64_t preperiod = 0;  // M >= 0
    std::uint64_t period = 1;     // k >= 1

    bool operator==(const PeriodClaim&) const = default;
};

// Counterexample to a PeriodClaim for a completely multiplicative function
// with f(p) = -1: a = n*k and b = p*n*k satisfy a = b (mod k), a,b > M, and
// f(b) = -f(a).
struct PeriodWitness {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    std::uint64_t a = 0;  // n*k
    std::uint64_t b = 0;  // p*n*k
    PeriodClaim claim;
};

// Smallest-k claim (ties by smallest M) with values[i] = values[i+k] for all
// M < i <= N-k, restricted to M <= m_max, k <= k_max; nullopt if none.
// A returned claim is a statement about the prefix only.
// Requires seq.length >= m_max + 2*k_max so every candidate period is checked
// against at least one full repetition.
std::optional<PeriodClaim> detect_eventual_period(const ArithSequence& seq, std::uint64_t m_max,
                                                  std::uint64_t k_max);

// The explicit refutation: smallest prime p with f(p) = -1 and smallest n with
// n*k > M. Throws Errc::no_negative_prime for the all-+1 assignment.
PeriodWitness refute_period_cm(const PrimeAssignment& assignment, const PeriodClaim& claim);

// True iff all witness invariants hold against the concrete sequence values:
// a,b > M, a = b (mod k), values[a] nonzero and values[b] = -values[a].
// Throws Errc::out_of_range when b exceeds the prefix.
bool verify_witness(const ArithSequence& seq, const PeriodWitness& w);

} // namespace aps
