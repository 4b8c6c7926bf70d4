#include "apseries/periodicity.hpp"

namespace aps {

std::optional<PeriodClaim> detect_eventual_period(const ArithSequence& seq, std::uint64_t m_max,
                                                  std::uint64_t k_max) {
    if (m_max < 1 || k_max < 1) throw Error(Errc::invalid_argument, "bounds must be >= 1");
    const std::uint64_t n = seq.length();
    if (n < m_max + 2 * k_max)
        throw Error(Errc::invalid_argument,
                    "prefix too short for requested bounds (need length >= M_max + 2*k_max)");

    for (std::uint64_t k = 1; k <= k_max; ++k) {
        // The minimal preperiod for period k is the last mismatch index.
        // Scanning downward finds it first; anything above m_max kills k.
        std::uint64_t last_mismatch = 0;
        for (std::uint64_t i = n - k; i >= 1; --i) {
            if (seq[i] != seq[i + k]) {
                last_mismatch = i;
                break;
            }
        }
        if (last_mismatch <= m_max) return PeriodClaim{last_mismatch, k};
    }
    return std::nullopt;
}

PeriodWitness refute_period_cm(const PrimeAssignment& assignment, const PeriodClaim& claim) {
    if (claim.period < 1) throw Error(Errc::invalid_argument, "period must be >= 1");
    auto p = assignment.smallest_negative_prime();
    if (!p)
        throw Error(Errc::no_negative_prime,
                    "assignment has f(p) = +1 for all primes (excluded trivial function)");
    std::uint64_t n = claim.preperiod / claim.period + 1;  // smallest n with n*k > M
    std::uint64_t a = n * claim.period;
    return PeriodWitness{*p, n, a, *p * a, claim};
}

bool verify_witness(const ArithSequence& seq, const PeriodWitness& w) {
    if (w.b > seq.length() || w.a > seq.length() || w.a < 1 || w.b < 1)
        throw Error(Errc::out_of_range, "witness index beyond prefix");
    if (w.claim.period < 1) return false;
    if (w.a <= w.claim.preperiod || w.b <= w.claim.preperiod) return false;
    if ((w.b % w.claim.period) != (w.a % w.claim.period)) return false;
    int va = seq[w.a];
    int vb = seq[w.b];
    return va != 0 && vb == -va;
}

} // namespace aps
