#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "apseries/arith_sequence.hpp"
#include "apseries/exact_linalg.hpp"
#include "apseries/int_polynomial.hpp"
#include "apseries/periodicity.hpp"

namespace aps {

// P/Q with Q(0) = 1 whose power-series expansion reproduces the prefix that
// produced it (expansion by the exact linear recurrence induced by Q).
struct RationalForm {
    IntPolynomial p;
    IntPolynomial q;
};

struct RationalCandidate {
    PeriodClaim claim;
    RationalForm form;
};

// The honest negative verdict: no (M, k) within the scanned bounds. Never a
// transcendence claim; the dichotomy's other branch is named, not decided.
struct NonPeriodicAtScale {
    std::uint64_t m_max = 0;
    std::uint64_t k_max = 0;
};

using Classification = std::variant<RationalCandidate, NonPeriodicAtScale>;

Classification classify_prefix(const ArithSequence& seq, std::uint64_t m_max, std::uint64_t k_max);

// Constructive content of the rational branch:
//   P(z) = (1 - z^k) * sum_{n<=M} c_n z^n  +  z^M * sum_{j=1..k} c_{M+j} z^j,
//   Q(z) = 1 - z^k,
// then both divided by their common integer content. The claim is re-verified
// against the full prefix; failure is Errc::invalid_claim.
RationalForm reconstruct_rational(const ArithSequence& seq, const PeriodClaim& claim);

// First `count` series coefficients c_1..c_count of P/Q via the recurrence
// c_t = p_t - sum_{s>=1} q_s c_{t-s}; requires Q(0) = 1.
std::vector<mpz_class> expand_rational(const RationalForm& form, std::uint64_t count);

// Exact determinants of the Hankel matrices H_m = (c_{i+j-1}), m = 1..max_order.
// Requires seq.length >= 2*max_order - 1.
std::vector<mpz_class> hankel_rank_profile(const ArithSequence& seq, std::uint64_t max_order);

// The m-th Hankel matrix itself (entries c_{i+j-1}); shared by the exact and
// modular determinant routes.
IntMatrix hankel_matrix(const ArithSequence& seq, std::uint64_t order);

} // namespace aps
