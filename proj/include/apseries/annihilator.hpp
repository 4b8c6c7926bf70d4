#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apseries/arith_sequence.hpp"
#include "apseries/exact_linalg.hpp"
#include "apseries/int_polynomial.hpp"

namespace aps {

// A nontrivial integer relation sum_i a_i(z) F(z)^i vanishing through z^verified_to,
// where F is the prefix series. The stacked coefficient vector is primitive.
struct AnnihilatorCandidate {
    unsigned order;                      // n >= 1, a_n nonzero
    std::vector<IntPolynomial> coeffs;   // a_0, ..., a_n
    unsigned degree_bound;               // d_max used by the search
    std::uint64_t truncation;            // T of the kernel system
    std::uint64_t verified_to;

    // Throws Errc::invalid_argument when all coefficients are zero; trims
    // leading zero polynomials and divides out the common integer content.
    AnnihilatorCandidate(std::vector<IntPolynomial> polys, unsigned degree_bound,
                         std::uint64_t truncation, std::uint64_t verified_to);
};

// Coefficients of z^0..z^T of F(z)^i where F = sum_{n>=1} c_n z^n.
std::vector<mpz_class> series_power_truncated(const ArithSequence& seq, unsigned power,
                                              std::uint64_t truncation);

// The exact linear system "coefficients of z^0..z^T of sum a_i F^i vanish" in
// the (n_max+1)(d_max+1) unknown integer coefficients; rows t = 0..T, columns
// ordered (i, j) = (0,0)..(0,d_max),(1,0),... Entry = [z^{t-j}] F^i.
IntMatrix annihilator_system(const ArithSequence& seq, std::uint64_t truncation, unsigned n_max,
                             unsigned d_max);

// Kernel search with re-verification at doubled truncation. Preconditions:
// (n_max+1)(d_max+1) <= T (otherwise the kernel is trivially nonempty) and
// seq.length >= 2T. Empty result = no relation at this scale.
std::optional<AnnihilatorCandidate> search_annihilator(const ArithSequence& seq,
                                                       std::uint64_t truncation, unsigned n_max,
                                                       unsigned d_max);

// True iff sum a_i F^i = 0 mod z^{T2+1} exactly.
bool verify_relation(const ArithSequence& seq, const AnnihilatorCandidate& cand,
                     std::uint64_t verify_truncation);

} // namespace aps
