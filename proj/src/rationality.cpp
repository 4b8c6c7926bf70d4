#include "apseries/rationality.hpp"

namespace aps {

Classification classify_prefix(const ArithSequence& seq, std::uint64_t m_max, std::uint64_t k_max) {
    auto claim = detect_eventual_period(seq, m_max, k_max);
    if (!claim) return NonPeriodicAtScale{m_max, k_max};
    return RationalCandidate{*claim, reconstruct_rational(seq, *claim)};
}

RationalForm reconstruct_rational(const ArithSequence& seq, const PeriodClaim& claim) {
    const std::uint64_t n = seq.length();
    const std::uint64_t m = claim.preperiod;
    const std::uint64_t k = claim.period;
    if (k < 1 || m + k > n)
        throw Error(Errc::invalid_claim, "claim does not fit inside the prefix");
    for (std::uint64_t i = m + 1; i + k <= n; ++i)
        if (seq[i] != seq[i + k]) throw Error(Errc::invalid_claim, "claim fails re-verification");

    std::vector<mpz_class> head(static_cast<std::size_t>(m) + 1, 0);  // sum_{n<=M} c_n z^n
    for (std::uint64_t i = 1; i <= m; ++i) head[static_cast<std::size_t>(i)] = seq[i];
    std::vector<mpz_class> cycle(static_cast<std::size_t>(k) + 1, 0);  // sum_{j=1..k} c_{M+j} z^j
    for (std::uint64_t j = 1; j <= k; ++j) cycle[static_cast<std::size_t>(j)] = seq[m + j];

    std::vector<mpz_class> q_coeffs(static_cast<std::size_t>(k) + 1, 0);
    q_coeffs[0] = 1;
    q_coeffs[static_cast<std::size_t>(k)] = -1;
    IntPolynomial q(std::move(q_coeffs));
    IntPolynomial p = q * IntPolynomial(std::move(head)) +
                      IntPolynomial::monomial(static_cast<std::size_t>(m)) * IntPolynomial(std::move(cycle));

    // Common integer content only; no polynomial-gcd reduction.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.content().get_mpz_t(), q.content().get_mpz_t());
    if (g > 1) {
        p = p.divided_by(g);
        q = q.divided_by(g);
    }
    return RationalForm{std::move(p), std::move(q)};
}

std::vector<mpz_class> expand_rational(const RationalForm& form, std::uint64_t count) {
    if (form.q.is_zero() || form.q.coeff(0) != 1)
        throw Error(Errc::invalid_argument, "denominator must have Q(0) = 1");
    const std::size_t dq = static_cast<std::size_t>(form.q.degree());
    std::vector<mpz_class> c(static_cast<std::size_t>(count) + 1, 0);
    c[0] = form.p.coeff(0);
    for (std::uint64_t t = 1; t <= count; ++t) {
        mpz_class v = form.p.coeff(static_cast<std::size_t>(t));
        for (std::size_t s = 1; s <= dq && s <= t; ++s)
            v -= form.q.coeff(s) * c[static_cast<std::size_t>(t - s)];
        c[static_cast<std::size_t>(t)] = std::move(v);
    }
    c.erase(c.begin());
    return c;
}

IntMatrix hankel_matrix(const ArithSequence& seq, std::uint64_t order) {
    if (order < 1) throw Error(Errc::invalid_argument, "Hankel order must be >= 1");
    if (seq.length() < 2 * order - 1)
        throw Error(Errc::invalid_argument, "prefix too short for requested Hankel order");
    IntMatrix h(static_cast<std::size_t>(order), std::vector<mpz_class>(static_cast<std::size_t>(order)));
    for (std::uint64_t i = 1; i <= order; ++i)
        for (std::uint64_t j = 1; j <= order; ++j)
            h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = seq[i + j - 1];
    return h;
}

std::vector<mpz_class> hankel_rank_profile(const ArithSequence& seq, std::uint64_t max_order) {
    if (max_order < 1) throw Error(Errc::invalid_argument, "max_order must be >= 1");
    if (seq.length() < 2 * max_order - 1)
        throw Error(Errc::invalid_argument, "prefix too short for requested Hankel order");
    std::vector<mpz_class> dets;
    dets.reserve(static_cast<std::size_t>(max_order));
    for (std::uint64_t m = 1; m <= max_order; ++m)
        dets.push_back(bareiss_determinant(hankel_matrix(seq, m)));
    return dets;
}

} // namespace aps
