#include "apseries/annihilator.hpp"

namespace aps {

AnnihilatorCandidate::AnnihilatorCandidate(std::vector<IntPolynomial> polys, unsigned degree_bound_,
                                           std::uint64_t truncation_, std::uint64_t verified_to_)
    : order(0), coeffs(std::move(polys)), degree_bound(degree_bound_), truncation(truncation_),
      verified_to(verified_to_) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2)
        throw Error(Errc::invalid_argument,
                    "annihilator candidate must have order >= 1 and not all zero coefficients");
    order = static_cast<unsigned>(coeffs.size() - 1);

    mpz_class g = 0;
    for (const auto& a : coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.content().get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& a : coeffs) a = a.divided_by(g);
}

std::vector<mpz_class> series_power_truncated(const ArithSequence& seq, unsigned power,
                                              std::uint64_t truncation) {
    if (truncation > seq.length())
        throw Error(Errc::invalid_argument, "truncation beyond prefix length");
    const std::size_t len = static_cast<std::size_t>(truncation) + 1;
    std::vector<mpz_class> acc(len, 0);
    acc[0] = 1;
    for (unsigned e = 0; e < power; ++e) {
        // acc <- acc * F, truncated. F has no constant term, so convolve in
        // place from the top.
        for (std::size_t t = len; t-- > 0;) {
            mpz_class v = 0;
            for (std::size_t s = 1; s <= t; ++s) {
                int c = seq[s];
                if (c == 1)
                    v += acc[t - s];
                else if (c == -1)
                    v -= acc[t - s];
            }
            acc[t] = std::move(v);
        }
    }
    return acc;
}

IntMatrix annihilator_system(const ArithSequence& seq, std::uint64_t truncation, unsigned n_max,
                             unsigned d_max) {
    const std::size_t rows = static_cast<std::size_t>(truncation) + 1;
    const std::size_t cols = static_cast<std::size_t>(n_max + 1) * (d_max + 1);
    IntMatrix a(rows, std::vector<mpz_class>(cols, 0));
    for (unsigned i = 0; i <= n_max; ++i) {
        auto fi = series_power_truncated(seq, i, truncation);
        for (unsigned j = 0; j <= d_max; ++j) {
            std::size_t col = static_cast<std::size_t>(i) * (d_max + 1) + j;
            for (std::size_t t = j; t < rows; ++t) a[t][col] = fi[t - j];
        }
    }
    return a;
}

std::optional<AnnihilatorCandidate> search_annihilator(const ArithSequence& seq,
                                                       std::uint64_t truncation, unsigned n_max,
                                                       unsigned d_max) {
    if (n_max < 1) throw Error(Errc::invalid_argument, "order bound must be >= 1");
    const std::uint64_t unknowns = std::uint64_t(n_max + 1) * (d_max + 1);
    if (unknowns > truncation)
        throw Error(Errc::invalid_argument,
                    "vacuous configuration: more unknowns than constrained coefficients");
    if (seq.length() < 2 * truncation)
        throw Error(Errc::invalid_argument, "prefix shorter than doubled truncation");

    auto system = annihilator_system(seq, truncation, n_max, d_max);
    auto basis = integer_kernel_basis(system, static_cast<std::size_t>(unknowns));
    if (basis.empty()) return std::nullopt;

    const auto& v = basis.front();
    std::vector<IntPolynomial> polys;
    polys.reserve(n_max + 1);
    for (unsigned i = 0; i <= n_max; ++i) {
        std::vector<mpz_class> c(v.begin() + static_cast<std::ptrdiff_t>(i) * (d_max + 1),
                                 v.begin() + static_cast<std::ptrdiff_t>(i + 1) * (d_max + 1));
        polys.emplace_back(std::move(c));
    }
    AnnihilatorCandidate cand(std::move(polys), d_max, truncation, truncation);
    if (!verify_relation(seq, cand, 2 * truncation)) return std::nullopt;
    cand.verified_to = 2 * truncation;
    return cand;
}

bool verify_relation(const ArithSequence& seq, const AnnihilatorCandidate& cand,
                     std::uint64_t verify_truncation) {
    if (verify_truncation > seq.length())
        throw Error(Errc::invalid_argument, "verification truncation beyond prefix length");
    const std::size_t len = static_cast<std::size_t>(verify_truncation) + 1;
    std::vector<mpz_class> total(len, 0);
    for (unsigned i = 0; i < cand.coeffs.size(); ++i) {
        const auto& a = cand.coeffs[i];
        if (a.is_zero()) continue;
        auto fi = series_power_truncated(seq, i, verify_truncation);
        for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
            if (a.coeff(j) == 0) continue;
            for (std::size_t t = j; t < len; ++t) total[t] += a.coeff(j) * fi[t - j];
        }
    }
    for (const auto& v : total)
        if (v != 0) return false;
    return true;
}

} // namespace aps
