#include "apseries/zero_runs.hpp"

#include "apseries/errors.hpp"
#include "apseries/primality.hpp"

namespace aps {

mpz_class crt_solve(const std::vector<Congruence>& congruences) {
    mpz_class x = 0;
    mpz_class modulus = 1;
    for (const auto& c : congruences) {
        if (c.modulus < 1) throw Error(Errc::invalid_argument, "modulus must be >= 1");
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), c.modulus.get_mpz_t());
        if (g != 1) throw Error(Errc::invalid_argument, "moduli are not pairwise coprime");

        // x' = x + modulus * t with t = (r - x) / modulus  (mod c.modulus)
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), c.modulus.get_mpz_t()) == 0)
            throw Error(Errc::invalid_argument, "moduli are not pairwise coprime");
        mpz_class t = ((c.residue - x) * inv) % c.modulus;
        if (t < 0) t += c.modulus;
        x += modulus * t;
        modulus *= c.modulus;
    }
    x %= modulus;
    if (x < 0) x += modulus;
    return x;
}

ZeroRunCertificate crt_zero_run(std::uint64_t length) {
    if (length < 1) throw Error(Errc::invalid_argument, "run length must be >= 1");
    auto primes = first_primes(static_cast<std::size_t>(length));

    ZeroRunCertificate cert;
    cert.length = length;
    std::vector<Congruence> system;
    system.reserve(primes.size());
    for (std::uint64_t i = 1; i <= length; ++i) {
        std::uint64_t p = primes[static_cast<std::size_t>(i - 1)];
        mpz_class p2 = mpz_class(p) * p;
        mpz_class residue = (p2 - i % p2) % p2;  // -i mod p^2
        system.push_back({residue, p2});
        cert.entries.push_back({p, std::move(p2), std::move(residue)});
    }
    cert.start = crt_solve(system);
    return cert;
}

int moebius_of(const mpz_class& n) {
    if (n < 1) throw Error(Errc::invalid_argument, "moebius_of needs n >= 1");
    mpz_class m = n;
    unsigned distinct = 0;
    for (mpz_class d = 2; d * d <= m; ++d) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
            if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) return 0;
            ++distinct;
        }
    }
    if (m > 1) ++distinct;
    return (distinct & 1) ? -1 : 1;
}

bool verify_zero_run(const ZeroRunCertificate& cert) {
    if (cert.length < 1 || cert.entries.size() != cert.length || cert.start < 0) return false;
    for (std::uint64_t i = 1; i <= cert.length; ++i) {
        const auto& e = cert.entries[static_cast<std::size_t>(i - 1)];
        if (!is_prime_u64(e.prime)) return false;
        if (e.prime_square != mpz_class(e.prime) * e.prime) return false;
        mpz_class v = cert.start + i;
        if (!mpz_divisible_p(v.get_mpz_t(), e.prime_square.get_mpz_t())) return false;
        if (moebius_of(v) != 0) return false;
    }
    return true;
}

} // namespace aps
