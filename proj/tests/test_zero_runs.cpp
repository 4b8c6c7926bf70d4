#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apseries/sieves.hpp"
#include "apseries/zero_runs.hpp"

using namespace aps;

namespace {

// Brute-force CRT oracle: scan upward for the least solution.
mpz_class scan_solution(const std::vector<Congruence>& system) {
    mpz_class modulus = 1;
    for (const auto& c : system) modulus *= c.modulus;
    for (mpz_class x = 0; x < modulus; ++x) {
        bool ok = true;
        for (const auto& c : system)
            if ((x - c.residue) % c.modulus != 0) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return -1;
}

} // namespace

TEST_CASE("crt examples") {
    CHECK(crt_solve({{1, 2}, {2, 3}}) == 5);
    CHECK(crt_solve({{4, 9}}) == 4);
    CHECK_THROWS_AS(crt_solve({{0, 4}, {0, 6}}), Error);  // gcd = 2
    CHECK(crt_solve({{0, 1}, {3, 7}}) == 3);              // modulus 1 is vacuous
    CHECK_THROWS_AS(crt_solve({{0, 0}}), Error);
    CHECK(crt_solve({}) == 0);
}

TEST_CASE("crt agrees with brute-force scanning") {
    std::mt19937_64 rng(1618);
    const std::uint64_t moduli_pool[] = {2, 3, 5, 7, 11, 13, 4, 9, 25, 8, 27};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(moduli_pool) - 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Congruence> system;
        mpz_class prod = 1;
        while (system.size() < 3) {
            mpz_class m = moduli_pool[pick(rng)];
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), prod.get_mpz_t(), m.get_mpz_t());
            if (g != 1) continue;
            mpz_class r = rng() % m.get_ui();
            system.push_back({r, m});
            prod *= m;
        }
        auto fast = crt_solve(system);
        auto slow = scan_solution(system);
        CAPTURE(trial);
        REQUIRE(fast == slow);
        REQUIRE(fast >= 0);
        REQUIRE(fast < prod);
    }
}

TEST_CASE("zero-run certificates for small lengths") {
    auto c1 = crt_zero_run(1);
    CHECK(c1.start == 3);  // 4 | 4, mu(4) = 0
    CHECK(verify_zero_run(c1));

    auto c2 = crt_zero_run(2);
    CHECK(c2.start == 7);  // 4 | 8, 9 | 9
    CHECK(verify_zero_run(c2));

    auto c3 = crt_zero_run(3);
    CHECK(c3.start == 547);  // 4 | 548, 9 | 549, 25 | 550
    CHECK(c3.entries.size() == 3);
    CHECK(c3.entries[2].prime == 5);
    CHECK(c3.entries[2].prime_square == 25);
    CHECK(verify_zero_run(c3));

    CHECK_THROWS_AS(crt_zero_run(0), Error);
}

TEST_CASE("certificates verify through length 8 and start canonically") {
    for (std::uint64_t len = 1; len <= 8; ++len) {
        auto cert = crt_zero_run(len);
        CAPTURE(len);
        REQUIRE(verify_zero_run(cert));
        mpz_class prod = 1;
        for (const auto& e : cert.entries) prod *= e.prime_square;
        REQUIRE(cert.start >= 0);
        REQUIRE(cert.start < prod);
    }

    // Canonicity cross-check for L <= 3: the scan oracle finds the same least
    // solution.
    for (std::uint64_t len = 1; len <= 3; ++len) {
        auto cert = crt_zero_run(len);
        std::vector<Congruence> system;
        for (const auto& e : cert.entries) system.push_back({e.residue, e.prime_square});
        REQUIRE(scan_solution(system) == cert.start);
    }
}

TEST_CASE("tampered certificates fail verification") {
    auto cert = crt_zero_run(3);
    cert.start += 1;  // 4 does not divide 549
    CHECK(!verify_zero_run(cert));

    auto cert2 = crt_zero_run(2);
    cert2.entries[0].prime = 4;  // not prime
    CHECK(!verify_zero_run(cert2));

    auto cert3 = crt_zero_run(2);
    cert3.entries[1].prime_square = 10;  // not the square of the prime
    CHECK(!verify_zero_run(cert3));
}

TEST_CASE("crt start is not the minimal zero run") {
    // The least run of 3 consecutive non-squarefree integers starts at 48,
    // well below the certificate's 548; certificates only certify their own
    // congruence system.
    auto mu = sieve_mobius(600);
    CHECK(mu[48] == 0);
    CHECK(mu[49] == 0);
    CHECK(mu[50] == 0);
    std::uint64_t first = 0;
    for (std::uint64_t n = 1; n + 2 <= 600 && first == 0; ++n)
        if (mu[n] == 0 && mu[n + 1] == 0 && mu[n + 2] == 0) first = n;
    CHECK(first == 48);
    auto cert = crt_zero_run(3);
    CHECK(cert.start + 1 == 548);
}

TEST_CASE("independent moebius factorization matches the sieve") {
    auto mu = sieve_mobius(500);
    for (std::uint64_t n = 1; n <= 500; ++n) REQUIRE(moebius_of(mpz_class(n)) == mu[n]);
    CHECK_THROWS_AS(moebius_of(mpz_class(0)), Error);
}
