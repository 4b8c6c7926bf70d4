#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace aps {

struct Congruence {
    mpz_class residue;
    mpz_class modulus;
};

// Unique x with 0 <= x < prod(moduli) satisfying every congruence. Moduli must
// be pairwise coprime and >= 1; otherwise Errc::invalid_argument (no
// consistency solving is attempted).
mpz_class crt_solve(const std::vector<Congruence>& congruences);

// One line of a zero-run certificate: prime_square = prime^2 divides start + index.
struct ZeroRunEntry {
    std::uint64_t prime;
    mpz_class prime_square;
    mpz_class residue;  // start mod prime_square, i.e. -index mod prime^2
};

// Proof object for mu(start+1) = ... = mu(start+length) = 0: the i-th entry
// pins p_i^2 | start + i. start is the canonical least solution of the system.
struct ZeroRunCertificate {
    mpz_class start;
    std::uint64_t length;
    std::vector<ZeroRunEntry> entries;
};

// Builds the certificate from the first L primes: start = -i (mod p_i^2).
ZeroRunCertificate crt_zero_run(std::uint64_t length);

// True iff every divisibility p_i^2 | start+i holds AND mu(start+i) = 0 by
// independent factorization (double verification).
bool verify_zero_run(const ZeroRunCertificate& cert);

// Moebius value of an arbitrary positive integer by trial division; bails out
// to 0 as soon as a squared prime factor appears.
int moebius_of(const mpz_class& n);

} // namespace aps
