#include "apseries/sieves.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <thread>
#include <vector>

#include "apseries/primality.hpp"

namespace aps {

namespace {

enum class Func { Lambda, Mu, Cm };

// One-pass linear sieve. val[i*p] is derived from val[i] and the smallest
// prime factor p, so each composite is touched exactly once.
std::vector<std::uint8_t> linear_sieve(Func func, const PrimeAssignment* assignment,
                                       std::uint64_t n) {
    std::vector<std::uint32_t> lpf(static_cast<std::size_t>(n) + 1, 0);
    std::vector<signed char> val(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint32_t> primes;
    val[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (lpf[i] == 0) {
            lpf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            switch (func) {
                case Func::Lambda: val[i] = -1; break;
                case Func::Mu: val[i] = -1; break;
                case Func::Cm: val[i] = static_cast<signed char>(assignment->sign_at_prime(i)); break;
            }
        }
        for (std::uint32_t p : primes) {
            if (p > lpf[i] || i * p > n) break;
            std::uint64_t m = i * p;
            lpf[m] = p;
            switch (func) {
                case Func::Lambda: val[m] = static_cast<signed char>(-val[i]); break;
                case Func::Mu:
                    // p == lpf[i] means p^2 | m.
                    val[m] = (p == lpf[i]) ? 0 : static_cast<signed char>(-val[i]);
                    break;
                case Func::Cm:
                    val[m] = static_cast<signed char>(assignment->sign_at_prime(p) * val[i]);
                    break;
            }
        }
    }
    std::vector<std::uint8_t> packed(ArithSequence::packed_size(n), 0);
    pack_values(val.data() + 1, n, 1, packed);
    return packed;
}

// Factor every n in [lo, lo + count) over the base primes (<= sqrt(N)); the
// cofactor left after dividing them out is either 1 or a single prime > sqrt(N).
void sieve_segment(Func func, const PrimeAssignment* assignment,
                   const std::vector<std::uint64_t>& base_primes, std::uint64_t lo,
                   std::uint64_t count, std::vector<std::uint8_t>& packed) {
    std::vector<std::uint64_t> rem(static_cast<std::size_t>(count));
    std::vector<signed char> val(static_cast<std::size_t>(count), 1);
    for (std::uint64_t i = 0; i < count; ++i) rem[i] = lo + i;

    for (std::uint64_t p : base_primes) {
        if (p * p > lo + count - 1) break;
        std::uint64_t first = ((lo + p - 1) / p) * p;
        int sign_p;
        switch (func) {
            case Func::Lambda: sign_p = -1; break;
            case Func::Mu: sign_p = -1; break;
            case Func::Cm: sign_p = assignment->sign_at_prime(p); break;
        }
        for (std::uint64_t m = first; m < lo + count; m += p) {
            std::uint64_t idx = m - lo;
            unsigned exp = 0;
            while (rem[idx] % p == 0) {
                rem[idx] /= p;
                ++exp;
            }
            switch (func) {
                case Func::Lambda:
                    if (exp & 1) val[idx] = static_cast<signed char>(-val[idx]);
                    break;
                case Func::Mu:
                    if (exp >= 2)
                        val[idx] = 0;
                    else if (val[idx] != 0)
                        val[idx] = static_cast<signed char>(-val[idx]);
                    break;
                case Func::Cm:
                    if ((exp & 1) && sign_p == -1) val[idx] = static_cast<signed char>(-val[idx]);
                    break;
            }
        }
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        if (rem[i] > 1) {
            // Single leftover prime factor, exponent 1.
            switch (func) {
                case Func::Lambda: val[i] = static_cast<signed char>(-val[i]); break;
                case Func::Mu:
                    if (val[i] != 0) val[i] = static_cast<signed char>(-val[i]);
                    break;
                case Func::Cm:
                    if (assignment->sign_at_prime(rem[i]) == -1)
                        val[i] = static_cast<signed char>(-val[i]);
                    break;
            }
        }
    }
    pack_values(val.data(), count, lo, packed);
}

std::vector<std::uint8_t> segmented_sieve(Func func, const PrimeAssignment* assignment,
                                          std::uint64_t n, const SieveConfig& config) {
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= n) ++root;
    auto base_primes = primes_up_to(root);

    // Segment size is a multiple of 4 so every segment owns whole bytes.
    std::uint64_t seg = std::max<std::uint64_t>(4, config.segment_size & ~std::uint64_t(3));
    std::uint64_t num_segments = (n + seg - 1) / seg;
    std::vector<std::uint8_t> packed(ArithSequence::packed_size(n), 0);

    unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(num_segments)));

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t k = next.fetch_add(1);
            if (k >= num_segments) return;
            std::uint64_t lo = 1 + k * seg;
            std::uint64_t count = std::min(seg, n - lo + 1);
            sieve_segment(func, assignment, base_primes, lo, count, packed);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return packed;
}

std::vector<std::uint8_t> run_sieve(Func func, const PrimeAssignment* assignment, std::uint64_t n,
                                    const SieveConfig& config) {
    if (n < 1) throw Error(Errc::invalid_argument, "sieve length must be >= 1");
    if (n <= config.segment_threshold) return linear_sieve(func, assignment, n);
    return segmented_sieve(func, assignment, n, config);
}

} // namespace

ArithSequence sieve_liouville(std::uint64_t n, const SieveConfig& config) {
    return ArithSequence::from_packed(SourceKind::Liouville, run_sieve(Func::Lambda, nullptr, n, config), n);
}

ArithSequence sieve_mobius(std::uint64_t n, const SieveConfig& config) {
    return ArithSequence::from_packed(SourceKind::Moebius, run_sieve(Func::Mu, nullptr, n, config), n);
}

ArithSequence sieve_cm(const PrimeAssignment& assignment, std::uint64_t n,
                       const SieveConfig& config) {
    return ArithSequence::from_packed(SourceKind::CompletelyMultiplicative,
                                      run_sieve(Func::Cm, &assignment, n, config), n, assignment);
}

int value_by_factorization(SourceKind source, std::uint64_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "n must be >= 1");
    switch (source) {
        case SourceKind::Liouville: {
            unsigned omega = 0;  // with multiplicity
            std::uint64_t m = n;
            for (std::uint64_t d = 2; d * d <= m; ++d)
                while (m % d == 0) {
                    m /= d;
                    ++omega;
                }
            if (m > 1) ++omega;
            return (omega & 1) ? -1 : 1;
        }
        case SourceKind::Moebius: {
            unsigned distinct = 0;
            std::uint64_t m = n;
            for (std::uint64_t d = 2; d * d <= m; ++d) {
                if (m % d == 0) {
                    m /= d;
                    if (m % d == 0) return 0;
                    ++distinct;
                }
            }
            if (m > 1) ++distinct;
            return (distinct & 1) ? -1 : 1;
        }
        default:
            throw Error(Errc::invalid_argument,
                        "value_by_factorization needs a Liouville/Moebius tag or an assignment");
    }
}

int value_by_factorization(const PrimeAssignment& assignment, std::uint64_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "n must be >= 1");
    int sign = 1;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        unsigned exp = 0;
        while (m % d == 0) {
            m /= d;
            ++exp;
        }
        if ((exp & 1) && assignment.sign_at_prime(d) == -1) sign = -sign;
    }
    if (m > 1 && assignment.sign_at_prime(m) == -1) sign = -sign;
    return sign;
}

} // namespace aps
