#include "apseries/exact_linalg.hpp"

#include <random>

#include "apseries/errors.hpp"
#include "apseries/primality.hpp"

namespace aps {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % mpz_class(p);  // sign follows v
    if (r < 0) r += p;
    return r.get_ui();
}

std::vector<std::vector<std::uint64_t>> to_mod_matrix(const IntMatrix& m, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        a[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = reduce_mod(m[i][j], p);
    }
    return a;
}

} // namespace

mpz_class bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw Error(Errc::invalid_argument, "determinant of non-square matrix");

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t p) {
    const std::size_t n = m.size();
    auto a = to_mod_matrix(m, p);
    std::uint64_t det = 1 % p;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            negate = !negate;
        }
        det = mulmod(det, a[k][k], p);
        std::uint64_t inv = invmod(a[k][k], p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            std::uint64_t f = mulmod(a[i][k], inv, p);
            for (std::size_t j = k; j < n; ++j) {
                std::uint64_t sub = mulmod(f, a[k][j], p);
                a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub : a[i][j] + p - sub;
            }
        }
    }
    return negate ? (det == 0 ? 0 : p - det) : det;
}

std::size_t rank_mod(const IntMatrix& m, std::uint64_t p) {
    auto a = to_mod_matrix(m, p);
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::uint64_t inv = invmod(a[rank][col], p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            std::uint64_t f = mulmod(a[i][col], inv, p);
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, a[rank][j], p);
                a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub : a[i][j] + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

// Reduced row echelon form over Q. Returns pivot column of each used row.
std::vector<std::size_t> rref(std::vector<std::vector<mpq_class>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[row]);
        mpq_class inv = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMatrix& m, std::size_t ncols) {
    std::vector<std::vector<mpq_class>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != ncols) throw Error(Errc::invalid_argument, "ragged matrix");
        a[i].assign(m[i].begin(), m[i].end());
    }
    auto pivots = rref(a, ncols);

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<mpq_class> v(ncols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];

        // Scale to a primitive integer vector with positive last nonzero entry.
        mpz_class lcm = 1;
        for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> w(ncols);
        mpz_class g = 0;
        for (std::size_t j = 0; j < ncols; ++j) {
            w[j] = mpz_class(v[j] * lcm);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
        }
        for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        for (std::size_t j = ncols; j-- > 0;) {
            if (w[j] != 0) {
                if (w[j] < 0)
                    for (auto& x : w) x = -x;
                break;
            }
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

std::size_t kernel_dimension(const IntMatrix& m, std::size_t ncols) {
    std::vector<std::vector<mpq_class>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
    auto pivots = rref(a, ncols);
    return ncols - pivots.size();
}

std::uint64_t random_prime_with_bits(unsigned bits, std::uint64_t seed) {
    if (bits < 3 || bits > 63) throw Error(Errc::invalid_argument, "prime bit size out of range");
    std::mt19937_64 rng(seed);
    const std::uint64_t lo = std::uint64_t(1) << (bits - 1);
    const std::uint64_t hi = (std::uint64_t(1) << bits) - 1;
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    for (;;) {
        std::uint64_t candidate = dist(rng) | 1;
        if (is_prime_u64(candidate)) return candidate;
    }
}

} // namespace aps
