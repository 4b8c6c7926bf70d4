#include "apseries/int_polynomial.hpp"

#include <sstream>

namespace aps {

IntPolynomial IntPolynomial::from_ints(const std::vector<long>& coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, mpz_class coeff) {
    std::vector<mpz_class> c(degree + 1, 0);
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::divided_by(const mpz_class& d) const {
    if (d == 0) throw Error(Errc::invalid_argument, "division by zero");
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPolynomial(std::move(c));
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + mpq_class(*it);
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& k, const IntPolynomial& a) {
    std::vector<mpz_class> c(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = k * a.coeffs_[i];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        mpz_class a = abs(c);
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? '-' : '+');
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

} // namespace aps
