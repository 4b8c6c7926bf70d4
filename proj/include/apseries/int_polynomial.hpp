#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "apseries/errors.hpp"

namespace aps {

// Dense integer-coefficient polynomial, index = degree, stored without
// trailing zeros. The zero polynomial has an empty coefficient vector and
// reports the distinguished degree kDegreeOfZero.
class IntPolynomial {
public:
    static constexpr int kDegreeOfZero = -1;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    static IntPolynomial from_ints(const std::vector<long>& coeffs);
    static IntPolynomial monomial(std::size_t degree, mpz_class coeff = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    // Coefficient of z^k; zero beyond the degree.
    const mpz_class& coeff(std::size_t k) const {
        static const mpz_class zero = 0;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const mpz_class& leading() const {
        if (is_zero()) throw Error(Errc::invalid_argument, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    // gcd of |coefficients|; 0 for the zero polynomial.
    mpz_class content() const;
    IntPolynomial divided_by(const mpz_class& d) const;  // exact division of every coefficient

    mpq_class eval(const mpq_class& x) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a);
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // Low-degree-first rendering: "0", "1-z", "z+z^2", "2-3z^4", ...
    std::string to_string(const std::string& var = "z") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<mpz_class> coeffs_;
};

} // namespace aps
