#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "apseries/arith_sequence.hpp"
#include "apseries/periodicity.hpp"

namespace aps {

// Evaluation point: an exact rational in the open unit disk, or a complex
// point evaluated at a stated working precision.
class EvalPoint {
public:
    struct ComplexSpec {
        double re = 0;
        double im = 0;
        unsigned precision_bits = 128;
    };

    static EvalPoint exact_rational(mpq_class value) { return EvalPoint(std::move(value)); }
    static EvalPoint complex_point(double re, double im, unsigned precision_bits = 128) {
        return EvalPoint(ComplexSpec{re, im, precision_bits});
    }

    bool is_rational() const { return std::holds_alternative<mpq_class>(point_); }
    const mpq_class& rational() const { return std::get<mpq_class>(point_); }
    const ComplexSpec& complex_spec() const { return std::get<ComplexSpec>(point_); }

private:
    explicit EvalPoint(mpq_class q) : point_(std::move(q)) { std::get<mpq_class>(point_).canonicalize(); }
    explicit EvalPoint(ComplexSpec c) : point_(c) {}
    std::variant<mpq_class, ComplexSpec> point_;
};

// Complex partial-sum value with a rigorous rounding bound for the computed
// N-term sum (no tail estimate -- the sum is finite by construction).
struct ComplexEstimate {
    double re = 0;
    double im = 0;
    double abs = 0;
    double error_bound = 0;
    unsigned precision_bits = 0;
};

using EvalResult = std::variant<mpq_class, ComplexEstimate>;

// Exact Horner over rationals, or complex evaluation with error bound.
// Requires N <= seq.length and |z| < 1.
EvalResult partial_sum(const ArithSequence& seq, std::uint64_t n_terms, const EvalPoint& z);
mpq_class partial_sum_rational(const ArithSequence& seq, std::uint64_t n_terms, const mpq_class& z);
ComplexEstimate partial_sum_complex(const ArithSequence& seq, std::uint64_t n_terms, double re,
                                    double im, unsigned precision_bits = 128);

// Digit expansion record at base 2 (for +-1 sequences, bits (c_n+1)/2) or
// base 3 (balanced ternary; the digits are the coefficients themselves).
struct DigitRecord {
    unsigned base = 0;
    std::vector<int> digits;
    mpq_class digit_value;   // sum digits[n] * base^-n over the N digits
    mpq_class series_value;  // partial_sum at z = 1/base
    std::optional<PeriodClaim> digit_period;
    std::uint64_t period_m_max = 0;  // bounds used for the digit-periodicity scan
    std::uint64_t period_k_max = 0;  // (0,0) when the prefix is too short to scan
};

DigitRecord digits_in_base(const ArithSequence& seq, unsigned base, std::uint64_t n_terms);
DigitRecord digits_in_base(const ArithSequence& seq, unsigned base, std::uint64_t n_terms,
                           std::uint64_t period_m_max, std::uint64_t period_k_max);

// Sample grid for the sector-boundedness probe. Angles in radians; all radii
// strictly inside (0, 1). Samples are evenly spaced over [theta_lo, theta_hi]
// inclusive (midpoint when samples_per_arc == 1).
struct SectorSpec {
    double theta_lo = -0.39269908169872414;  // -pi/8
    double theta_hi = 0.39269908169872414;
    std::vector<double> radii;
    std::uint64_t samples_per_arc = 33;
    unsigned precision_bits = 128;
};

struct SectorSample {
    double radius;
    double theta;
    double re;
    double im;
    double abs;
    double error_bound;
};

struct RadiusSummary {
    double radius;
    double max_abs;
    double argmax_theta;
};

// Observational report: max |F_N| per radius with the arg-max sample point.
// Finite sampling certifies nothing; rows are sorted by radius, then angle.
struct SectorReport {
    std::vector<SectorSample> samples;
    std::vector<RadiusSummary> maxima;
    std::uint64_t n_terms = 0;
    unsigned precision_bits = 0;
};

SectorReport sector_bound_probe(const ArithSequence& seq, const SectorSpec& spec,
                                std::uint64_t n_terms);

// CSV emission: header "radius,theta,re,im,abs_FN,error_bound" then one row
// per sample.
void write_sector_csv(std::ostream& os, const SectorReport& report);

} // namespace aps
