#include "apseries/series_eval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "mpfr_util.hpp"

namespace aps {

namespace {

using detail::Real;

// One complex Horner pass at the given precision; coefficients come from the
// 2-bit sequence. Returns value and a rigorous rounding bound.
ComplexEstimate horner_complex(const ArithSequence& seq, std::uint64_t n_terms, mpfr_srcptr zx,
                               mpfr_srcptr zy, unsigned prec) {
    Real acc_re(prec), acc_im(prec), t1(prec), t2(prec), t3(prec);
    for (std::uint64_t n = n_terms; n >= 1; --n) {
        mpfr_mul(t1.get(), acc_re.get(), zx, MPFR_RNDN);
        mpfr_mul(t2.get(), acc_im.get(), zy, MPFR_RNDN);
        mpfr_mul(t3.get(), acc_re.get(), zy, MPFR_RNDN);
        mpfr_mul(acc_im.get(), acc_im.get(), zx, MPFR_RNDN);
        mpfr_add(acc_im.get(), acc_im.get(), t3.get(), MPFR_RNDN);
        mpfr_sub(acc_re.get(), t1.get(), t2.get(), MPFR_RNDN);
        int c = seq[n];
        if (c == 1)
            mpfr_add_ui(acc_re.get(), acc_re.get(), 1, MPFR_RNDN);
        else if (c == -1)
            mpfr_sub_ui(acc_re.get(), acc_re.get(), 1, MPFR_RNDN);
    }
    // Final multiply by z: Horner above assembled sum c_n z^{n-1}.
    mpfr_mul(t1.get(), acc_re.get(), zx, MPFR_RNDN);
    mpfr_mul(t2.get(), acc_im.get(), zy, MPFR_RNDN);
    mpfr_mul(t3.get(), acc_re.get(), zy, MPFR_RNDN);
    mpfr_mul(acc_im.get(), acc_im.get(), zx, MPFR_RNDN);
    mpfr_add(acc_im.get(), acc_im.get(), t3.get(), MPFR_RNDN);
    mpfr_sub(acc_re.get(), t1.get(), t2.get(), MPFR_RNDN);

    // |z| and the triangle-inequality mass sum |z|^n, both rounded up.
    Real rho(prec), mass(prec), pw(prec);
    mpfr_hypot(rho.get(), zx, zy, MPFR_RNDU);
    mpfr_set_zero(mass.get(), 1);
    mpfr_set_ui(pw.get(), 1, MPFR_RNDU);
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        mpfr_mul(pw.get(), pw.get(), rho.get(), MPFR_RNDU);
        if (seq[n] != 0) mpfr_add(mass.get(), mass.get(), pw.get(), MPFR_RNDU);
    }

    ComplexEstimate out;
    out.precision_bits = prec;
    out.re = mpfr_get_d(acc_re.get(), MPFR_RNDN);
    out.im = mpfr_get_d(acc_im.get(), MPFR_RNDN);
    mpfr_hypot(t1.get(), acc_re.get(), acc_im.get(), MPFR_RNDN);
    out.abs = mpfr_get_d(t1.get(), MPFR_RNDN);
    double u = std::ldexp(1.0, -static_cast<int>(prec));
    // Horner rounding plus the double rounding of the reported fields.
    out.error_bound = 8.0 * static_cast<double>(n_terms + 2) * u * mpfr_get_d(mass.get(), MPFR_RNDU) +
                      4.0 * std::ldexp(std::max(std::fabs(out.abs), 1.0), -52);
    return out;
}

} // namespace

mpq_class partial_sum_rational(const ArithSequence& seq, std::uint64_t n_terms,
                               const mpq_class& z_in) {
    if (n_terms > seq.length()) throw Error(Errc::out_of_range, "N beyond prefix length");
    mpq_class z = z_in;
    z.canonicalize();
    if (abs(z.get_num()) >= z.get_den())
        throw Error(Errc::invalid_argument, "rational evaluation point must satisfy |z| < 1");
    if (n_terms == 0 || z == 0) return mpq_class(0);

    const mpz_class p = z.get_num();
    const mpz_class q = z.get_den();
    // acc = sum_{m=n}^{N} c_m p^{m-n} q^{N-m}, built downward; the final sum is
    // p * acc / q^N.
    mpz_class acc = 0;
    mpz_class qpow = 1;
    for (std::uint64_t m = n_terms; m >= 1; --m) {
        int c = seq[m];
        acc *= p;
        if (c == 1)
            acc += qpow;
        else if (c == -1)
            acc -= qpow;
        qpow *= q;
    }
    mpq_class out(p * acc, qpow);
    out.canonicalize();
    return out;
}

ComplexEstimate partial_sum_complex(const ArithSequence& seq, std::uint64_t n_terms, double re,
                                    double im, unsigned precision_bits) {
    if (n_terms > seq.length()) throw Error(Errc::out_of_range, "N beyond prefix length");
    if (re * re + im * im >= 1.0)
        throw Error(Errc::invalid_argument, "complex evaluation point must satisfy |z| < 1");
    unsigned prec = std::max(24u, precision_bits);
    Real zx(prec), zy(prec);
    mpfr_set_d(zx.get(), re, MPFR_RNDN);
    mpfr_set_d(zy.get(), im, MPFR_RNDN);
    if (n_terms == 0) {
        ComplexEstimate out;
        out.precision_bits = prec;
        return out;
    }
    return horner_complex(seq, n_terms, zx.get(), zy.get(), prec);
}

EvalResult partial_sum(const ArithSequence& seq, std::uint64_t n_terms, const EvalPoint& z) {
    if (z.is_rational()) return partial_sum_rational(seq, n_terms, z.rational());
    const auto& c = z.complex_spec();
    return partial_sum_complex(seq, n_terms, c.re, c.im, c.precision_bits);
}

DigitRecord digits_in_base(const ArithSequence& seq, unsigned base, std::uint64_t n_terms) {
    std::uint64_t bound = n_terms / 3;
    if (bound < 1) bound = 0;  // too short to scan
    return digits_in_base(seq, base, n_terms, bound, bound);
}

DigitRecord digits_in_base(const ArithSequence& seq, unsigned base, std::uint64_t n_terms,
                           std::uint64_t period_m_max, std::uint64_t period_k_max) {
    if (base < 2) throw Error(Errc::invalid_argument, "base must be >= 2");
    if (n_terms < 1 || n_terms > seq.length())
        throw Error(Errc::out_of_range, "N beyond prefix length");

    DigitRecord rec;
    rec.base = base;
    rec.digits.reserve(static_cast<std::size_t>(n_terms));
    if (base == 2) {
        // b_n = (c_n + 1) / 2 requires a +-1 alphabet.
        for (std::uint64_t n = 1; n <= n_terms; ++n) {
            int c = seq[n];
            if (c == 0)
                throw Error(Errc::unsupported_alphabet,
                            "base-2 digits need a +-1 sequence (zero coefficient found)");
            rec.digits.push_back((c + 1) / 2);
        }
    } else if (base == 3) {
        // Balanced ternary: the digit string is the coefficient string.
        for (std::uint64_t n = 1; n <= n_terms; ++n) rec.digits.push_back(seq[n]);
    } else {
        throw Error(Errc::unsupported_alphabet,
                    "coefficients in {-1,0,1} are only rendered at base 2 or 3");
    }

    // digit_value = sum d_n base^-n = (sum d_n base^{N-n}) / base^N, exactly.
    mpz_class num = 0;
    mpz_class bpow = 1;
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        num *= base;
        num += rec.digits[static_cast<std::size_t>(n - 1)];
        bpow *= base;
    }
    rec.digit_value = mpq_class(num, bpow);
    rec.digit_value.canonicalize();
    rec.series_value = partial_sum_rational(seq, n_terms, mpq_class(1, base));

    if (base == 2) {
        // Affine identity sum c_n 2^-n = 2 * sum b_n 2^-n - (1 - 2^-N), exact.
        mpq_class rhs = 2 * rec.digit_value - (mpq_class(1) - mpq_class(1, bpow));
        rhs.canonicalize();
        if (rhs != rec.series_value)
            throw std::logic_error("base-2 affine digit identity failed");
    } else {
        if (rec.digit_value != rec.series_value)
            throw std::logic_error("balanced-ternary digit value mismatch");
    }

    rec.period_m_max = period_m_max;
    rec.period_k_max = period_k_max;
    if (period_m_max >= 1 && period_k_max >= 1 &&
        n_terms >= period_m_max + 2 * period_k_max) {
        auto digit_seq = ArithSequence::literal(rec.digits);
        rec.digit_period = detect_eventual_period(digit_seq, period_m_max, period_k_max);
    } else {
        rec.period_m_max = 0;
        rec.period_k_max = 0;
    }
    return rec;
}

SectorReport sector_bound_probe(const ArithSequence& seq, const SectorSpec& spec,
                                std::uint64_t n_terms) {
    if (n_terms > seq.length()) throw Error(Errc::out_of_range, "N beyond prefix length");
    if (spec.radii.empty()) throw Error(Errc::invalid_argument, "empty radius list");
    if (spec.samples_per_arc == 0) throw Error(Errc::invalid_argument, "samples_per_arc must be >= 1");
    if (!(spec.theta_lo < spec.theta_hi))
        throw Error(Errc::invalid_argument, "need theta_lo < theta_hi");
    for (double r : spec.radii)
        if (!(r > 0.0 && r < 1.0))
            throw Error(Errc::invalid_argument, "radii must lie strictly inside (0, 1)");

    std::vector<double> radii = spec.radii;
    std::sort(radii.begin(), radii.end());
    const unsigned prec = std::max(24u, spec.precision_bits);
    const std::uint64_t s = spec.samples_per_arc;

    SectorReport report;
    report.n_terms = n_terms;
    report.precision_bits = prec;
    report.samples.resize(radii.size() * s);

    auto theta_at = [&](std::uint64_t j) {
        if (s == 1) return 0.5 * (spec.theta_lo + spec.theta_hi);
        return spec.theta_lo + (spec.theta_hi - spec.theta_lo) *
                                   (static_cast<double>(j) / static_cast<double>(s - 1));
    };

    auto eval_point = [&](std::size_t idx) {
        std::size_t ri = idx / s;
        std::uint64_t j = idx % s;
        double rho = radii[ri];
        double theta = theta_at(j);
        Real zx(prec), zy(prec), t(prec);
        mpfr_set_d(t.get(), theta, MPFR_RNDN);
        mpfr_sin_cos(zy.get(), zx.get(), t.get(), MPFR_RNDN);
        mpfr_mul_d(zx.get(), zx.get(), rho, MPFR_RNDN);
        mpfr_mul_d(zy.get(), zy.get(), rho, MPFR_RNDN);
        auto est = horner_complex(seq, n_terms, zx.get(), zy.get(), prec);
        report.samples[idx] = SectorSample{rho, theta, est.re, est.im, est.abs, est.error_bound};
    };

    const std::size_t total = report.samples.size();
    unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                          static_cast<unsigned>(total));
    if (workers <= 1 || total < 8) {
        for (std::size_t i = 0; i < total; ++i) eval_point(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < total; i += workers) eval_point(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        RadiusSummary m{radii[ri], -1.0, 0.0};
        for (std::uint64_t j = 0; j < s; ++j) {
            const auto& row = report.samples[ri * s + j];
            if (row.abs > m.max_abs) {
                m.max_abs = row.abs;
                m.argmax_theta = row.theta;
            }
        }
        report.maxima.push_back(m);
    }
    return report;
}

void write_sector_csv(std::ostream& os, const SectorReport& report) {
    os << "radius,theta,re,im,abs_FN,error_bound\n";
    char buf[256];
    for (const auto& r : report.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.radius, r.theta,
                      r.re, r.im, r.abs, r.error_bound);
        os << buf;
    }
}

} // namespace aps
