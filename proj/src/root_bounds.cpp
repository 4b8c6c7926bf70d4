#include "apseries/root_bounds.hpp"

#include <mpfr.h>

#include <cmath>
#include <optional>

#include "mpfr_util.hpp"

namespace aps {

mpq_class cauchy_radius(const IntPolynomial& p) {
    if (p.degree() < 1)
        throw Error(Errc::invalid_argument, "Cauchy radius needs degree >= 1");
    mpz_class lead = abs(p.leading());
    mpq_class best = 0;
    for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
        mpq_class q(abs(p.coeff(k)), lead);
        q.canonicalize();
        if (q > best) best = q;
    }
    return mpq_class(1) + best;
}

namespace {

using detail::Real;

constexpr double kPi = 3.14159265358979323846;

struct Endpoint {
    double phi;     // principal argument of the computed value
    double abs_lo;  // lower bound on the computed |value|
};

// Argument-principle winding count on the circle |z| = radius, parametrized by
// the turn fraction in [0, 1] kept as an exact dyadic rational so subdivision
// never runs out of resolution.
class WindingCounter {
public:
    WindingCounter(const std::vector<mpz_class>& coeffs, const mpq_class& radius,
                   mpfr_prec_t prec)
        : coeffs_(coeffs), two_pi_(prec), r_(prec), zx_(prec), zy_(prec), t_(prec),
          acc_re_(prec), acc_im_(prec), tmp1_(prec), tmp2_(prec), tmp3_(prec) {
        mpz_class denom = 1;
        mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<mp_bitcnt_t>(prec) + 8);
        min_width_ = mpq_class(1, denom);
        mpfr_const_pi(two_pi_.get(), MPFR_RNDN);
        mpfr_mul_ui(two_pi_.get(), two_pi_.get(), 2, MPFR_RNDN);
        mpfr_set_q(r_.get(), radius.get_mpq_t(), MPFR_RNDN);
        r_hi_ = mpfr_get_d(r_.get(), MPFR_RNDU);

        // Per-circle bounds, evaluated upward at a slightly inflated radius so
        // they hold on a neighborhood of the circle:
        //   coeff_sum  >= sum |a_k| R^k      (Horner rounding bound)
        //   deriv_sum  >= sum k |a_k| R^{k-1}  (Lipschitz bound for |p'|)
        Real rr(prec), pw(prec), term(prec), csum(prec), dsum(prec);
        mpfr_mul_d(rr.get(), r_.get(), 1.0625, MPFR_RNDU);
        mpfr_set_ui(pw.get(), 1, MPFR_RNDU);
        mpfr_set_zero(csum.get(), 1);
        mpfr_set_zero(dsum.get(), 1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            mpz_class a = abs(coeffs_[k]);
            if (k > 0) {
                mpfr_set_z(term.get(), a.get_mpz_t(), MPFR_RNDU);
                mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(k), MPFR_RNDU);
                mpfr_mul(term.get(), term.get(), pw.get(), MPFR_RNDU);
                mpfr_add(dsum.get(), dsum.get(), term.get(), MPFR_RNDU);
                mpfr_mul(pw.get(), pw.get(), rr.get(), MPFR_RNDU);
            }
            mpfr_set_z(term.get(), a.get_mpz_t(), MPFR_RNDU);
            mpfr_mul(term.get(), term.get(), pw.get(), MPFR_RNDU);
            mpfr_add(csum.get(), csum.get(), term.get(), MPFR_RNDU);
        }
        double u = std::ldexp(1.0, -static_cast<int>(prec));
        eval_err_ = 8.0 * static_cast<double>(coeffs_.size() + 2) * u *
                    mpfr_get_d(csum.get(), MPFR_RNDU);
        deriv_bound_ = mpfr_get_d(dsum.get(), MPFR_RNDU);
        circle_err_ = 64.0 * u * (r_hi_ + 1.0);
    }

    std::optional<long> run() {
        evals_ = 0;
        sum_ = 0.0;
        Endpoint start = eval(mpq_class(0));
        Endpoint finish = eval(mpq_class(1));
        if (!process(mpq_class(0), mpq_class(1), start, finish)) return std::nullopt;
        double winding = sum_ / (2.0 * kPi);
        long rounded = std::lround(winding);
        if (std::fabs(winding - static_cast<double>(rounded)) > 0.25 || rounded < 0) return std::nullopt;
        return rounded;
    }

private:
    static constexpr std::uint64_t kMaxEvals = 400000;

    Endpoint eval(const mpq_class& frac) {
        ++evals_;
        mpfr_set_q(t_.get(), frac.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(t_.get(), t_.get(), two_pi_.get(), MPFR_RNDN);
        mpfr_sin_cos(zy_.get(), zx_.get(), t_.get(), MPFR_RNDN);
        mpfr_mul(zx_.get(), zx_.get(), r_.get(), MPFR_RNDN);
        mpfr_mul(zy_.get(), zy_.get(), r_.get(), MPFR_RNDN);

        mpfr_set_zero(acc_re_.get(), 1);
        mpfr_set_zero(acc_im_.get(), 1);
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            // (acc_re + i acc_im) * z + a_k
            mpfr_mul(tmp1_.get(), acc_re_.get(), zx_.get(), MPFR_RNDN);
            mpfr_mul(tmp2_.get(), acc_im_.get(), zy_.get(), MPFR_RNDN);
            mpfr_mul(tmp3_.get(), acc_re_.get(), zy_.get(), MPFR_RNDN);
            mpfr_mul(acc_im_.get(), acc_im_.get(), zx_.get(), MPFR_RNDN);
            mpfr_add(acc_im_.get(), acc_im_.get(), tmp3_.get(), MPFR_RNDN);
            mpfr_sub(acc_re_.get(), tmp1_.get(), tmp2_.get(), MPFR_RNDN);
            if (coeffs_[k] != 0) {
                mpfr_set_z(tmp1_.get(), coeffs_[k].get_mpz_t(), MPFR_RNDN);
                mpfr_add(acc_re_.get(), acc_re_.get(), tmp1_.get(), MPFR_RNDN);
            }
        }
        mpfr_atan2(t_.get(), acc_im_.get(), acc_re_.get(), MPFR_RNDN);
        Endpoint e;
        e.phi = mpfr_get_d(t_.get(), MPFR_RNDN);
        mpfr_hypot(tmp1_.get(), acc_re_.get(), acc_im_.get(), MPFR_RNDD);
        e.abs_lo = mpfr_get_d(tmp1_.get(), MPFR_RNDD);
        return e;
    }

    bool process(const mpq_class& lo, const mpq_class& hi, const Endpoint& at_lo,
                 const Endpoint& at_hi) {
        if (evals_ > kMaxEvals) return false;
        mpq_class width = hi - lo;
        mpq_class mid = lo + width / 2;
        Endpoint at_mid = eval(mid);

        // Whole-arc image lies in a disk around the midpoint value; accept the
        // arc only when that disk stays a factor 2 away from the origin, which
        // confines every argument on the arc to a cone of half-angle <= 30 deg
        // and makes the principal endpoint increment the true increment.
        double half_arc = kPi * mpq_get_d(width.get_mpq_t()) * 1.0000001;
        double disk = deriv_bound_ * (r_hi_ * half_arc + circle_err_) + 3.0 * eval_err_;
        if (2.0 * disk <= at_mid.abs_lo) {
            double d = at_hi.phi - at_lo.phi;
            if (d > kPi) d -= 2.0 * kPi;
            if (d < -kPi) d += 2.0 * kPi;
            sum_ += d;
            return true;
        }
        if (mpq_cmp(width.get_mpq_t(), min_width_.get_mpq_t()) < 0) return false;
        return process(lo, mid, at_lo, at_mid) && process(mid, hi, at_mid, at_hi);
    }

    const std::vector<mpz_class>& coeffs_;
    Real two_pi_, r_, zx_, zy_, t_, acc_re_, acc_im_, tmp1_, tmp2_, tmp3_;
    mpq_class min_width_;
    double r_hi_ = 0, eval_err_ = 0, deriv_bound_ = 0, circle_err_ = 0;
    double sum_ = 0;
    std::uint64_t evals_ = 0;
};

} // namespace

unsigned count_roots_in_disk(const IntPolynomial& p, const mpq_class& radius,
                             const RootCountOptions& options) {
    if (p.degree() < 1)
        throw Error(Errc::invalid_argument, "root counting needs degree >= 1");
    if (radius <= 0) throw Error(Errc::invalid_argument, "radius must be positive");

    unsigned prec = std::max(16u, options.initial_precision_bits);
    for (;;) {
        WindingCounter counter(p.coeffs(), radius, static_cast<mpfr_prec_t>(prec));
        if (auto w = counter.run()) {
            if (*w >= 0 && *w <= p.degree()) return static_cast<unsigned>(*w);
        }
        if (prec >= options.max_precision_bits)
            throw Error(Errc::indeterminate_at_precision,
                        "root count not certifiable at precision <= " +
                            std::to_string(options.max_precision_bits) +
                            " bits (root on or too near the circle?)");
        prec *= 2;
        if (prec > options.max_precision_bits) prec = options.max_precision_bits;
    }
}

} // namespace aps
