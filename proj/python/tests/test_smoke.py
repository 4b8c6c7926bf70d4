"""Smoke tests for the _apseries extension module."""

import sys
import tempfile
from fractions import Fraction

import _apseries as aps


def check(cond, what):
    if not cond:
        raise AssertionError(what)


def main():
    lam = aps.sieve_liouville(16)
    check(len(lam) == 16, "length")
    check(lam.values() == [1, -1, -1, 1, -1, 1, -1, -1, 1, 1, -1, -1, -1, 1, 1, 1],
          "liouville prefix")
    check(lam[12] == -1 and lam[24 // 2] == -1, "indexing")
    check(aps.liouville_value(24) == 1, "oracle")

    mu = aps.sieve_mobius(64)
    check(mu.values()[:8] == [1, -1, -1, 0, -1, 1, -1, 0], "moebius prefix")
    check(aps.moebius_value(30) == -1, "mu oracle")

    assignment = aps.PrimeAssignment(1, {2: -1})
    f = aps.sieve_cm(assignment, 12)
    check(f[6] == -1 and f[12] == 1, "cm values")
    check(aps.cm_value(assignment, 6) == -1, "cm oracle")
    try:
        aps.PrimeAssignment(1, {4: -1})
        raise AssertionError("composite key accepted")
    except ValueError:
        pass

    ones = aps.ArithSequence.literal([1] * 40)
    claim = aps.detect_eventual_period(ones, 5, 5)
    check(claim.preperiod == 0 and claim.period == 1, "detect on ones")
    check(aps.detect_eventual_period(aps.sieve_liouville(10000), 100, 100) is None,
          "lambda aperiodic at scale")

    w = aps.refute_period_cm(aps.PrimeAssignment(-1), aps.PeriodClaim(10, 3))
    check((w.p, w.n, w.a, w.b) == (2, 4, 12, 24), "witness")
    check(aps.verify_witness(aps.sieve_liouville(30), w), "verify witness")

    verdict = aps.classify_prefix(ones, 5, 5)
    check(verdict["verdict"] == "rational-candidate", "classify ones")
    form = verdict["form"]
    check(form.p == [0, 1] and form.q == [1, -1], "geometric form")
    check(aps.expand_rational(form, 10) == [1] * 10, "expansion")

    dets = aps.hankel_rank_profile(aps.sieve_liouville(16), 8)
    check(dets == [1, -2, 4, 0, -16, 32, 0, -128], "lambda hankel profile")

    cand = aps.search_annihilator(ones, 8, 1, 1)
    check(cand is not None and cand.order == 1, "annihilator search")
    check(aps.verify_relation(ones, cand, 16), "annihilator verify")
    check(aps.search_annihilator(aps.sieve_liouville(96), 48, 2, 3) is None,
          "lambda annihilator emptiness")

    check(aps.cauchy_radius([-1, 0, 1]) == Fraction(2), "cauchy radius")
    check(aps.cauchy_radius([-5, 3, 0, 2]) == Fraction(7, 2), "cauchy radius rational")
    check(aps.count_roots_in_disk([-1, 0, 1], 2) == 2, "root count")
    check(aps.count_roots_in_disk([0, -4, 0, 1], 1) == 1, "root count inner")

    check(aps.crt_solve([(1, 2), (2, 3)]) == 5, "crt")
    cert = aps.crt_zero_run(3)
    check(cert.start == 547 and cert.length == 3, "zero run")
    check(aps.verify_zero_run(cert), "zero run verify")
    check(aps.moebius_of(548) == 0, "moebius_of")

    check(aps.partial_sum(mu, 4, Fraction(1, 3)) == Fraction(5, 27), "partial sum")
    est = aps.partial_sum_complex(aps.ArithSequence.literal([1] * 16), 10, 0.5, 0.0, 128)
    check(abs(est.re - 1023 / 1024) <= est.error_bound + 1e-15, "complex partial sum")

    rec = aps.digits_in_base(mu, 3, 4)
    check(rec.digits == [1, -1, -1, 0], "balanced ternary digits")
    check(rec.series_value == Fraction(5, 27), "digit record value")

    report = aps.sector_bound_probe(ones, -0.5, 0.5, [0.25, 0.5], 5, 128, 40)
    check(len(report.samples) == 10, "sector samples")
    check(report.maxima[1].radius == 0.5, "sector maxima order")

    with tempfile.TemporaryDirectory() as tmp:
        path = tmp + "/lam.aps"
        aps.cache_write(lam, path)
        back = aps.cache_read(path)
        check(back.values() == lam.values(), "cache round trip")

    print("all smoke checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
