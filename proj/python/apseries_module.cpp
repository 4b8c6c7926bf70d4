#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include "apseries/annihilator.hpp"
#include "apseries/cache_file.hpp"
#include "apseries/periodicity.hpp"
#include "apseries/rationality.hpp"
#include "apseries/root_bounds.hpp"
#include "apseries/series_eval.hpp"
#include "apseries/sieves.hpp"
#include "apseries/zero_runs.hpp"

namespace py = pybind11;
using namespace aps;

namespace {

py::object py_int(const mpz_class& v) {
    return py::module_::import("builtins").attr("int")(py::str(v.get_str()), 10);
}

mpz_class to_mpz(const py::object& o) {
    std::string s = py::str(o);
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw Error(Errc::invalid_argument, "not an integer: " + s);
    return v;
}

py::object py_fraction(const mpq_class& q) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py_int(q.get_num()), py_int(q.get_den()));
}

mpq_class to_mpq(const py::object& o) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    py::object f = fraction(o);
    mpq_class q(to_mpz(f.attr("numerator")), to_mpz(f.attr("denominator")));
    q.canonicalize();
    return q;
}

py::list poly_coeffs(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(py_int(c));
    return out;
}

IntPolynomial poly_from(const py::sequence& coeffs) {
    std::vector<mpz_class> c;
    for (auto item : coeffs) c.push_back(to_mpz(py::reinterpret_borrow<py::object>(item)));
    return IntPolynomial(std::move(c));
}

void translate_error(const Error& e) {
    switch (e.code()) {
        case Errc::out_of_range:
            PyErr_SetString(PyExc_IndexError, e.what());
            break;
        case Errc::invalid_argument:
        case Errc::invalid_claim:
        case Errc::unsupported_alphabet:
        case Errc::no_negative_prime:
            PyErr_SetString(PyExc_ValueError, e.what());
            break;
        default:
            PyErr_SetString(PyExc_RuntimeError, e.what());
    }
}

} // namespace

PYBIND11_MODULE(_apseries, m) {
    m.doc() = "power series of multiplicative functions: sieves, periodicity, "
              "rationality, annihilators, root bounds, CRT zero runs, evaluation";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            translate_error(e);
        }
    });

    py::class_<PrimeAssignment>(m, "PrimeAssignment")
        .def(py::init([](int default_sign, const std::map<std::uint64_t, int>& exceptions) {
                 return PrimeAssignment(default_sign, {exceptions.begin(), exceptions.end()});
             }),
             py::arg("default_sign"), py::arg("exceptions") = std::map<std::uint64_t, int>{})
        .def_property_readonly("default_sign", &PrimeAssignment::default_sign)
        .def_property_readonly("exceptions",
                               [](const PrimeAssignment& a) { return a.exceptions(); })
        .def("sign_at_prime", &PrimeAssignment::sign_at_prime)
        .def("smallest_negative_prime", &PrimeAssignment::smallest_negative_prime);

    py::class_<ArithSequence>(m, "ArithSequence")
        .def_static("literal", [](const std::vector<int>& v) { return ArithSequence::literal(v); })
        .def("__len__", &ArithSequence::length)
        .def("__getitem__", [](const ArithSequence& s, std::uint64_t n) { return s.at(n); })
        .def("values", &ArithSequence::values)
        .def_property_readonly("source",
                               [](const ArithSequence& s) { return source_kind_name(s.source()); })
        .def_property_readonly("assignment", [](const ArithSequence& s) { return s.assignment(); });

    m.def("sieve_liouville", [](std::uint64_t n) { return sieve_liouville(n); }, py::arg("n"));
    m.def("sieve_mobius", [](std::uint64_t n) { return sieve_mobius(n); }, py::arg("n"));
    m.def("sieve_cm",
          [](const PrimeAssignment& a, std::uint64_t n) { return sieve_cm(a, n); },
          py::arg("assignment"), py::arg("n"));
    m.def("liouville_value",
          [](std::uint64_t n) { return value_by_factorization(SourceKind::Liouville, n); });
    m.def("moebius_value",
          [](std::uint64_t n) { return value_by_factorization(SourceKind::Moebius, n); });
    m.def("cm_value",
          [](const PrimeAssignment& a, std::uint64_t n) { return value_by_factorization(a, n); });

    py::class_<PeriodClaim>(m, "PeriodClaim")
        .def(py::init([](std::uint64_t preperiod, std::uint64_t period) {
                 return PeriodClaim{preperiod, period};
             }),
             py::arg("preperiod"), py::arg("period"))
        .def_readonly("preperiod", &PeriodClaim::preperiod)
        .def_readonly("period", &PeriodClaim::period)
        .def("__repr__", [](const PeriodClaim& c) {
            return "PeriodClaim(preperiod=" + std::to_string(c.preperiod) +
                   ", period=" + std::to_string(c.period) + ")";
        });

    py::class_<PeriodWitness>(m, "PeriodWitness")
        .def_readonly("p", &PeriodWitness::p)
        .def_readonly("n", &PeriodWitness::n)
        .def_readonly("a", &PeriodWitness::a)
        .def_readonly("b", &PeriodWitness::b)
        .def_readonly("claim", &PeriodWitness::claim);

    m.def("detect_eventual_period", &detect_eventual_period, py::arg("seq"), py::arg("m_max"),
          py::arg("k_max"));
    m.def("refute_period_cm", &refute_period_cm, py::arg("assignment"), py::arg("claim"));
    m.def("verify_witness", &verify_witness, py::arg("seq"), py::arg("witness"));

    py::class_<RationalForm>(m, "RationalForm")
        .def_property_readonly("p", [](const RationalForm& f) { return poly_coeffs(f.p); })
        .def_property_readonly("q", [](const RationalForm& f) { return poly_coeffs(f.q); })
        .def("__repr__", [](const RationalForm& f) {
            return "RationalForm(P=" + f.p.to_string() + ", Q=" + f.q.to_string() + ")";
        });

    m.def("classify_prefix",
          [](const ArithSequence& seq, std::uint64_t m_max, std::uint64_t k_max) -> py::object {
              auto verdict = classify_prefix(seq, m_max, k_max);
              py::dict out;
              if (const auto* rc = std::get_if<RationalCandidate>(&verdict)) {
                  out["verdict"] = "rational-candidate";
                  out["claim"] = rc->claim;
                  out["form"] = rc->form;
              } else {
                  const auto& np = std::get<NonPeriodicAtScale>(verdict);
                  out["verdict"] = "non-periodic-at-scale";
                  out["m_max"] = np.m_max;
                  out["k_max"] = np.k_max;
              }
              return out;
          },
          py::arg("seq"), py::arg("m_max"), py::arg("k_max"));
    m.def("reconstruct_rational", &reconstruct_rational, py::arg("seq"), py::arg("claim"));
    m.def("expand_rational",
          [](const RationalForm& f, std::uint64_t count) {
              py::list out;
              for (const auto& c : expand_rational(f, count)) out.append(py_int(c));
              return out;
          },
          py::arg("form"), py::arg("count"));
    m.def("hankel_rank_profile",
          [](const ArithSequence& seq, std::uint64_t max_order) {
              py::list out;
              for (const auto& d : hankel_rank_profile(seq, max_order)) out.append(py_int(d));
              return out;
          },
          py::arg("seq"), py::arg("max_order"));

    py::class_<AnnihilatorCandidate>(m, "AnnihilatorCandidate")
        .def_readonly("order", &AnnihilatorCandidate::order)
        .def_readonly("degree_bound", &AnnihilatorCandidate::degree_bound)
        .def_readonly("truncation", &AnnihilatorCandidate::truncation)
        .def_readonly("verified_to", &AnnihilatorCandidate::verified_to)
        .def_property_readonly("coeffs", [](const AnnihilatorCandidate& c) {
            py::list out;
            for (const auto& a : c.coeffs) out.append(poly_coeffs(a));
            return out;
        });

    m.def("series_power_truncated",
          [](const ArithSequence& seq, unsigned power, std::uint64_t trunc) {
              py::list out;
              for (const auto& c : series_power_truncated(seq, power, trunc)) out.append(py_int(c));
              return out;
          },
          py::arg("seq"), py::arg("power"), py::arg("truncation"));
    m.def("search_annihilator", &search_annihilator, py::arg("seq"), py::arg("truncation"),
          py::arg("n_max"), py::arg("d_max"));
    m.def("verify_relation", &verify_relation, py::arg("seq"), py::arg("candidate"),
          py::arg("truncation"));

    m.def("cauchy_radius",
          [](const py::sequence& coeffs) { return py_fraction(cauchy_radius(poly_from(coeffs))); },
          py::arg("coeffs"));
    m.def("count_roots_in_disk",
          [](const py::sequence& coeffs, const py::object& radius, unsigned precision_bits) {
              RootCountOptions opts;
              opts.initial_precision_bits = precision_bits;
              return count_roots_in_disk(poly_from(coeffs), to_mpq(radius), opts);
          },
          py::arg("coeffs"), py::arg("radius"), py::arg("precision_bits") = 64);

    m.def("crt_solve",
          [](const std::vector<std::pair<py::object, py::object>>& congruences) {
              std::vector<Congruence> sys;
              for (const auto& [r, mod] : congruences) sys.push_back({to_mpz(r), to_mpz(mod)});
              return py_int(crt_solve(sys));
          },
          py::arg("congruences"));

    py::class_<ZeroRunCertificate>(m, "ZeroRunCertificate")
        .def_property_readonly("start",
                               [](const ZeroRunCertificate& c) { return py_int(c.start); })
        .def_readonly("length", &ZeroRunCertificate::length)
        .def_property_readonly("congruences", [](const ZeroRunCertificate& c) {
            py::list out;
            for (const auto& e : c.entries)
                out.append(py::make_tuple(e.prime, py_int(e.prime_square), py_int(e.residue)));
            return out;
        });

    m.def("crt_zero_run", &crt_zero_run, py::arg("length"));
    m.def("verify_zero_run", &verify_zero_run, py::arg("certificate"));
    m.def("moebius_of", [](const py::object& n) { return moebius_of(to_mpz(n)); }, py::arg("n"));

    py::class_<ComplexEstimate>(m, "ComplexEstimate")
        .def_readonly("re", &ComplexEstimate::re)
        .def_readonly("im", &ComplexEstimate::im)
        .def_readonly("abs", &ComplexEstimate::abs)
        .def_readonly("error_bound", &ComplexEstimate::error_bound)
        .def_readonly("precision_bits", &ComplexEstimate::precision_bits);

    m.def("partial_sum",
          [](const ArithSequence& seq, std::uint64_t n, const py::object& z) {
              return py_fraction(partial_sum_rational(seq, n, to_mpq(z)));
          },
          py::arg("seq"), py::arg("n"), py::arg("z"));
    m.def("partial_sum_complex", &partial_sum_complex, py::arg("seq"), py::arg("n"), py::arg("re"),
          py::arg("im"), py::arg("precision_bits") = 128);

    py::class_<DigitRecord>(m, "DigitRecord")
        .def_readonly("base", &DigitRecord::base)
        .def_readonly("digits", &DigitRecord::digits)
        .def_property_readonly("digit_value",
                               [](const DigitRecord& r) { return py_fraction(r.digit_value); })
        .def_property_readonly("series_value",
                               [](const DigitRecord& r) { return py_fraction(r.series_value); })
        .def_readonly("digit_period", &DigitRecord::digit_period)
        .def_readonly("period_m_max", &DigitRecord::period_m_max)
        .def_readonly("period_k_max", &DigitRecord::period_k_max);

    m.def("digits_in_base",
          [](const ArithSequence& seq, unsigned base, std::uint64_t n) {
              return digits_in_base(seq, base, n);
          },
          py::arg("seq"), py::arg("base"), py::arg("n"));

    py::class_<SectorSample>(m, "SectorSample")
        .def_readonly("radius", &SectorSample::radius)
        .def_readonly("theta", &SectorSample::theta)
        .def_readonly("re", &SectorSample::re)
        .def_readonly("im", &SectorSample::im)
        .def_readonly("abs", &SectorSample::abs)
        .def_readonly("error_bound", &SectorSample::error_bound);

    py::class_<RadiusSummary>(m, "RadiusSummary")
        .def_readonly("radius", &RadiusSummary::radius)
        .def_readonly("max_abs", &RadiusSummary::max_abs)
        .def_readonly("argmax_theta", &RadiusSummary::argmax_theta);

    py::class_<SectorReport>(m, "SectorReport")
        .def_readonly("samples", &SectorReport::samples)
        .def_readonly("maxima", &SectorReport::maxima)
        .def_readonly("n_terms", &SectorReport::n_terms)
        .def_readonly("precision_bits", &SectorReport::precision_bits);

    m.def("sector_bound_probe",
          [](const ArithSequence& seq, double theta_lo, double theta_hi,
             const std::vector<double>& radii, std::uint64_t samples, unsigned precision_bits,
             std::uint64_t n) {
              SectorSpec spec;
              spec.theta_lo = theta_lo;
              spec.theta_hi = theta_hi;
              spec.radii = radii;
              spec.samples_per_arc = samples;
              spec.precision_bits = precision_bits;
              return sector_bound_probe(seq, spec, n);
          },
          py::arg("seq"), py::arg("theta_lo"), py::arg("theta_hi"), py::arg("radii"),
          py::arg("samples"), py::arg("precision_bits"), py::arg("n"));

    m.def("cache_write",
          [](const ArithSequence& seq, const std::string& path) { cache_write(seq, path); },
          py::arg("seq"), py::arg("path"));
    m.def("cache_read", [](const std::string& path) { return cache_read(path); }, py::arg("path"));
}
