#include "apseries/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "apseries/annihilator.hpp"
#include "apseries/cache_file.hpp"
#include "apseries/periodicity.hpp"
#include "apseries/primality.hpp"
#include "apseries/rationality.hpp"
#include "apseries/root_bounds.hpp"
#include "apseries/series_eval.hpp"
#include "apseries/sieves.hpp"
#include "apseries/zero_runs.hpp"

namespace aps::cli {

namespace {

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::invalid_argument:
        case Errc::out_of_range:
        case Errc::no_negative_prime:
        case Errc::invalid_claim:
        case Errc::unsupported_alphabet:
            return 1;
        default:
            return 2;
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_sign(const std::string& text) {
    if (text == "+1" || text == "1") return 1;
    if (text == "-1") return -1;
    throw Error(Errc::invalid_argument, "expected +1 or -1, got '" + text + "'");
}

// Assignment file: one "default: +1|-1" line, then "p: +1|-1" lines.
// '#' starts a comment; blank lines ignored.
PrimeAssignment load_assignment(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::io_error, "cannot open assignment file " + path);
    bool have_default = false;
    int default_sign = 1;
    std::map<std::uint64_t, int> exceptions;
    std::string line;
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::invalid_argument, "malformed assignment line '" + line + "'");
        std::string key = trim(line.substr(0, colon));
        int sign = parse_sign(trim(line.substr(colon + 1)));
        if (key == "default") {
            if (have_default)
                throw Error(Errc::invalid_argument, "duplicate default line in assignment file");
            have_default = true;
            default_sign = sign;
        } else {
            std::uint64_t p = 0;
            try {
                std::size_t used = 0;
                p = std::stoull(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw Error(Errc::invalid_argument, "malformed prime '" + key + "' in assignment file");
            }
            exceptions[p] = sign;
        }
    }
    if (!have_default)
        throw Error(Errc::invalid_argument, "assignment file is missing the default line");
    return PrimeAssignment(default_sign, std::move(exceptions));
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error(Errc::invalid_argument, "malformed rational literal '" + text + "'");
    if (q.get_den() == 0) throw Error(Errc::invalid_argument, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

IntPolynomial parse_poly(const std::string& text) {
    std::vector<mpz_class> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        mpz_class c;
        if (item.empty() || mpz_set_str(c.get_mpz_t(), item.c_str(), 10) != 0)
            throw Error(Errc::invalid_argument, "malformed polynomial coefficient '" + item + "'");
        coeffs.push_back(std::move(c));
    }
    if (coeffs.empty()) throw Error(Errc::invalid_argument, "empty polynomial literal");
    return IntPolynomial(std::move(coeffs));
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(trim(item), &used));
        } catch (const std::exception&) {
            throw Error(Errc::invalid_argument, "malformed number '" + item + "'");
        }
    }
    return out;
}

void print_values_line(std::ostream& out, const ArithSequence& seq) {
    std::uint64_t shown = std::min<std::uint64_t>(seq.length(), 16);
    out << "values[1.." << shown << "]:";
    for (std::uint64_t n = 1; n <= shown; ++n) out << ' ' << seq[n];
    if (seq.length() > shown) out << " ...";
    out << '\n';
}

std::string claim_str(const PeriodClaim& c) {
    return "M=" + std::to_string(c.preperiod) + " k=" + std::to_string(c.period);
}

struct SieveArgs {
    std::string func;
    std::string assignment_path;
    std::uint64_t n = 0;
    std::string cache_path;
};

void cmd_sieve(const SieveArgs& a, std::ostream& out) {
    ArithSequence seq = [&] {
        if (a.func == "liouville") return sieve_liouville(a.n);
        if (a.func == "moebius") return sieve_mobius(a.n);
        if (a.func == "cm") {
            if (a.assignment_path.empty())
                throw Error(Errc::invalid_argument, "--func cm requires --assignment FILE");
            return sieve_cm(load_assignment(a.assignment_path), a.n);
        }
        throw Error(Errc::invalid_argument, "unknown function '" + a.func + "'");
    }();
    out << "source=" << source_kind_name(seq.source()) << " n=" << seq.length() << '\n';
    print_values_line(out, seq);
    if (!a.cache_path.empty()) {
        cache_write(seq, a.cache_path);
        auto bytes = cache_serialize(seq);
        char crc[32];
        std::snprintf(crc, sizeof(crc), "%016llx",
                      static_cast<unsigned long long>(crc64_xz(bytes.data(), bytes.size() - 8)));
        out << "cache written: " << a.cache_path << " (" << bytes.size() << " bytes, crc64=" << crc
            << ")\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"arithmetic power series toolkit"};
    app.name("aps");
    app.require_subcommand(1);

    SieveArgs sieve_args;
    auto* sieve_cmd = app.add_subcommand(
        "sieve", "sieve lambda, mu, or a completely multiplicative +-1 function");
    sieve_cmd->add_option("--func", sieve_args.func, "liouville | moebius | cm")->required();
    sieve_cmd->add_option("--assignment", sieve_args.assignment_path, "prime assignment file (cm)");
    sieve_cmd->add_option("--n", sieve_args.n, "prefix length")->required();
    sieve_cmd->add_option("--cache", sieve_args.cache_path, "write binary cache here");

    std::string cache_path, assignment_path, poly_text, z_text, sector_text, radii_text;
    std::uint64_t m_max = 100, k_max = 100, preperiod = 0, period = 1;
    std::uint64_t trunc = 32, n_terms = 0, samples = 33, run_length = 1;
    unsigned order_bound = 1, degree_bound = 1, base = 2, precision = 128;
    bool verify_flag = false, digits_flag = false;
    std::string count_radius_text;

    auto* classify_cmd = app.add_subcommand("classify", "eventual-periodicity verdict with P/Q");
    classify_cmd->add_option("--cache", cache_path, "input cache")->required();
    classify_cmd->add_option("--mmax", m_max, "preperiod bound")->required();
    classify_cmd->add_option("--kmax", k_max, "period bound")->required();

    auto* refute_cmd = app.add_subcommand("refute", "witness against a period claim for a CM function");
    refute_cmd->add_option("--assignment", assignment_path, "prime assignment file")->required();
    refute_cmd->add_option("--preperiod", preperiod, "claimed preperiod M")->required();
    refute_cmd->add_option("--period", period, "claimed period k")->required();

    auto* annihilate_cmd = app.add_subcommand("annihilate", "search integer annihilating relations");
    annihilate_cmd->add_option("--cache", cache_path, "input cache")->required();
    annihilate_cmd->add_option("--trunc", trunc, "truncation T")->required();
    annihilate_cmd->add_option("--order", order_bound, "order bound n_max")->required();
    annihilate_cmd->add_option("--deg", degree_bound, "degree bound d_max")->required();

    auto* rootbound_cmd = app.add_subcommand("rootbound", "Cauchy root radius and certified counting");
    rootbound_cmd
        ->add_option("--poly", poly_text, "comma-separated integer coefficients, low degree first")
        ->required();
    rootbound_cmd->add_option("--count-at", count_radius_text, "certified root count at this radius");

    bool minimal_flag = false;
    std::uint64_t search_bound = 1000000;
    auto* zerorun_cmd = app.add_subcommand("zerorun", "CRT certificate for a run of mu zeros");
    zerorun_cmd->add_option("--length", run_length, "run length L")->required();
    zerorun_cmd->add_flag("--verify", verify_flag, "re-verify divisibilities and mu values");
    zerorun_cmd->add_flag("--minimal", minimal_flag,
                          "sieve-based search for the least run instead of a certificate");
    zerorun_cmd->add_option("--bound", search_bound, "sieve limit for --minimal");

    auto* eval_cmd = app.add_subcommand("eval", "partial sums, digit expansions, sector probe");
    eval_cmd->add_option("--cache", cache_path, "input cache")->required();
    eval_cmd->add_option("--n", n_terms, "number of terms N")->required();
    eval_cmd->add_option("--z", z_text, "exact rational point P/Q");
    eval_cmd->add_flag("--digits", digits_flag, "emit digit expansion");
    eval_cmd->add_option("--base", base, "digit base (2 or 3)");
    eval_cmd->add_option("--sector", sector_text, "LO,HI angles in radians");
    eval_cmd->add_option("--radii", radii_text, "comma-separated radii in (0,1)");
    eval_cmd->add_option("--samples", samples, "samples per arc");
    eval_cmd->add_option("--precision", precision, "working precision in bits");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (sieve_cmd->parsed()) {
            cmd_sieve(sieve_args, out);
        } else if (classify_cmd->parsed()) {
            ArithSequence seq = cache_read(cache_path);
            auto verdict = classify_prefix(seq, m_max, k_max);
            if (const auto* rc = std::get_if<RationalCandidate>(&verdict)) {
                out << "rational candidate: P=" << rc->form.p.to_string()
                    << ", Q=" << rc->form.q.to_string() << '\n';
                out << "period: " << claim_str(rc->claim) << '\n';
            } else {
                const auto& np = std::get<NonPeriodicAtScale>(verdict);
                out << "not eventually periodic up to (M_max=" << np.m_max << ", k_max=" << np.k_max
                    << ")\n";
            }
        } else if (refute_cmd->parsed()) {
            auto assignment = load_assignment(assignment_path);
            PeriodClaim claim{preperiod, period};
            auto w = refute_period_cm(assignment, claim);
            int fa = value_by_factorization(assignment, w.a);
            int fb = value_by_factorization(assignment, w.b);
            out << "witness: p=" << w.p << " n=" << w.n << " a=" << w.a << " b=" << w.b
                << " (claim: " << claim_str(claim) << ")\n";
            out << "f(a)=" << fa << " f(b)=" << fb << " b-a=" << (w.b - w.a) << " (divisible by k)\n";
        } else if (annihilate_cmd->parsed()) {
            ArithSequence seq = cache_read(cache_path);
            auto cand = search_annihilator(seq, trunc, order_bound, degree_bound);
            if (cand) {
                out << "annihilator found: order=" << cand->order << " T=" << cand->truncation
                    << " verified_to=" << cand->verified_to << '\n';
                for (std::size_t i = 0; i < cand->coeffs.size(); ++i)
                    out << "a[" << i << "] = " << cand->coeffs[i].to_string() << '\n';
            } else {
                out << "none at this scale (T=" << trunc << ", order<=" << order_bound
                    << ", deg<=" << degree_bound << ")\n";
            }
        } else if (rootbound_cmd->parsed()) {
            auto poly = parse_poly(poly_text);
            mpq_class r = cauchy_radius(poly);
            out << "r = " << r.get_str() << '\n';
            if (!count_radius_text.empty()) {
                mpq_class rad = parse_rational(count_radius_text);
                unsigned count = count_roots_in_disk(poly, rad);
                out << "roots with |z| < " << rad.get_str() << ": " << count << '\n';
            }
        } else if (zerorun_cmd->parsed()) {
            if (minimal_flag) {
                // Report-only search; certificates keep their pure CRT semantics.
                if (run_length < 1) throw Error(Errc::invalid_argument, "run length must be >= 1");
                auto mu = sieve_mobius(search_bound);
                std::uint64_t start = 0;
                std::uint64_t run = 0;
                for (std::uint64_t n = 1; n <= search_bound && start == 0; ++n) {
                    run = (mu[n] == 0) ? run + 1 : 0;
                    if (run == run_length) start = n - run_length + 1;
                }
                if (start == 0) {
                    out << "no run of " << run_length << " mu zeros found up to " << search_bound
                        << '\n';
                } else {
                    out << "minimal run of " << run_length << " mu zeros: mu(n) = 0 for n = "
                        << start << ".." << (start + run_length - 1) << " (sieve search up to "
                        << search_bound << ")\n";
                }
                return 0;
            }
            auto cert = crt_zero_run(run_length);
            out << "zero run: L=" << cert.length << " start=" << cert.start.get_str() << '\n';
            out << "mu(x) = 0 for x = " << mpz_class(cert.start + 1).get_str() << ".."
                << mpz_class(cert.start + cert.length).get_str() << '\n';
            for (std::uint64_t i = 1; i <= cert.length; ++i) {
                const auto& e = cert.entries[static_cast<std::size_t>(i - 1)];
                out << e.prime << "^2 = " << e.prime_square.get_str() << " divides "
                    << mpz_class(cert.start + i).get_str() << '\n';
            }
            if (verify_flag) {
                bool ok = verify_zero_run(cert);
                out << (ok ? "verified: all divisibilities hold and mu(start+i) = 0 for i = 1.."
                           : "VERIFICATION FAILED for i = 1..")
                    << cert.length << '\n';
                if (!ok) return 2;
            }
        } else if (eval_cmd->parsed()) {
            ArithSequence seq = cache_read(cache_path);
            if (!z_text.empty()) {
                mpq_class z = parse_rational(z_text);
                mpq_class v = partial_sum_rational(seq, n_terms, z);
                out << "partial sum: N=" << n_terms << " z=" << z.get_str() << '\n';
                out << "value = " << v.get_str() << '\n';
            } else if (digits_flag) {
                auto rec = digits_in_base(seq, base, n_terms);
                out << "digits: base=" << rec.base << " N=" << n_terms << '\n';
                out << "digit string: ";
                for (int d : rec.digits) out << (d == 0 ? '0' : (d > 0 ? (base == 2 ? '1' : '+') : '-'));
                out << '\n';
                out << "digit value = " << rec.digit_value.get_str() << '\n';
                out << "series value = " << rec.series_value.get_str() << '\n';
                if (rec.period_k_max == 0)
                    out << "digit periodicity: not scanned (prefix too short)\n";
                else if (rec.digit_period)
                    out << "digit periodicity: (" << claim_str(*rec.digit_period) << ") up to (M_max="
                        << rec.period_m_max << ", k_max=" << rec.period_k_max << ")\n";
                else
                    out << "digit periodicity: none up to (M_max=" << rec.period_m_max
                        << ", k_max=" << rec.period_k_max << ")\n";
            } else if (!sector_text.empty()) {
                auto angles = parse_doubles(sector_text);
                if (angles.size() != 2)
                    throw Error(Errc::invalid_argument, "--sector expects LO,HI");
                SectorSpec spec;
                spec.theta_lo = angles[0];
                spec.theta_hi = angles[1];
                spec.radii = parse_doubles(radii_text);
                spec.samples_per_arc = samples;
                spec.precision_bits = precision;
                auto report = sector_bound_probe(seq, spec, n_terms);
                write_sector_csv(out, report);
            } else {
                throw Error(Errc::invalid_argument, "eval needs one of --z, --digits, --sector");
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace aps::cli
