#pragma once

#include <stdexcept>
#include <string>

namespace aps {

// Error categories surfaced by the library. The CLI maps user-facing
// categories to exit code 1 and data/precision categories to exit code 2.
enum class Errc {
    invalid_argument,
    out_of_range,
    no_negative_prime,
    invalid_claim,
    unsupported_alphabet,
    indeterminate_at_precision,
    corrupt_cache,
    unsupported_version,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::out_of_range: return "out-of-range";
        case Errc::no_negative_prime: return "no-negative-prime";
        case Errc::invalid_claim: return "invalid-claim";
        case Errc::unsupported_alphabet: return "unsupported-alphabet";
        case Errc::indeterminate_at_precision: return "indeterminate-at-precision";
        case Errc::corrupt_cache: return "corrupt-cache";
        case Errc::unsupported_version: return "unsupported-version";
        case Errc::io_error: return "io-error";
    }
    return "unknown";
}

} // namespace aps
