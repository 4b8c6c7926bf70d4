#include "apseries/arith_sequence.hpp"

#include "apseries/primality.hpp"

namespace aps {

const char* source_kind_name(SourceKind k) {
    switch (k) {
        case SourceKind::Liouville: return "liouville";
        case SourceKind::Moebius: return "moebius";
        case SourceKind::CompletelyMultiplicative: return "cm";
        case SourceKind::Literal: return "literal";
    }
    return "unknown";
}

PrimeAssignment::PrimeAssignment(int default_sign, std::map<std::uint64_t, int> exceptions)
    : default_sign_(default_sign) {
    if (default_sign != 1 && default_sign != -1)
        throw Error(Errc::invalid_argument, "default sign must be +1 or -1");
    for (const auto& [p, s] : exceptions) {
        if (s != 1 && s != -1) throw Error(Errc::invalid_argument, "prime sign must be +1 or -1");
        if (!is_prime_u64(p))
            throw Error(Errc::invalid_argument, "assignment key " + std::to_string(p) + " is not prime");
        if (s != default_sign_) exceptions_.emplace(p, s);
    }
}

int PrimeAssignment::sign_at_prime(std::uint64_t p) const {
    auto it = exceptions_.find(p);
    return it == exceptions_.end() ? default_sign_ : it->second;
}

std::optional<std::uint64_t> PrimeAssignment::smallest_negative_prime() const {
    if (default_sign_ == 1) {
        for (const auto& [p, s] : exceptions_)
            if (s == -1) return p;
        return std::nullopt;
    }
    // Default is -1: walk primes until one not overridden to +1.
    std::uint64_t p = 2;
    while (sign_at_prime(p) != -1) p = next_prime_u64(p);
    return p;
}

void pack_values(const signed char* values, std::uint64_t count, std::uint64_t first_index,
                 std::vector<std::uint8_t>& out) {
    std::uint64_t pos = first_index - 1;  // 0-based coefficient position
    for (std::uint64_t i = 0; i < count; ++i, ++pos) {
        std::uint8_t code = code_of_value(values[i]);
        out[pos >> 2] |= static_cast<std::uint8_t>(code << ((pos & 3) * 2));
    }
}

ArithSequence ArithSequence::literal(const std::vector<int>& values) {
    if (values.empty()) throw Error(Errc::invalid_argument, "literal sequence must be nonempty");
    std::vector<std::uint8_t> packed(packed_size(values.size()), 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        int v = values[i];
        if (v < -1 || v > 1)
            throw Error(Errc::invalid_argument, "literal coefficients must be in {-1, 0, +1}");
        packed[i >> 2] |= static_cast<std::uint8_t>(code_of_value(v) << ((i & 3) * 2));
    }
    return ArithSequence(SourceKind::Literal, std::move(packed), values.size(), std::nullopt);
}

ArithSequence ArithSequence::from_packed(SourceKind source, std::vector<std::uint8_t> packed,
                                         std::uint64_t length,
                                         std::optional<PrimeAssignment> assignment) {
    if (length < 1) throw Error(Errc::invalid_argument, "sequence length must be >= 1");
    if (packed.size() != packed_size(length))
        throw Error(Errc::corrupt_cache, "packed payload size does not match length");
    if (source == SourceKind::CompletelyMultiplicative && !assignment.has_value())
        throw Error(Errc::invalid_argument, "CM source requires a prime assignment");
    if (source != SourceKind::CompletelyMultiplicative) assignment.reset();

    // Unused high bits of a partial final byte must be zero.
    if (length % 4 != 0) {
        unsigned used_bits = static_cast<unsigned>((length % 4) * 2);
        if (packed.back() >> used_bits)
            throw Error(Errc::corrupt_cache, "nonzero padding bits in final byte");
    }
    for (std::uint64_t pos = 0; pos < length; ++pos) {
        std::uint8_t code = (packed[pos >> 2] >> ((pos & 3) * 2)) & 3;
        if (code == kCodeInvalid) throw Error(Errc::corrupt_cache, "invalid coefficient code 0b10");
        if (code == kCodeZero &&
            (source == SourceKind::Liouville || source == SourceKind::CompletelyMultiplicative))
            throw Error(Errc::corrupt_cache, "zero coefficient in a +-1 source");
    }

    ArithSequence seq(source, std::move(packed), length, std::move(assignment));
    if (source != SourceKind::Literal && seq[1] != 1)
        throw Error(Errc::corrupt_cache, "f(1) must be +1");
    if (source == SourceKind::Moebius) {
        for (std::uint64_t q : {4ull, 9ull, 25ull, 49ull})
            for (std::uint64_t n = q; n <= seq.length(); n += q)
                if (seq[n] != 0) throw Error(Errc::corrupt_cache, "Moebius value nonzero at a square multiple");
    }
    return seq;
}

std::vector<int> ArithSequence::values() const {
    std::vector<int> out(static_cast<std::size_t>(length_));
    for (std::uint64_t n = 1; n <= length_; ++n) out[static_cast<std::size_t>(n - 1)] = (*this)[n];
    return out;
}

} // namespace aps
