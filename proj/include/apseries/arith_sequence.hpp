#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apseries/errors.hpp"

namespace aps {

enum class SourceKind : std::uint8_t {
    Liouville = 0,
    Moebius = 1,
    CompletelyMultiplicative = 2,
    Literal = 3,
};

const char* source_kind_name(SourceKind k);

// A completely multiplicative +-1 function, given by its values on primes:
// `default_sign` everywhere except the finitely many `exceptions`.
// Exception keys are checked for primality at construction; entries equal to
// the default sign are dropped so the stored form is canonical.
class PrimeAssignment {
public:
    PrimeAssignment(int default_sign, std::map<std::uint64_t, int> exceptions = {});

    int default_sign() const noexcept { return default_sign_; }
    const std::map<std::uint64_t, int>& exceptions() const noexcept { return exceptions_; }

    // Sign at a prime p (p is assumed prime; not re-checked here).
    int sign_at_prime(std::uint64_t p) const;

    // Smallest prime p with f(p) = -1, or nullopt for the all-+1 assignment.
    std::optional<std::uint64_t> smallest_negative_prime() const;

    bool operator==(const PrimeAssignment& o) const {
        return default_sign_ == o.default_sign_ && exceptions_ == o.exceptions_;
    }

private:
    int default_sign_;
    std::map<std::uint64_t, int> exceptions_;
};

// 2-bit coefficient codes. 0b10 is invalid and rejected wherever codes enter.
inline constexpr std::uint8_t kCodeZero = 0b00;
inline constexpr std::uint8_t kCodePlus = 0b01;
inline constexpr std::uint8_t kCodeMinus = 0b11;
inline constexpr std::uint8_t kCodeInvalid = 0b10;

inline std::uint8_t code_of_value(int v) { return v == 0 ? kCodeZero : (v > 0 ? kCodePlus : kCodeMinus); }
inline int value_of_code(std::uint8_t c) { return c == kCodeZero ? 0 : (c == kCodePlus ? 1 : -1); }

// A finite prefix (c_1, ..., c_N) of coefficients in {-1, 0, +1}, 1-indexed,
// stored 4 coefficients per byte (lowest bits first). Immutable after
// construction and safe to share across threads.
class ArithSequence {
public:
    static ArithSequence literal(const std::vector<int>& values);

    // Used by the sieves and the cache loader. Validates codes (0b10 rejected)
    // and the cheap source invariants: values[1] = +1 for the three arithmetic
    // sources, no zeros for Liouville/CM, zeros at small square multiples for
    // Moebius.
    static ArithSequence from_packed(SourceKind source, std::vector<std::uint8_t> packed,
                                     std::uint64_t length,
                                     std::optional<PrimeAssignment> assignment = std::nullopt);

    std::uint64_t length() const noexcept { return length_; }
    SourceKind source() const noexcept { return source_; }
    const std::optional<PrimeAssignment>& assignment() const noexcept { return assignment_; }
    const std::vector<std::uint8_t>& packed() const noexcept { return packed_; }

    // 1-indexed unchecked access.
    int operator[](std::uint64_t n) const {
        std::uint64_t pos = n - 1;
        return value_of_code((packed_[pos >> 2] >> ((pos & 3) * 2)) & 3);
    }

    // 1-indexed checked access.
    int at(std::uint64_t n) const {
        if (n < 1 || n > length_) throw Error(Errc::out_of_range, "sequence index out of range");
        return (*this)[n];
    }

    std::vector<int> values() const;

    static std::size_t packed_size(std::uint64_t length) {
        return static_cast<std::size_t>((length + 3) / 4);
    }

private:
    ArithSequence(SourceKind source, std::vector<std::uint8_t> packed, std::uint64_t length,
                  std::optional<PrimeAssignment> assignment)
        : source_(source), packed_(std::move(packed)), length_(length),
          assignment_(std::move(assignment)) {}

    SourceKind source_;
    std::vector<std::uint8_t> packed_;
    std::uint64_t length_;
    std::optional<PrimeAssignment> assignment_;
};

// Helper for the sieves: pack a slice of int8 values into 2-bit codes.
// `first_index` is 1-based and must satisfy (first_index - 1) % 4 == 0.
void pack_values(const signed char* values, std::uint64_t count, std::uint64_t first_index,
                 std::vector<std::uint8_t>& out);

} // namespace aps
