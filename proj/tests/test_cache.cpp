#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>

#include "apseries/cache_file.hpp"
#include "apseries/sieves.hpp"

using namespace aps;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::io_error;
}

// Patch a serialized cache and fix up its checksum so only the intended
// corruption is visible.
std::vector<std::uint8_t> with_fixed_crc(std::vector<std::uint8_t> bytes) {
    std::uint64_t crc = crc64_xz(bytes.data(), bytes.size() - 8);
    for (int i = 0; i < 8; ++i)
        bytes[bytes.size() - 8 + static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(crc >> (8 * i));
    return bytes;
}

} // namespace

TEST_CASE("crc64 reference vector") {
    const char* s = "123456789";
    CHECK(crc64_xz(reinterpret_cast<const std::uint8_t*>(s), 9) == 0x995DC9BBDF1939FAull);
    CHECK(crc64_xz(nullptr, 0) == 0);
}

TEST_CASE("round trips for every source tag and ragged lengths") {
    PrimeAssignment mixed(-1, {{3, 1}, {101, 1}});
    for (std::uint64_t n : {1ull, 2ull, 3ull, 4ull, 5ull, 1000ull}) {
        auto lam = sieve_liouville(n);
        auto mu = sieve_mobius(n);
        auto cm = sieve_cm(mixed, n);
        for (const auto* seq : {&lam, &mu, &cm}) {
            auto bytes = cache_serialize(*seq);
            auto back = cache_deserialize(bytes);
            CAPTURE(n);
            REQUIRE(back.length() == seq->length());
            REQUIRE(back.source() == seq->source());
            REQUIRE(back.values() == seq->values());
            REQUIRE(cache_serialize(back) == bytes);  // byte-exact round trip
        }
        auto back = cache_deserialize(cache_serialize(cm));
        REQUIRE(back.assignment().has_value());
        REQUIRE(*back.assignment() == mixed);
    }
}

TEST_CASE("file round trip is atomic-renamed") {
    auto dir = std::filesystem::temp_directory_path() / "apseries_cache_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "lambda.aps";
    auto lam = sieve_liouville(1000);
    cache_write(lam, path);
    CHECK(!std::filesystem::exists(path.string() + ".tmp"));
    auto back = cache_read(path);
    CHECK(back.values() == lam.values());
    std::filesystem::remove_all(dir);

    CHECK(code_of([&] { cache_read(dir / "missing.aps"); }) == Errc::io_error);
    CHECK(code_of([&] { cache_write(lam, dir / "no_such_dir" / "x.aps"); }) == Errc::io_error);
}

TEST_CASE("corruption and version rejection") {
    auto lam = sieve_liouville(10);
    auto bytes = cache_serialize(lam);

    // Truncation at every prefix length is caught.
    for (std::size_t keep : {std::size_t(0), std::size_t(3), std::size_t(10), bytes.size() - 1}) {
        std::vector<std::uint8_t> cut(bytes.begin(), bytes.begin() + static_cast<long>(keep));
        CHECK(code_of([&] { cache_deserialize(cut); }) == Errc::corrupt_cache);
    }

    auto bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK(code_of([&] { cache_deserialize(bad_magic); }) == Errc::corrupt_cache);

    auto bad_version = bytes;
    bad_version[4] = 0x02;
    CHECK(code_of([&] { cache_deserialize(bad_version); }) == Errc::unsupported_version);

    auto flipped = bytes;
    flipped[12] ^= 0x40;
    CHECK(code_of([&] { cache_deserialize(flipped); }) == Errc::corrupt_cache);

    auto trailing = bytes;
    trailing.push_back(0);
    CHECK(code_of([&] { cache_deserialize(trailing); }) == Errc::corrupt_cache);

    // Code 0b10 with a recomputed checksum still fails, now on the payload.
    auto bad_code = bytes;
    std::size_t payload_at = 4 + 1 + 1 + 4 + 8;  // magic, version, tag, blob len, N
    bad_code[payload_at] = (bad_code[payload_at] & ~0x0Cu) | 0x08u;  // second entry -> 0b10
    bad_code = with_fixed_crc(bad_code);
    CHECK(code_of([&] { cache_deserialize(bad_code); }) == Errc::corrupt_cache);

    // A zero coefficient smuggled into a Liouville cache violates the source
    // invariant even with a valid checksum.
    auto zeroed = bytes;
    zeroed[payload_at] &= ~0x0Cu;
    zeroed = with_fixed_crc(zeroed);
    CHECK(code_of([&] { cache_deserialize(zeroed); }) == Errc::corrupt_cache);
}

TEST_CASE("literal sequences have no cache representation") {
    auto lit = ArithSequence::literal({1, 0, -1});
    CHECK(code_of([&] { cache_serialize(lit); }) == Errc::invalid_argument);
}
