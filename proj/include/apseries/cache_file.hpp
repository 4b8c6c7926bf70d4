#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "apseries/arith_sequence.hpp"

namespace aps {

// Binary cache layout (bit-exact, little-endian):
//   magic   "APS1"                      4 bytes
//   version 0x01                        1 byte
//   source  0x00 Liouville / 0x01 Moebius / 0x02 CM
//   assignment blob, u32-length-prefixed (empty for Liouville/Moebius):
//     default sign byte (0x01 = +1, 0xFF = -1), u32 exception count,
//     then per exception u64 prime + sign byte, primes ascending
//   N       u64
//   payload ceil(N/4) bytes of 2-bit codes, n = 1 first, lowest bits first
//   crc     u64 CRC-64/XZ of all preceding bytes
//
// Literal-source sequences have no tag in this format and are rejected.

inline constexpr std::uint8_t kCacheVersion = 0x01;

// CRC-64/XZ (ECMA-182 polynomial, reflected, init/xorout all-ones).
std::uint64_t crc64_xz(const std::uint8_t* data, std::size_t size);

std::vector<std::uint8_t> cache_serialize(const ArithSequence& seq);
ArithSequence cache_deserialize(const std::vector<std::uint8_t>& bytes);

// Atomic write: temp file in the target directory, then rename.
void cache_write(const ArithSequence& seq, const std::filesystem::path& path);
ArithSequence cache_read(const std::filesystem::path& path);

} // namespace aps
