#include "apseries/cache_file.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace aps {

namespace {

struct Crc64Table {
    std::array<std::uint64_t, 256> t{};
    Crc64Table() {
        const std::uint64_t poly = 0xC96C5795D7870F42ull;  // ECMA-182 reflected
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint64_t v = i;
            for (int b = 0; b < 8; ++b) v = (v & 1) ? (v >> 1) ^ poly : v >> 1;
            t[i] = v;
        }
    }
};

const Crc64Table kCrcTable;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
public:
    Reader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}
    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(data_[pos_++]) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(data_[pos_++]) << (8 * i);
        return v;
    }
    const std::uint8_t* bytes(std::size_t n) {
        need(n);
        const std::uint8_t* p = data_ + pos_;
        pos_ += n;
        return p;
    }
    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return size_ - pos_; }

private:
    void need(std::size_t n) const {
        if (size_ - pos_ < n) throw Error(Errc::corrupt_cache, "truncated cache file");
    }
    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
};

std::uint8_t source_tag(SourceKind k) {
    switch (k) {
        case SourceKind::Liouville: return 0x00;
        case SourceKind::Moebius: return 0x01;
        case SourceKind::CompletelyMultiplicative: return 0x02;
        case SourceKind::Literal: break;
    }
    throw Error(Errc::invalid_argument, "literal sequences have no cache source tag");
}

} // namespace

std::uint64_t crc64_xz(const std::uint8_t* data, std::size_t size) {
    std::uint64_t crc = ~0ull;
    for (std::size_t i = 0; i < size; ++i)
        crc = kCrcTable.t[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
    return ~crc;
}

std::vector<std::uint8_t> cache_serialize(const ArithSequence& seq) {
    std::vector<std::uint8_t> out;
    out.reserve(seq.packed().size() + 64);
    for (char c : {'A', 'P', 'S', '1'}) out.push_back(static_cast<std::uint8_t>(c));
    out.push_back(kCacheVersion);
    out.push_back(source_tag(seq.source()));

    std::vector<std::uint8_t> blob;
    if (seq.source() == SourceKind::CompletelyMultiplicative) {
        const auto& a = *seq.assignment();
        blob.push_back(a.default_sign() == 1 ? 0x01 : 0xFF);
        put_u32(blob, static_cast<std::uint32_t>(a.exceptions().size()));
        for (const auto& [p, s] : a.exceptions()) {
            put_u64(blob, p);
            blob.push_back(s == 1 ? 0x01 : 0xFF);
        }
    }
    put_u32(out, static_cast<std::uint32_t>(blob.size()));
    out.insert(out.end(), blob.begin(), blob.end());

    put_u64(out, seq.length());
    out.insert(out.end(), seq.packed().begin(), seq.packed().end());
    put_u64(out, crc64_xz(out.data(), out.size()));
    return out;
}

ArithSequence cache_deserialize(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes.data(), bytes.size());
    const std::uint8_t* magic = r.bytes(4);
    if (std::memcmp(magic, "APS1", 4) != 0) throw Error(Errc::corrupt_cache, "bad magic");
    std::uint8_t version = r.u8();
    if (version != kCacheVersion)
        throw Error(Errc::unsupported_version,
                    "unsupported cache version " + std::to_string(version));
    std::uint8_t tag = r.u8();

    std::uint32_t blob_len = r.u32();
    std::optional<PrimeAssignment> assignment;
    SourceKind source;
    switch (tag) {
        case 0x00: source = SourceKind::Liouville; break;
        case 0x01: source = SourceKind::Moebius; break;
        case 0x02: source = SourceKind::CompletelyMultiplicative; break;
        default: throw Error(Errc::corrupt_cache, "unknown source tag");
    }
    if (source == SourceKind::CompletelyMultiplicative) {
        Reader blob(r.bytes(blob_len), blob_len);
        std::uint8_t ds = blob.u8();
        if (ds != 0x01 && ds != 0xFF) throw Error(Errc::corrupt_cache, "bad default sign byte");
        std::uint32_t count = blob.u32();
        std::map<std::uint64_t, int> exceptions;
        std::uint64_t prev = 0;
        for (std::uint32_t i = 0; i < count; ++i) {
            std::uint64_t p = blob.u64();
            std::uint8_t sb = blob.u8();
            if (sb != 0x01 && sb != 0xFF) throw Error(Errc::corrupt_cache, "bad sign byte");
            if (i > 0 && p <= prev) throw Error(Errc::corrupt_cache, "exception primes not ascending");
            prev = p;
            exceptions[p] = (sb == 0x01) ? 1 : -1;
        }
        if (blob.remaining() != 0) throw Error(Errc::corrupt_cache, "oversized assignment blob");
        try {
            assignment.emplace(ds == 0x01 ? 1 : -1, std::move(exceptions));
        } catch (const Error&) {
            throw Error(Errc::corrupt_cache, "assignment blob fails validation");
        }
    } else if (blob_len != 0) {
        throw Error(Errc::corrupt_cache, "nonempty assignment blob for a lambda/mu cache");
    }

    std::uint64_t n = r.u64();
    if (n < 1) throw Error(Errc::corrupt_cache, "cache length must be >= 1");
    std::size_t payload_len = ArithSequence::packed_size(n);
    const std::uint8_t* payload = r.bytes(payload_len);
    std::size_t crc_end = r.position();
    std::uint64_t stored_crc = r.u64();
    if (r.remaining() != 0) throw Error(Errc::corrupt_cache, "trailing bytes after checksum");
    if (crc64_xz(bytes.data(), crc_end) != stored_crc)
        throw Error(Errc::corrupt_cache, "checksum mismatch");

    return ArithSequence::from_packed(source, std::vector<std::uint8_t>(payload, payload + payload_len),
                                      n, std::move(assignment));
}

void cache_write(const ArithSequence& seq, const std::filesystem::path& path) {
    auto bytes = cache_serialize(seq);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(Errc::io_error, "cannot open " + tmp.string() + " for writing");
        f.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
        if (!f) throw Error(Errc::io_error, "short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error(Errc::io_error, "rename failed: " + ec.message());
    }
}

ArithSequence cache_read(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::io_error, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return cache_deserialize(bytes);
}

} // namespace aps
