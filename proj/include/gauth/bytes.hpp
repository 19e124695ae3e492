#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gauth {

using Bytes = std::vector<uint8_t>;

/// Append-only big-endian serializer for the wire formats.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }

    void u32be(uint32_t v) {
        for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
    }

    void u64be(uint64_t v) {
        for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
    }

    void raw(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

/// Cursor-based reader matching ByteWriter. Out-of-range reads throw.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8();
    uint32_t u32be();
    uint64_t u64be();
    Bytes raw(size_t n);
    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }

private:
    void need(size_t n) const;

    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(const std::string& hex);

/// FNV-1a 64-bit. Used for transcript fingerprints and channel key
/// derivation in the test cipher; not a cryptographic hash.
uint64_t fnv1a64(std::span<const uint8_t> data, uint64_t seed = 0xcbf29ce484222325ULL);

} // namespace gauth
