#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecb/error.hpp"

namespace ecb {

// Packed binary sequence with an exact bit count. Bits are stored
// MSB-first within each byte, so to_string() reads left to right in
// stream order and hex dumps match the written bit order. Pad bits in
// the last byte are always zero, which makes operator== on the raw
// bytes well defined.
class BitPlane {
public:
    BitPlane() = default;

    explicit BitPlane(std::vector<std::uint8_t> bytes, std::uint64_t len)
        : bytes_(std::move(bytes)), len_(len) {
        if (bytes_.size() != (len_ + 7) / 8)
            throw Error(Errc::PlaneLengthMismatch, "packed size does not match bit length");
        if (len_ % 8 != 0 && (bytes_.back() & (0xFFu >> (len_ % 8))) != 0)
            throw Error(Errc::PlaneLengthMismatch, "nonzero pad bits");
    }

    void reserve(std::uint64_t bits) { bytes_.reserve(static_cast<size_t>((bits + 7) / 8)); }

    void push_back(bool bit) {
        if ((len_ & 7) == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (len_ & 7));
        ++len_;
    }

    bool operator[](std::uint64_t i) const {
        return (bytes_[static_cast<size_t>(i >> 3)] >> (7 - (i & 7))) & 1u;
    }

    std::uint64_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    // Number of 1-bits. Pad bits are zero, so whole bytes can be popcounted.
    std::uint64_t ones() const noexcept {
        std::uint64_t n = 0;
        for (std::uint8_t b : bytes_) n += static_cast<unsigned>(std::popcount(b));
        return n;
    }

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    std::string to_string() const {
        std::string s;
        s.reserve(static_cast<size_t>(len_));
        for (std::uint64_t i = 0; i < len_; ++i) s.push_back((*this)[i] ? '1' : '0');
        return s;
    }

    static BitPlane from_string(std::string_view s) {
        BitPlane p;
        p.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw Error(Errc::DomainError, "bit string must be 0/1");
            p.push_back(c == '1');
        }
        return p;
    }

    bool operator==(const BitPlane&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t len_ = 0;
};

// Read cursor over a BitPlane for the prefix-code decoders.
class BitReader {
public:
    explicit BitReader(const BitPlane& plane) : plane_(&plane) {}

    bool read() {
        if (pos_ >= plane_->size())
            throw Error(Errc::OutOfRange, "bit stream exhausted");
        return (*plane_)[pos_++];
    }

    std::uint64_t position() const noexcept { return pos_; }
    bool at_end() const noexcept { return pos_ == plane_->size(); }

private:
    const BitPlane* plane_;
    std::uint64_t pos_ = 0;
};

}  // namespace ecb
