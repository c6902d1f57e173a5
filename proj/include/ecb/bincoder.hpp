#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecb/bitplane.hpp"
#include "ecb/error.hpp"

namespace ecb {

// Adaptive probability model for one plane: Laplace-style occurrence
// counts, p(1) = c1/(c0+c1). Counts start at (1,1) and both halve with
// ceiling division when their sum would exceed 2^16, so each stays >= 1
// and the split arithmetic below never overflows 64 bits.
struct AdaptiveBitModel {
    std::uint32_t c0 = 1;
    std::uint32_t c1 = 1;

    static constexpr std::uint32_t rescale_limit = 1u << 16;

    void update(unsigned bit) {
        if (bit) ++c1; else ++c0;
        if (c0 + c1 > rescale_limit) {
            c0 = (c0 + 1) >> 1;
            c1 = (c1 + 1) >> 1;
        }
    }
};

namespace detail {

// range stays in [2^24, 2^32) between symbols; low accumulates into a
// 64-bit word whose bit 32 is the carry into already-buffered bytes.
inline constexpr std::uint32_t rc_top = 1u << 24;

inline std::uint32_t rc_split(std::uint32_t range, const AdaptiveBitModel& m) {
    const std::uint32_t total = m.c0 + m.c1;
    auto split = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(range) * m.c1) / total);
    if (split == 0) split = 1;
    if (split >= range) split = range - 1;
    return split;
}

}  // namespace detail

// Byte-wise renormalizing range encoder. Carries propagate through a
// cached byte plus a run of pending 0xFF bytes.
class RangeEncoder {
public:
    explicit RangeEncoder(std::vector<std::uint8_t>& out) : out_(&out) {}

    void encode(AdaptiveBitModel& m, unsigned bit) {
        const std::uint32_t split = detail::rc_split(range_, m);
        if (bit) {
            range_ = split;
        } else {
            low_ += split;
            range_ -= split;
        }
        m.update(bit);
        while (range_ < detail::rc_top) {
            range_ <<= 8;
            shift_low();
        }
    }

    // Emits the five bytes that pin down the final interval. The encoder
    // must not be reused afterwards.
    void finish() {
        for (int i = 0; i < 5; ++i) shift_low();
    }

private:
    void shift_low() {
        if (static_cast<std::uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
            const auto carry = static_cast<std::uint8_t>(low_ >> 32);
            do {
                out_->push_back(static_cast<std::uint8_t>(cache_ + carry));
                cache_ = 0xFF;
            } while (--pending_ != 0);
            cache_ = static_cast<std::uint8_t>(low_ >> 24);
        }
        ++pending_;
        low_ = (static_cast<std::uint32_t>(low_) << 8) & 0xFFFFFFFFu;
    }

    std::vector<std::uint8_t>* out_;
    std::uint64_t low_ = 0;
    std::uint32_t range_ = 0xFFFFFFFFu;
    std::uint8_t cache_ = 0;
    std::uint64_t pending_ = 1;  // includes the leading byte emitted on first flush
};

// Mirror of RangeEncoder; consumes exactly the bytes the encoder emitted.
class RangeDecoder {
public:
    explicit RangeDecoder(std::span<const std::uint8_t> in) : p_(in.data()), end_(in.data() + in.size()) {
        for (int i = 0; i < 5; ++i) code_ = (code_ << 8) | next_byte();
    }

    unsigned decode(AdaptiveBitModel& m) {
        const std::uint32_t split = detail::rc_split(range_, m);
        unsigned bit;
        if (code_ < split) {
            bit = 1;
            range_ = split;
        } else {
            bit = 0;
            code_ -= split;
            range_ -= split;
        }
        m.update(bit);
        while (range_ < detail::rc_top) {
            range_ <<= 8;
            code_ = (code_ << 8) | next_byte();
        }
        return bit;
    }

    std::size_t consumed() const noexcept { return consumed_; }

private:
    std::uint8_t next_byte() {
        if (p_ == end_)
            throw Error(Errc::TruncatedPayload,
                        "payload exhausted after " + std::to_string(consumed_) + " bytes");
        ++consumed_;
        return *p_++;
    }

    const std::uint8_t* p_;
    const std::uint8_t* end_;
    std::uint32_t code_ = 0;
    std::uint32_t range_ = 0xFFFFFFFFu;
    std::size_t consumed_ = 0;
};

// One fresh model per plane; the plane is the context.
inline std::vector<std::uint8_t> encode_plane(const BitPlane& plane) {
    std::vector<std::uint8_t> payload;
    payload.reserve(static_cast<size_t>(plane.size() / 8) / 2 + 16);
    RangeEncoder enc(payload);
    AdaptiveBitModel model;
    for (std::uint64_t i = 0; i < plane.size(); ++i) enc.encode(model, plane[i] ? 1u : 0u);
    enc.finish();
    return payload;
}

inline BitPlane decode_plane(std::span<const std::uint8_t> payload, std::uint64_t len) {
    BitPlane plane;
    plane.reserve(len);
    RangeDecoder dec(payload);
    AdaptiveBitModel model;
    for (std::uint64_t i = 0; i < len; ++i) plane.push_back(dec.decode(model) != 0);
    return plane;
}

}  // namespace ecb
