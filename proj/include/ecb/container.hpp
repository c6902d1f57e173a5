#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "ecb/binarizer.hpp"
#include "ecb/error.hpp"

namespace ecb {

// On-disk layout, all integers little-endian:
//
//   "ECB1"          magic, 4 bytes
//   version         u8, currently 1
//   m               u16, alphabet size
//   symbols         m x u8
//   order           m x u8, permutation of 0..m-1
//   N               u64, original stream length
//   plane_count     u16, max(m-1, 0)
//   per plane:      bit_len u64, payload_len u64, payload bytes
//
// Counts are not stored; the decoder recovers them from decoded planes.
inline constexpr std::array<std::uint8_t, 4> container_magic = {'E', 'C', 'B', '1'};
inline constexpr std::uint8_t container_version = 1;

struct PlaneRecord {
    std::uint64_t bit_len = 0;
    std::vector<std::uint8_t> payload;

    bool operator==(const PlaneRecord&) const = default;
};

struct Container {
    std::vector<std::uint8_t> symbols;
    std::vector<std::uint8_t> order;  // alphabet indices
    std::uint64_t n = 0;
    std::vector<PlaneRecord> planes;

    bool operator==(const Container&) const = default;
};

namespace detail {

inline void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class ByteParser {
public:
    explicit ByteParser(std::span<const std::uint8_t> in) : in_(in) {}

    std::uint64_t offset() const noexcept { return pos_; }
    std::uint64_t remaining() const noexcept { return in_.size() - pos_; }

    std::uint8_t u8(const char* field) {
        need(1, field);
        return in_[pos_++];
    }

    std::uint16_t u16(const char* field) {
        need(2, field);
        std::uint16_t v = static_cast<std::uint16_t>(in_[pos_]) |
                          static_cast<std::uint16_t>(in_[pos_ + 1]) << 8;
        pos_ += 2;
        return v;
    }

    std::uint64_t u64(const char* field) {
        need(8, field);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    std::vector<std::uint8_t> bytes(std::uint64_t len, const char* field, Errc on_short) {
        if (remaining() < len)
            throw Error(on_short, std::string(field) + " needs " + std::to_string(len) +
                                      " bytes, " + std::to_string(remaining()) + " left",
                        pos_);
        auto p = in_.begin() + static_cast<std::ptrdiff_t>(pos_);
        pos_ += len;
        return std::vector<std::uint8_t>(p, p + static_cast<std::ptrdiff_t>(len));
    }

private:
    void need(std::uint64_t n, const char* field) {
        if (remaining() < n)
            throw Error(Errc::TruncatedHeader, std::string("truncated at field ") + field, pos_);
    }

    std::span<const std::uint8_t> in_;
    std::uint64_t pos_ = 0;
};

}  // namespace detail

inline std::vector<std::uint8_t> write_container(const Container& c) {
    const std::size_t m = c.symbols.size();
    if (m > 256) throw Error(Errc::InconsistentInput, "alphabet larger than 256 symbols");
    if (c.order.size() != m) throw Error(Errc::InconsistentInput, "order/symbol count mismatch");
    const std::size_t expected_planes = m >= 2 ? m - 1 : 0;
    if (c.planes.size() != expected_planes)
        throw Error(Errc::InconsistentInput, "plane record count mismatch");

    std::vector<std::uint8_t> out;
    std::uint64_t payload_total = 0;
    for (const PlaneRecord& p : c.planes) payload_total += p.payload.size();
    out.reserve(4 + 1 + 2 + 2 * m + 8 + 2 + 16 * c.planes.size() +
                static_cast<std::size_t>(payload_total));

    out.insert(out.end(), container_magic.begin(), container_magic.end());
    out.push_back(container_version);
    detail::put_u16(out, static_cast<std::uint16_t>(m));
    out.insert(out.end(), c.symbols.begin(), c.symbols.end());
    out.insert(out.end(), c.order.begin(), c.order.end());
    detail::put_u64(out, c.n);
    detail::put_u16(out, static_cast<std::uint16_t>(c.planes.size()));
    for (const PlaneRecord& p : c.planes) {
        detail::put_u64(out, p.bit_len);
        detail::put_u64(out, p.payload.size());
        out.insert(out.end(), p.payload.begin(), p.payload.end());
    }
    return out;
}

// Serialize a binarized stream plus its per-plane compressed payloads.
inline std::vector<std::uint8_t> write_container(const PlaneSet& ps,
                                                 const std::vector<std::vector<std::uint8_t>>& payloads) {
    if (payloads.size() != ps.planes.size())
        throw Error(Errc::InconsistentInput, "payload count does not match plane count");
    Container c;
    c.symbols = ps.alphabet.symbols;
    c.order = ps.order.sequence;
    c.n = ps.alphabet.total;
    c.planes.reserve(ps.planes.size());
    for (std::size_t i = 0; i < ps.planes.size(); ++i)
        c.planes.push_back(PlaneRecord{ps.planes[i].size(), payloads[i]});
    return write_container(c);
}

inline Container read_container(std::span<const std::uint8_t> bytes) {
    detail::ByteParser p(bytes);

    const std::uint64_t magic_off = p.offset();
    const auto magic = p.bytes(4, "magic", Errc::TruncatedHeader);
    if (!std::equal(magic.begin(), magic.end(), container_magic.begin()))
        throw Error(Errc::BadMagic, "expected ECB1", magic_off);

    const std::uint64_t version_off = p.offset();
    const std::uint8_t version = p.u8("version");
    if (version != container_version)
        throw Error(Errc::UnsupportedVersion, "version " + std::to_string(version), version_off);

    const std::uint16_t m = p.u16("m");
    if (m > 256)
        throw Error(Errc::ChainInvariantViolated, "alphabet size " + std::to_string(m),
                    p.offset() - 2);

    Container c;
    const std::uint64_t symbols_off = p.offset();
    c.symbols = p.bytes(m, "symbols", Errc::TruncatedHeader);
    {
        std::array<bool, 256> seen{};
        for (std::size_t i = 0; i < c.symbols.size(); ++i) {
            if (seen[c.symbols[i]])
                throw Error(Errc::InconsistentInput, "duplicate symbol", symbols_off + i);
            seen[c.symbols[i]] = true;
        }
    }

    const std::uint64_t order_off = p.offset();
    c.order = p.bytes(m, "order", Errc::TruncatedHeader);
    {
        std::array<bool, 256> seen{};
        for (std::size_t i = 0; i < c.order.size(); ++i) {
            if (c.order[i] >= m || seen[c.order[i]])
                throw Error(Errc::InconsistentInput, "order is not a permutation", order_off + i);
            seen[c.order[i]] = true;
        }
    }

    const std::uint64_t n_off = p.offset();
    c.n = p.u64("N");
    if (m == 0 && c.n != 0)
        throw Error(Errc::ChainInvariantViolated, "nonzero N with empty alphabet", n_off);

    const std::uint64_t plane_count_off = p.offset();
    const std::uint16_t plane_count = p.u16("plane_count");
    const std::uint16_t expected_planes = m >= 2 ? static_cast<std::uint16_t>(m - 1) : 0;
    if (plane_count != expected_planes)
        throw Error(Errc::ChainInvariantViolated,
                    "plane count " + std::to_string(plane_count) + ", expected " +
                        std::to_string(expected_planes),
                    plane_count_off);

    std::uint64_t prev_len = c.n;
    c.planes.reserve(plane_count);
    for (std::uint16_t i = 0; i < plane_count; ++i) {
        const std::uint64_t bit_len_off = p.offset();
        PlaneRecord rec;
        rec.bit_len = p.u64("bit_len");
        // Plane 0 spans the whole stream; later planes can only shrink.
        if (i == 0 ? rec.bit_len != c.n : rec.bit_len > prev_len)
            throw Error(Errc::ChainInvariantViolated,
                        "plane " + std::to_string(i) + " bit length " +
                            std::to_string(rec.bit_len),
                        bit_len_off);
        prev_len = rec.bit_len;
        const std::uint64_t payload_len = p.u64("payload_len");
        rec.payload = p.bytes(payload_len, "payload", Errc::TruncatedPayload);
        c.planes.push_back(std::move(rec));
    }

    if (p.remaining() != 0)
        throw Error(Errc::InconsistentInput,
                    std::to_string(p.remaining()) + " trailing bytes", p.offset());
    return c;
}

}  // namespace ecb
