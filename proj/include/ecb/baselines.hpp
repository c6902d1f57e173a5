#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ecb/bitplane.hpp"
#include "ecb/error.hpp"

// Classical binarization codes used as bit-count baselines. Conventions:
// unary and truncated unary are ones terminated by a zero (the cMax code
// drops the terminator); fixed-length is big-endian; Exp-Golomb uses the
// leading-zeros-then-one prefix with q+k suffix bits.
namespace ecb::baselines {

inline void unary_encode(std::uint64_t n, BitPlane& out) {
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(true);
    out.push_back(false);
}

inline std::uint64_t unary_decode(BitReader& r) {
    std::uint64_t n = 0;
    while (r.read()) ++n;
    return n;
}

inline std::uint64_t unary_length(std::uint64_t n) { return n + 1; }

inline void truncated_unary_encode(std::uint64_t n, std::uint64_t c_max, BitPlane& out) {
    if (c_max == 0) throw Error(Errc::DomainError, "cMax must be positive");
    if (n > c_max) throw Error(Errc::OutOfRange, "value exceeds cMax");
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(true);
    if (n < c_max) out.push_back(false);
}

inline std::uint64_t truncated_unary_decode(BitReader& r, std::uint64_t c_max) {
    std::uint64_t n = 0;
    while (n < c_max && r.read()) ++n;
    return n;
}

inline std::uint64_t truncated_unary_length(std::uint64_t n, std::uint64_t c_max) {
    return n < c_max ? n + 1 : n;
}

inline void fixed_length_encode(std::uint64_t n, unsigned width, BitPlane& out) {
    if (width == 0 || width > 63) throw Error(Errc::DomainError, "width must be in 1..63");
    if (n >= (std::uint64_t{1} << width)) throw Error(Errc::OutOfRange, "value needs more bits");
    for (unsigned i = width; i-- > 0;) out.push_back((n >> i) & 1u);
}

inline std::uint64_t fixed_length_decode(BitReader& r, unsigned width) {
    std::uint64_t n = 0;
    for (unsigned i = 0; i < width; ++i) n = (n << 1) | (r.read() ? 1u : 0u);
    return n;
}

// k-th order Exp-Golomb: q = floor(log2(n/2^k + 1)) leading zeros, a one,
// then q+k bits of n - (2^(q+k) - 2^k).
inline void exp_golomb_encode(std::uint64_t n, unsigned k, BitPlane& out) {
    if (k > 32) throw Error(Errc::DomainError, "k must be in 0..32");
    const std::uint64_t u = (n >> k) + 1;
    const unsigned q = std::bit_width(u) - 1;
    for (unsigned i = 0; i < q; ++i) out.push_back(false);
    out.push_back(true);
    const std::uint64_t suffix = n - ((std::uint64_t{1} << (q + k)) - (std::uint64_t{1} << k));
    for (unsigned i = q + k; i-- > 0;) out.push_back((suffix >> i) & 1u);
}

inline std::uint64_t exp_golomb_decode(BitReader& r, unsigned k) {
    unsigned q = 0;
    while (!r.read()) ++q;
    std::uint64_t suffix = 0;
    for (unsigned i = 0; i < q + k; ++i) suffix = (suffix << 1) | (r.read() ? 1u : 0u);
    return (std::uint64_t{1} << (q + k)) - (std::uint64_t{1} << k) + suffix;
}

inline std::uint64_t exp_golomb_length(std::uint64_t n, unsigned k) {
    const unsigned q = std::bit_width((n >> k) + 1) - 1;
    return 2ull * q + k + 1;
}

enum class Scheme { Unary, TruncatedUnary, FixedLength, ExpGolomb };

inline const char* scheme_name(Scheme s) {
    switch (s) {
    case Scheme::Unary:          return "unary";
    case Scheme::TruncatedUnary: return "truncated_unary";
    case Scheme::FixedLength:    return "fixed_length";
    case Scheme::ExpGolomb:      return "exp_golomb";
    }
    return "?";
}

// Symbol-index -> codeword mapping for one scheme/parameter choice.
// Indices are assigned by the caller; descending frequency gets the
// smallest index for the favorable assignment.
struct CodewordTable {
    Scheme scheme;
    std::uint64_t param = 0;  // cMax, width, or k depending on scheme
    std::vector<std::string> codewords;

    static CodewordTable build(Scheme scheme, std::uint64_t param, std::size_t m) {
        CodewordTable t;
        t.scheme = scheme;
        t.param = param;
        t.codewords.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            BitPlane bits;
            switch (scheme) {
            case Scheme::Unary:          unary_encode(i, bits); break;
            case Scheme::TruncatedUnary: truncated_unary_encode(i, param, bits); break;
            case Scheme::FixedLength:    fixed_length_encode(i, static_cast<unsigned>(param), bits); break;
            case Scheme::ExpGolomb:      exp_golomb_encode(i, static_cast<unsigned>(param), bits); break;
            }
            t.codewords.push_back(bits.to_string());
        }
        return t;
    }
};

}  // namespace ecb::baselines
