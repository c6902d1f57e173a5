#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ecb/alphabet.hpp"
#include "ecb/bitplane.hpp"
#include "ecb/error.hpp"

namespace ecb {

// The m-1 binary planes produced by peeling symbols off the stream in
// order. Plane i is the indicator of symbol order[i] over the residual
// stream left after removing symbols order[0..i-1]; the final symbol's
// all-ones plane is never emitted.
struct PlaneSet {
    std::vector<BitPlane> planes;
    Alphabet alphabet;
    BinarizationOrder order;

    bool operator==(const PlaneSet&) const = default;
};

// Expected bit length of each emitted plane: element i is N minus the
// counts of the first i peeled symbols.
inline std::vector<std::uint64_t> plane_lengths(const Alphabet& a, const BinarizationOrder& o) {
    validate_order(a, o);
    std::vector<std::uint64_t> lens;
    if (a.size() < 2) return lens;
    lens.reserve(a.size() - 1);
    std::uint64_t remaining = a.total;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        lens.push_back(remaining);
        remaining -= a.counts[o.sequence[i]];
    }
    return lens;
}

// Decompose data into m-1 indicator planes. bit_ops, when given, receives
// the number of bit assignments performed (== sum of plane lengths).
inline PlaneSet binarize(std::span<const std::uint8_t> data, const Alphabet& a,
                         const BinarizationOrder& o, std::uint64_t* bit_ops = nullptr) {
    validate_order(a, o);

    std::array<bool, 256> member{};
    for (std::uint8_t s : a.symbols) member[s] = true;
    for (std::size_t i = 0; i < data.size(); ++i)
        if (!member[data[i]])
            throw Error(Errc::SymbolNotInAlphabet,
                        "byte " + std::to_string(data[i]) + " at position " + std::to_string(i));

    PlaneSet ps;
    ps.alphabet = a;
    ps.order = o;
    std::uint64_t ops = 0;

    if (a.size() >= 2) {
        ps.planes.reserve(a.size() - 1);
        std::vector<std::uint8_t> residual(data.begin(), data.end());
        std::vector<std::uint8_t> next;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            const std::uint8_t sym = a.symbols[o.sequence[i]];
            BitPlane plane;
            plane.reserve(residual.size());
            next.clear();
            next.reserve(residual.size());
            for (std::uint8_t b : residual) {
                const bool hit = (b == sym);
                plane.push_back(hit);
                ++ops;
                if (!hit) next.push_back(b);
            }
            ps.planes.push_back(std::move(plane));
            residual.swap(next);
        }
    }
    if (bit_ops) *bit_ops = ops;
    return ps;
}

// Reconstruct the source stream. Single left-to-right pass with one read
// cursor per plane: at each output position, planes are consulted in
// order until a 1-bit names the symbol, or every plane yields 0 and the
// final symbol in the order is emitted. Each stored bit is read exactly
// once.
inline std::vector<std::uint8_t> debinarize(const PlaneSet& ps, std::uint64_t* bit_ops = nullptr) {
    const Alphabet& a = ps.alphabet;
    const std::size_t m = a.size();
    const std::uint64_t total = a.total;
    validate_order(a, ps.order);

    const std::size_t expected_planes = m >= 2 ? m - 1 : 0;
    if (ps.planes.size() != expected_planes)
        throw Error(Errc::PlaneLengthMismatch,
                    "expected " + std::to_string(expected_planes) + " planes, got " +
                        std::to_string(ps.planes.size()));
    if (m == 0 && total != 0)
        throw Error(Errc::PlaneLengthMismatch, "nonzero length with empty alphabet");

    // Chained lengths: plane 0 covers the whole stream, each later plane
    // covers what the previous plane's 1-bits removed.
    std::uint64_t expect_len = total;
    for (const BitPlane& p : ps.planes) {
        if (p.size() != expect_len)
            throw Error(Errc::PlaneLengthMismatch,
                        "plane length " + std::to_string(p.size()) + ", expected " +
                            std::to_string(expect_len));
        expect_len -= p.ones();
    }

    std::vector<std::uint8_t> out;
    out.reserve(static_cast<size_t>(total));
    std::uint64_t ops = 0;

    if (m == 1) {
        out.assign(static_cast<size_t>(total), a.symbols[0]);
        if (bit_ops) *bit_ops = 0;
        return out;
    }

    std::vector<std::uint64_t> cursor(ps.planes.size(), 0);
    const std::uint8_t last_sym = a.symbols[ps.order.sequence[m - 1]];
    for (std::uint64_t pos = 0; pos < total; ++pos) {
        std::uint8_t sym = last_sym;
        for (std::size_t i = 0; i < ps.planes.size(); ++i) {
            if (cursor[i] >= ps.planes[i].size())
                throw Error(Errc::PlaneUnderflow, "plane " + std::to_string(i) +
                                                      " exhausted at position " +
                                                      std::to_string(pos));
            const bool bit = ps.planes[i][cursor[i]++];
            ++ops;
            if (bit) {
                sym = a.symbols[ps.order.sequence[i]];
                break;
            }
        }
        out.push_back(sym);
    }
    if (bit_ops) *bit_ops = ops;
    return out;
}

}  // namespace ecb
