#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ecb/error.hpp"

namespace ecb {

// Symbol set of a byte stream: distinct symbol values in first-occurrence
// order with exact occurrence counts. m = symbols.size() <= 256.
struct Alphabet {
    std::vector<std::uint8_t> symbols;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    std::size_t size() const noexcept { return symbols.size(); }

    // Validating constructor for declared alphabets. Zero counts are
    // rejected here so the entropy formulas never see p == 0.
    static Alphabet from_parts(std::vector<std::uint8_t> symbols,
                               std::vector<std::uint64_t> counts) {
        if (symbols.size() != counts.size())
            throw Error(Errc::InconsistentInput, "symbols/counts size mismatch");
        std::array<bool, 256> seen{};
        for (std::uint8_t s : symbols) {
            if (seen[s]) throw Error(Errc::InconsistentInput, "duplicate symbol");
            seen[s] = true;
        }
        for (std::uint64_t c : counts)
            if (c == 0) throw Error(Errc::DomainError, "zero-count symbol");
        Alphabet a;
        a.total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
        a.symbols = std::move(symbols);
        a.counts = std::move(counts);
        return a;
    }

    bool operator==(const Alphabet&) const = default;
};

// Permutation of alphabet indices; sequence[i] is the index of the symbol
// peeled at iteration i.
struct BinarizationOrder {
    std::vector<std::uint8_t> sequence;

    static BinarizationOrder identity(std::size_t m) {
        BinarizationOrder o;
        o.sequence.resize(m);
        for (std::size_t i = 0; i < m; ++i) o.sequence[i] = static_cast<std::uint8_t>(i);
        return o;
    }

    bool operator==(const BinarizationOrder&) const = default;
};

inline Alphabet discover_alphabet(std::span<const std::uint8_t> data) {
    std::array<std::uint64_t, 256> count{};
    std::array<std::int16_t, 256> index;
    index.fill(-1);
    Alphabet a;
    for (std::uint8_t b : data) {
        if (index[b] < 0) {
            index[b] = static_cast<std::int16_t>(a.symbols.size());
            a.symbols.push_back(b);
        }
        ++count[b];
    }
    a.counts.reserve(a.symbols.size());
    for (std::uint8_t s : a.symbols) a.counts.push_back(count[s]);
    a.total = data.size();
    return a;
}

// Throws NotAPermutation unless o.sequence is a bijection on {0..m-1}.
inline void validate_order(const Alphabet& a, const BinarizationOrder& o) {
    const std::size_t m = a.size();
    if (o.sequence.size() != m)
        throw Error(Errc::NotAPermutation, "order length != alphabet size");
    std::array<bool, 256> seen{};
    for (std::uint8_t idx : o.sequence) {
        if (idx >= m) throw Error(Errc::NotAPermutation, "index out of range");
        if (seen[idx]) throw Error(Errc::NotAPermutation, "duplicate index");
        seen[idx] = true;
    }
}

inline bool is_valid_order(const Alphabet& a, const BinarizationOrder& o) {
    try {
        validate_order(a, o);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// Descending count, ties broken by first occurrence. Peeling frequent
// symbols first minimizes the total number of emitted plane bits.
inline BinarizationOrder order_by_frequency(const Alphabet& a) {
    BinarizationOrder o = BinarizationOrder::identity(a.size());
    std::stable_sort(o.sequence.begin(), o.sequence.end(),
                     [&](std::uint8_t x, std::uint8_t y) { return a.counts[x] > a.counts[y]; });
    return o;
}

inline BinarizationOrder order_first_seen(const Alphabet& a) {
    return BinarizationOrder::identity(a.size());
}

// Builds an order from explicit symbol values; must name every alphabet
// symbol exactly once.
inline BinarizationOrder order_from_symbols(const Alphabet& a,
                                            std::span<const std::uint8_t> symbols) {
    std::array<std::int16_t, 256> index;
    index.fill(-1);
    for (std::size_t i = 0; i < a.symbols.size(); ++i)
        index[a.symbols[i]] = static_cast<std::int16_t>(i);
    BinarizationOrder o;
    o.sequence.reserve(symbols.size());
    for (std::uint8_t s : symbols) {
        if (index[s] < 0)
            throw Error(Errc::NotAPermutation, "symbol not in alphabet");
        o.sequence.push_back(static_cast<std::uint8_t>(index[s]));
    }
    validate_order(a, o);
    return o;
}

}  // namespace ecb
