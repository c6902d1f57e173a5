#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "ecb/alphabet.hpp"
#include "ecb/binarizer.hpp"
#include "ecb/bincoder.hpp"
#include "ecb/container.hpp"

namespace ecb {

enum class OrderPolicy { Frequency, FirstSeen, Explicit };

struct EncodeOptions {
    OrderPolicy policy = OrderPolicy::Frequency;
    std::vector<std::uint8_t> explicit_symbols;  // used when policy == Explicit
    unsigned threads = 0;                        // 0 = available parallelism
};

struct EncodeStats {
    std::uint64_t n = 0;
    std::size_t m = 0;
    std::vector<std::uint8_t> order_symbols;
    std::uint64_t total_plane_bits = 0;
    std::uint64_t container_bytes = 0;
};

namespace detail {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Work items
// are independent, so the result is identical for any thread count; the
// first exception wins and is rethrown on the caller.
template <typename Fn>
void parallel_planes(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads > count) threads = static_cast<unsigned>(count);
    if (count == 0) return;
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

inline BinarizationOrder make_order(const Alphabet& a, const EncodeOptions& opt) {
    switch (opt.policy) {
    case OrderPolicy::FirstSeen: return order_first_seen(a);
    case OrderPolicy::Explicit:  return order_from_symbols(a, opt.explicit_symbols);
    case OrderPolicy::Frequency: break;
    }
    return order_by_frequency(a);
}

// discover -> binarize -> per-plane range coding -> container bytes.
inline std::vector<std::uint8_t> encode_buffer(std::span<const std::uint8_t> data,
                                               const EncodeOptions& opt = {},
                                               EncodeStats* stats = nullptr) {
    const Alphabet a = discover_alphabet(data);
    const BinarizationOrder o = make_order(a, opt);
    const PlaneSet ps = binarize(data, a, o);

    std::vector<std::vector<std::uint8_t>> payloads(ps.planes.size());
    detail::parallel_planes(ps.planes.size(), opt.threads,
                            [&](std::size_t i) { payloads[i] = encode_plane(ps.planes[i]); });

    std::vector<std::uint8_t> bytes = write_container(ps, payloads);
    if (stats) {
        stats->n = a.total;
        stats->m = a.size();
        stats->order_symbols.clear();
        for (std::uint8_t idx : o.sequence) stats->order_symbols.push_back(a.symbols[idx]);
        stats->total_plane_bits = 0;
        for (const BitPlane& p : ps.planes) stats->total_plane_bits += p.size();
        stats->container_bytes = bytes.size();
    }
    return bytes;
}

// Counts are not stored in the container; each plane's ones-count is the
// peeled symbol's occurrence count, and whatever remains after the last
// plane belongs to the final symbol in the order.
inline Alphabet recover_alphabet(const Container& c, const std::vector<BitPlane>& planes) {
    Alphabet a;
    a.symbols = c.symbols;
    a.total = c.n;
    a.counts.assign(c.symbols.size(), 0);
    if (c.symbols.size() == 1) {
        a.counts[0] = c.n;
    } else if (c.symbols.size() >= 2) {
        std::uint64_t remaining = c.n;
        for (std::size_t i = 0; i < planes.size(); ++i) {
            const std::uint64_t ones = planes[i].ones();
            a.counts[c.order[i]] = ones;
            remaining -= ones;
        }
        a.counts[c.order[c.order.size() - 1]] = remaining;
    }
    return a;
}

inline std::vector<std::uint8_t> decode_container(const Container& c, unsigned threads = 0) {
    std::vector<BitPlane> planes(c.planes.size());
    detail::parallel_planes(c.planes.size(), threads, [&](std::size_t i) {
        planes[i] = decode_plane(c.planes[i].payload, c.planes[i].bit_len);
    });

    PlaneSet ps;
    ps.alphabet = recover_alphabet(c, planes);
    ps.order.sequence = c.order;
    ps.planes = std::move(planes);
    return debinarize(ps);
}

inline std::vector<std::uint8_t> decode_buffer(std::span<const std::uint8_t> container_bytes,
                                               unsigned threads = 0) {
    return decode_container(read_container(container_bytes), threads);
}

}  // namespace ecb
