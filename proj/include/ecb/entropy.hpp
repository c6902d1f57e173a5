#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ecb/alphabet.hpp"
#include "ecb/binarizer.hpp"
#include "ecb/error.hpp"

namespace ecb {

// All entropies are base 2 (bits), computed from empirical probabilities
// counts[i]/total in double precision.

inline double mary_entropy(const Alphabet& a) {
    if (a.total == 0) throw Error(Errc::EmptyInput, "entropy of empty stream is undefined");
    const double n = static_cast<double>(a.total);
    double h = 0.0;
    for (std::uint64_t c : a.counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(Errc::DomainError, "probability outside [0,1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

// Per-plane weights and binary entropies whose weighted sum reproduces
// the m-ary source entropy for every binarization order.
struct EntropyReport {
    double h_source = 0.0;
    std::vector<double> plane_weights;    // (remaining symbols)/N, non-increasing from 1
    std::vector<double> plane_entropies;  // H of the peeled symbol's conditional probability
    double h_weighted_sum = 0.0;
    double residual = 0.0;                // |h_source - h_weighted_sum|
};

inline EntropyReport weighted_plane_entropy(const Alphabet& a, const BinarizationOrder& o) {
    if (a.total == 0) throw Error(Errc::EmptyInput, "entropy of empty stream is undefined");
    validate_order(a, o);

    EntropyReport r;
    r.h_source = mary_entropy(a);
    const std::size_t m = a.size();
    if (m >= 2) {
        r.plane_weights.reserve(m - 1);
        r.plane_entropies.reserve(m - 1);
        const double n = static_cast<double>(a.total);
        std::uint64_t remaining = a.total;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const std::uint64_t c = a.counts[o.sequence[i]];
            const double weight = static_cast<double>(remaining) / n;
            const double cond_p = static_cast<double>(c) / static_cast<double>(remaining);
            const double h = binary_entropy(cond_p);
            r.plane_weights.push_back(weight);
            r.plane_entropies.push_back(h);
            r.h_weighted_sum += weight * h;
            remaining -= c;
        }
    }
    r.residual = std::fabs(r.h_source - r.h_weighted_sum);
    return r;
}

struct ConservationResult {
    bool ok = false;
    double residual = 0.0;
};

inline ConservationResult verify_conservation(const Alphabet& a, const BinarizationOrder& o,
                                              double tol = 1e-9) {
    if (!(tol > 0.0)) throw Error(Errc::DomainError, "tolerance must be positive");
    const EntropyReport r = weighted_plane_entropy(a, o);
    return ConservationResult{r.residual <= tol, r.residual};
}

// Total bits across emitted planes, in exact integer arithmetic.
inline std::uint64_t predicted_total_bits(const Alphabet& a, const BinarizationOrder& o) {
    std::uint64_t sum = 0;
    for (std::uint64_t len : plane_lengths(a, o)) sum += len;
    return sum;
}

}  // namespace ecb
