#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ecb {

// Every failure the library can report, one code per class so callers
// (and the CLI exit-code map) can dispatch without string matching.
enum class Errc {
    NotAPermutation,
    SymbolNotInAlphabet,
    PlaneLengthMismatch,
    PlaneUnderflow,
    EmptyInput,
    DomainError,
    TruncatedPayload,
    OutOfRange,
    InconsistentInput,
    BadMagic,
    UnsupportedVersion,
    TruncatedHeader,
    ChainInvariantViolated,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotAPermutation:        return "NotAPermutation";
    case Errc::SymbolNotInAlphabet:    return "SymbolNotInAlphabet";
    case Errc::PlaneLengthMismatch:    return "PlaneLengthMismatch";
    case Errc::PlaneUnderflow:         return "PlaneUnderflow";
    case Errc::EmptyInput:             return "EmptyInput";
    case Errc::DomainError:            return "DomainError";
    case Errc::TruncatedPayload:       return "TruncatedPayload";
    case Errc::OutOfRange:             return "OutOfRange";
    case Errc::InconsistentInput:      return "InconsistentInput";
    case Errc::BadMagic:               return "BadMagic";
    case Errc::UnsupportedVersion:     return "UnsupportedVersion";
    case Errc::TruncatedHeader:        return "TruncatedHeader";
    case Errc::ChainInvariantViolated: return "ChainInvariantViolated";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    static constexpr std::uint64_t no_offset = ~std::uint64_t{0};

    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    // Container errors carry the byte offset of the first offending field.
    Error(Errc code, const std::string& what, std::uint64_t offset)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what +
                             " (offset " + std::to_string(offset) + ")"),
          code_(code), offset_(offset) {}

    Errc code() const noexcept { return code_; }
    bool has_offset() const noexcept { return offset_ != no_offset; }
    std::uint64_t offset() const noexcept { return offset_; }

private:
    Errc code_;
    std::uint64_t offset_ = no_offset;
};

}  // namespace ecb
