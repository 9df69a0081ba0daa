#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobscan {

enum class ErrorCode {
    InvalidRank,
    InvalidArgument,
    NotInWeightLattice,
    Overflow,
    GroupTooLarge,
    OracleTooLarge,
    AmbiguousDecomposition,
    NegativeDimension,
    ShortRootInG2,
    NotCovered,
    CapExceeded,
    CacheMismatch,
    CacheCorrupt,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All engine failures surface as this exception; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace frobscan
