#include "frobscan/error.hpp"

namespace frobscan {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidRank: return "InvalidRank";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotInWeightLattice: return "NotInWeightLattice";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::OracleTooLarge: return "OracleTooLarge";
        case ErrorCode::AmbiguousDecomposition: return "AmbiguousDecomposition";
        case ErrorCode::NegativeDimension: return "NegativeDimension";
        case ErrorCode::ShortRootInG2: return "ShortRootInG2";
        case ErrorCode::NotCovered: return "NotCovered";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::CacheMismatch: return "CacheMismatch";
        case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    }
    return "Unknown";
}

}  // namespace frobscan
