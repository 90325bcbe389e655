#include "morsewidth/errors.hpp"

namespace morsewidth {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::ComponentNotKnot: return "ComponentNotKnot";
    case ErrorCode::InteriorDisconnection: return "InteriorDisconnection";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidAfterSwap: return "InvalidAfterSwap";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::NotThinLevel: return "NotThinLevel";
    case ErrorCode::InvalidLabeling: return "InvalidLabeling";
    case ErrorCode::NotSeparated: return "NotSeparated";
    case ErrorCode::MissingAdjacentLabels: return "MissingAdjacentLabels";
    case ErrorCode::BadCase: return "BadCase";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::Violation: return "Violation";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace morsewidth
