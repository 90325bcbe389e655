#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace morsewidth {

enum class ErrorCode {
    NegativeCount,
    ComponentNotKnot,
    InteriorDisconnection,
    NonPositive,
    MultiComponent,
    IndexOutOfRange,
    InvalidAfterSwap,
    EmptyWord,
    EmptyList,
    NotThinLevel,
    InvalidLabeling,
    NotSeparated,
    MissingAdjacentLabels,
    BadCase,
    TooSmall,
    Violation,
    Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class MorseError : public std::runtime_error {
public:
    MorseError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the `.morse` reader; line numbers are 1-based.
class ParseError : public MorseError {
public:
    ParseError(std::size_t line, const std::string& message)
        : MorseError(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace morsewidth
