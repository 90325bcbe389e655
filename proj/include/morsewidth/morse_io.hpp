#pragma once

// `.morse` text format: one event per line, top to bottom, written as
// `max <component>` or `min <component>`. `#` starts a comment and blank
// lines are ignored.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "morsewidth/morse_core.hpp"

namespace morsewidth {

/// Throws ParseError naming the offending line, or MorseError if the events
/// parse but do not form a valid word.
MorseWord parse_morse(std::string_view text);
MorseWord read_morse_file(const std::filesystem::path& path);

std::string format_morse(const MorseWord& word);
void write_morse_file(const std::filesystem::path& path, const MorseWord& word);

} // namespace morsewidth
