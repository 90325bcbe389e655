#include "morsewidth/morse_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace morsewidth {

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

ComponentId parse_component(std::string_view token, std::size_t line_no) {
    // from_chars accepts neither a sign nor whitespace, which is what we want.
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line_no, "component label '" + std::string(token) + "' is not a non-negative integer");
    if (value > std::numeric_limits<ComponentId>::max())
        throw ParseError(line_no, "component label '" + std::string(token) + "' is too large");
    return static_cast<ComponentId>(value);
}

} // namespace

MorseWord parse_morse(std::string_view text) {
    std::vector<CriticalEvent> events;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected '<max|min> <component>', got '" + std::string(line) + "'");

        Extremum kind;
        if (tokens[0] == "max")
            kind = Extremum::Max;
        else if (tokens[0] == "min")
            kind = Extremum::Min;
        else
            throw ParseError(line_no, "unknown event kind '" + std::string(tokens[0]) + "'");
        events.emplace_back(kind, parse_component(tokens[1], line_no));
    }
    return validate(std::move(events));
}

MorseWord read_morse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_morse(buffer.str());
}

std::string format_morse(const MorseWord& word) {
    std::string out;
    for (const auto& e : word.events()) {
        out += e.is_max() ? "max " : "min ";
        out += std::to_string(e.component());
        out += '\n';
    }
    return out;
}

void write_morse_file(const std::filesystem::path& path, const MorseWord& word) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(0, "cannot write " + path.string());
    out << format_morse(word);
}

} // namespace morsewidth
