#include "morsewidth/moves.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace morsewidth {

ExchangeResult exchange(const MorseWord& word, std::size_t i) {
    if (word.size() < 2 || i >= word.size() - 1)
        throw MorseError(ErrorCode::IndexOutOfRange,
                         "exchange index " + std::to_string(i) + " for a word of " + std::to_string(word.size()) +
                             " events");

    std::vector<CriticalEvent> events(word.events().begin(), word.events().end());
    std::swap(events[i], events[i + 1]);
    const Width delta = exchange_delta(word[i].kind(), word[i + 1].kind());
    try {
        return {validate(std::move(events)), delta};
    } catch (const MorseError& e) {
        throw MorseError(ErrorCode::InvalidAfterSwap,
                         "swapping events " + std::to_string(i) + " and " + std::to_string(i + 1) + ": " + e.what());
    }
}

MorseWord normalize_to_bridge(const MorseWord& word) {
    if (word.component_count() > 1)
        throw MorseError(ErrorCode::MultiComponent, "normalize_to_bridge needs a single-component word");

    MorseWord current = word;
    for (;;) {
        const auto events = current.events();
        const auto it = std::adjacent_find(events.begin(), events.end(), [](const auto& a, const auto& b) {
            return a.is_min() && b.is_max();
        });
        if (it == events.end()) return current;
        current = exchange(current, static_cast<std::size_t>(it - events.begin())).word;
    }
}

} // namespace morsewidth
