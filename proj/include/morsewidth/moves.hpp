#pragma once

// Exchange calculus: swapping two adjacent critical points changes the width
// by +4 (a maximum moves above a minimum), -4 (a minimum moves above a
// maximum) or 0 (same kinds).

#include <cstddef>

#include "morsewidth/morse_core.hpp"

namespace morsewidth {

struct ExchangeResult {
    MorseWord word;
    Width delta = 0;
};

/// Width change predicted by the kind table for swapping `upper` and `lower`.
constexpr Width exchange_delta(Extremum upper, Extremum lower) noexcept {
    if (upper == lower) return 0;
    return upper == Extremum::Min ? 4 : -4;
}

/// Swaps events i and i+1. Throws IndexOutOfRange or InvalidAfterSwap.
ExchangeResult exchange(const MorseWord& word, std::size_t i);

/// Pulls maxima up by repeatedly swapping the leftmost (min, max) adjacency.
/// The result has every maximum above every minimum and width 2n^2.
MorseWord normalize_to_bridge(const MorseWord& word);

} // namespace morsewidth
