#pragma once

// Shared helpers for the test binaries: compact word literals, an
// independent width oracle and random word generators.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "morsewidth/compose.hpp"
#include "morsewidth/morse_core.hpp"

namespace morsewidth::testing {

/// "M M m m" or "MMmm" for one component (0); "M+ M- m+ m-" or "M0 M1 m0 m1"
/// for labelled events.
inline std::vector<CriticalEvent> events_of(const std::string& text) {
    std::vector<CriticalEvent> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == ' ') {
            ++i;
            continue;
        }
        const Extremum kind = ch == 'M' ? Extremum::Max : Extremum::Min;
        ++i;
        ComponentId c = 0;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            c = text[i] == '+' ? 0 : 1;
            ++i;
        } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            c = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) c = c * 10 + (text[i++] - '0');
        }
        out.emplace_back(kind, c);
    }
    return out;
}

inline MorseWord word_of(const std::string& text) { return validate(events_of(text)); }

/// Width from positions alone: a maximum at position p contributes one
/// strand to each of the N-1-p levels below it and a minimum removes one
/// from each, so width = 2 * (sum of min positions - sum of max positions)
/// when maxima and minima balance.
inline Width position_width(const std::vector<CriticalEvent>& events) {
    Width w = 0;
    for (std::size_t p = 0; p < events.size(); ++p) w += events[p].is_min() ? 2 * Width(p) : -2 * Width(p);
    return w;
}

inline Width position_width(const MorseWord& word) {
    return position_width(std::vector<CriticalEvent>(word.events().begin(), word.events().end()));
}

/// Uniformly random knot word shape with n maxima (rejection over shuffles).
inline std::vector<Extremum> random_knot_shape(std::size_t n, std::mt19937_64& rng) {
    std::vector<Extremum> middle;
    for (;;) {
        middle.assign(n - 1, Extremum::Max);
        middle.insert(middle.end(), n - 1, Extremum::Min);
        std::shuffle(middle.begin(), middle.end(), rng);
        int count = 2;
        bool ok = true;
        for (auto k : middle) {
            count += k == Extremum::Max ? 2 : -2;
            if (count <= 0) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    std::vector<Extremum> shape;
    shape.reserve(middle.size() + 2);
    shape.push_back(Extremum::Max);
    for (Extremum e : middle) shape.push_back(e);
    shape.push_back(Extremum::Min);
    return shape;
}

/// A random interleaving of random knot words, one per component.
inline MorseWord random_link(std::mt19937_64& rng, std::size_t max_components, std::size_t max_maxima) {
    std::uniform_int_distribution<std::size_t> comps(1, max_components);
    std::uniform_int_distribution<std::size_t> maxima(1, max_maxima);
    const std::size_t k = comps(rng);
    std::vector<std::vector<Extremum>> shapes;
    std::vector<std::size_t> pool;
    for (std::size_t c = 0; c < k; ++c) {
        shapes.push_back(random_knot_shape(maxima(rng), rng));
        pool.insert(pool.end(), shapes.back().size(), c);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::size_t> next(k, 0);
    std::vector<CriticalEvent> events;
    for (std::size_t c : pool) events.emplace_back(shapes[c][next[c]++], static_cast<ComponentId>(c));
    return validate(std::move(events));
}

} // namespace morsewidth::testing
