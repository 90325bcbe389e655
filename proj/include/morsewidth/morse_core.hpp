#pragma once

// Morse words: a knot or link recorded as the top-to-bottom sequence of its
// critical points under a height function. Heights are word positions only;
// index 0 is the highest event.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "morsewidth/errors.hpp"

namespace morsewidth {

using ComponentId = std::uint32_t;
using Width = std::int64_t;

enum class Extremum : std::uint8_t { Max = 0, Min = 1 };

class CriticalEvent {
public:
    constexpr CriticalEvent(Extremum kind, ComponentId component) noexcept
        : kind_(kind), component_(component) {}

    constexpr Extremum kind() const noexcept { return kind_; }
    constexpr ComponentId component() const noexcept { return component_; }
    constexpr bool is_max() const noexcept { return kind_ == Extremum::Max; }
    constexpr bool is_min() const noexcept { return kind_ == Extremum::Min; }

    /// +2 for a maximum, -2 for a minimum.
    constexpr int strand_change() const noexcept { return is_max() ? 2 : -2; }

    friend constexpr auto operator<=>(const CriticalEvent&, const CriticalEvent&) = default;

private:
    Extremum kind_;
    ComponentId component_;
};

constexpr CriticalEvent max_of(ComponentId c) noexcept { return {Extremum::Max, c}; }
constexpr CriticalEvent min_of(ComponentId c) noexcept { return {Extremum::Min, c}; }

/// A validated presentation. Construct through validate(); the default
/// value is the empty word (width 0, no components).
class MorseWord {
public:
    MorseWord() = default;

    std::span<const CriticalEvent> events() const noexcept { return events_; }
    const CriticalEvent& operator[](std::size_t i) const { return events_[i]; }
    std::size_t size() const noexcept { return events_.size(); }
    bool empty() const noexcept { return events_.empty(); }

    /// Distinct component labels, ascending.
    const std::vector<ComponentId>& components() const noexcept { return components_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    bool has_component(ComponentId c) const noexcept;

    /// Strands of component c crossing the regular level just below event i.
    int count_after(std::size_t i, ComponentId c) const;
    /// Total strands crossing the regular level just below event i.
    int total_after(std::size_t i) const { return totals_.at(i); }

    std::size_t maxima_count() const noexcept;
    std::size_t maxima_count(ComponentId c) const noexcept;

    /// Events of a single component, in order.
    std::vector<CriticalEvent> restriction(ComponentId c) const;

    friend bool operator==(const MorseWord& a, const MorseWord& b) noexcept {
        return a.events_ == b.events_;
    }

private:
    friend MorseWord validate(std::vector<CriticalEvent> events);

    std::size_t dense_index(ComponentId c) const;

    std::vector<CriticalEvent> events_;
    std::vector<ComponentId> components_;
    std::vector<int> counts_;  // events_.size() x components_.size(), row-major
    std::vector<int> totals_;
};

/// Checks every word invariant and populates strand counts.
/// Throws MorseError with NegativeCount, ComponentNotKnot or
/// InteriorDisconnection.
MorseWord validate(std::vector<CriticalEvent> events);

struct WidthProfile {
    std::vector<int> levels;  // one per regular level between consecutive events
    Width width = 0;
};

WidthProfile level_widths(const MorseWord& word);
Width width(const MorseWord& word);

/// 2n^2, the width of a bridge word with n maxima.
Width bridge_width_formula(std::int64_t n);

/// All maxima of component `component` followed by all its minima.
MorseWord canonical_bridge_word(std::size_t maxima, ComponentId component = 0);

/// Levels with a minimum directly above and a maximum directly below.
/// Level i lies between events i and i+1.
std::vector<std::size_t> thin_levels(const MorseWord& word);

/// True iff every maximum precedes every minimum. Throws MultiComponent for
/// words with more than one component.
bool is_bridge_position(const MorseWord& word);

/// Events with their component labels replaced by `mapping(label)`.
template <typename Mapping>
MorseWord relabel(const MorseWord& word, Mapping&& mapping) {
    std::vector<CriticalEvent> out;
    out.reserve(word.size());
    for (const auto& e : word.events())
        out.emplace_back(e.kind(), static_cast<ComponentId>(mapping(e.component())));
    return validate(std::move(out));
}

/// Compact one-line form, e.g. "M0 M0 m0 m0".
std::string to_compact(const MorseWord& word);
std::string to_compact(std::span<const CriticalEvent> events);

} // namespace morsewidth
