#pragma once

// Building and taking apart presentations: split unions, connected sums,
// stacks, and the cut / separate / reattach pipeline that splits a knot at
// a thin level into an upper knot (PLUS) and a lower knot (MINUS).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morsewidth/morse_core.hpp"

namespace morsewidth {

/// Two-component words produced by cutting use these component labels.
enum class Side : std::uint8_t { Plus = 0, Minus = 1 };

constexpr ComponentId component_of(Side s) noexcept { return static_cast<ComponentId>(s); }
constexpr Side other(Side s) noexcept { return s == Side::Plus ? Side::Minus : Side::Plus; }
constexpr char side_char(Side s) noexcept { return s == Side::Plus ? '+' : '-'; }

/// `top` entirely above `bottom`; bottom's labels are shifted past top's.
MorseWord split_union(const MorseWord& top, const MorseWord& bottom);

/// Drops the lowest minimum of `top` and the highest maximum of `bottom` and
/// concatenates. Both must be single-component; the result is component 0.
MorseWord connected_sum(const MorseWord& top, const MorseWord& bottom);

/// Left fold of connected_sum over the summands, top to bottom.
MorseWord stack(std::span<const MorseWord> summands);

/// A knot cut open along a thin level. The word carries a new minimum of
/// PLUS directly above the cut level and a new maximum of MINUS directly
/// below it (the caps):
///
///     ... original min | cap min(+) | <cut level> | cap max(-) | original max ...
///
class CutConfiguration {
public:
    /// Validates a two-component word (components 0 = PLUS, 1 = MINUS) with
    /// caps at `cut_level` / `cut_level + 1`. Throws InvalidLabeling.
    static CutConfiguration from_word(MorseWord word, std::size_t cut_level);

    const MorseWord& word() const noexcept { return word_; }
    /// Level index in word() between the two caps.
    std::size_t cut_level() const noexcept { return cut_level_; }
    std::size_t cap_min_index() const noexcept { return cut_level_; }
    std::size_t cap_max_index() const noexcept { return cut_level_ + 1; }

    int m_plus() const noexcept { return m_plus_; }
    int m_minus() const noexcept { return m_minus_; }
    int m() const noexcept { return m_plus_ + m_minus_; }

    /// Side of the pre-cut minimum directly above the thin level, if any.
    std::optional<Side> min_side() const noexcept { return min_side_; }
    /// Side of the pre-cut maximum directly below the thin level, if any.
    std::optional<Side> max_side() const noexcept { return max_side_; }

    /// Word position -> side label, e.g. "++++--" (caps included).
    std::string labeling() const;

private:
    CutConfiguration() = default;

    MorseWord word_;
    std::size_t cut_level_ = 0;
    int m_plus_ = 0;
    int m_minus_ = 0;
    std::optional<Side> min_side_;
    std::optional<Side> max_side_;
};

/// Cuts a single-component word at thin level `level`, assigning each
/// original event to the side given by `labeling`. Throws NotThinLevel or
/// InvalidLabeling.
CutConfiguration cut_at_thin_level(const MorseWord& word, std::size_t level, std::span<const Side> labeling);

/// Moves every PLUS event above every MINUS event, keeping the internal order
/// of each component.
MorseWord separate(const MorseWord& two_component);
MorseWord separate(const CutConfiguration& cut);

/// Connected sum of the PLUS part over the MINUS part. Throws NotSeparated
/// unless every PLUS event lies above every MINUS event.
MorseWord reattach(const MorseWord& separated);

} // namespace morsewidth
