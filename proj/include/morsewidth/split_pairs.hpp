#pragma once

// Split-pair census for two-component words (component 0 = PLUS, the upper
// knot; component 1 = MINUS, the lower knot).
//
// Each component's maxima are paired with minima lying below them. A pair
// ((X+, x+), (Y-, y-)) is split when X+ is above y- and x+ is below Y-.
// Rigidly separating PLUS above MINUS lowers the width by exactly four per
// split pair, whichever valid pairing is used.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "morsewidth/compose.hpp"

namespace morsewidth {

struct Pairing {
    Side side = Side::Plus;
    /// (max index, min index) into the word; the maximum is always above.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// The i-th highest maximum paired with the i-th highest minimum.
Pairing descending_pairing(const MorseWord& word, Side side);
Pairing descending_pairing(const CutConfiguration& cut, Side side);

/// Every pairing of the side's maxima and minima with each maximum above its
/// minimum, in lexicographic order of the chosen minima.
std::vector<Pairing> valid_pairings(const MorseWord& word, Side side);

struct SplitPair {
    std::size_t plus_max;   // X+
    std::size_t plus_min;   // x+
    std::size_t minus_max;  // Y-
    std::size_t minus_min;  // y-

    friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

struct SplitPairReport {
    std::vector<SplitPair> split_pairs;
    std::size_t count = 0;
    Width predicted_delta = 0;  // -4 * count
    std::optional<int> case_number;
    int m_plus = 0;
    int m_minus = 0;
};

/// Split pairs under the given pairings.
SplitPairReport enumerate_split_pairs(const MorseWord& word, const Pairing& plus, const Pairing& minus);
/// Split pairs under the descending pairings.
SplitPairReport enumerate_split_pairs(const MorseWord& word);
/// As above, with the case and m+, m- of the cut filled in when known.
SplitPairReport enumerate_split_pairs(const CutConfiguration& cut);

/// width(separate(w)) - width(w), computed from crossings: +4 for every PLUS
/// maximum below a MINUS minimum, -4 for every PLUS minimum below a MINUS
/// maximum.
Width separation_delta(const MorseWord& word);
Width separation_delta(const CutConfiguration& cut);

/// 1: min in +, max in -.  2: min in -, max in +.
/// 3: both in +.           4: both in -.
/// Throws MissingAdjacentLabels if the cut lacks the pre-cut min/max.
int classify_case(const CutConfiguration& cut);

/// Lower bound on 4 * #split pairs for each case. Throws BadCase.
Width case_reduction_bound(int case_number, int m_plus, int m_minus);

} // namespace morsewidth
