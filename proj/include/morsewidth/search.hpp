#pragma once

// Exhaustive oracles at desk scale: every knot word with a given number of
// maxima, every way of cutting one at a thin level, and the width bookkeeping
// of the cut / separate / reattach pipeline checked on all of them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morsewidth/compose.hpp"
#include "morsewidth/morse_core.hpp"

namespace morsewidth {

/// Every valid single-component word with n maxima, lexicographic with
/// max < min. There are Catalan(n-1) of them.
std::vector<MorseWord> enumerate_knot_words(std::int64_t n_maxima);
void for_each_knot_word(std::int64_t n_maxima, const std::function<void(const MorseWord&)>& visit);

struct MinWidthResult {
    Width width = 0;
    std::vector<MorseWord> witnesses;
};

MinWidthResult min_width(std::int64_t n_maxima);

/// 2(b1+b2-1)^2 - (2b1^2 + 2b2^2 - 2): how much wider the bridge position of
/// a connected sum is than the stack of two bridge positions. Throws
/// Violation if it differs from 4(b1-1)(b2-1).
std::int64_t theorem41_gap(std::int64_t b1, std::int64_t b2);

struct EnumeratedCut {
    MorseWord source;
    std::size_t thin_level = 0;  // level index in source
    CutConfiguration cut;
};

/// Every cut of every knot word at every thin level under every valid
/// labeling, for cut words of at most `max_events` events. Sources are
/// visited in knot-word order, then by thin level, then by labeling with
/// '+' < '-'. Throws TooSmall if max_events < 4.
std::vector<EnumeratedCut> enumerate_cut_configurations(std::size_t max_events);
void for_each_cut_configuration(std::size_t max_events, const std::function<void(const EnumeratedCut&)>& visit);

/// All valid labelings of one (source, thin level).
std::vector<EnumeratedCut> cuts_of(const MorseWord& source, std::size_t thin_level);

struct CutCheck {
    std::string source;    // compact form of the uncut word
    std::size_t thin_level = 0;
    std::string labeling;  // sides of the cut word's events
    int m_plus = 0;
    int m_minus = 0;
    int case_number = 0;
    std::size_t split_pairs = 0;
    Width cut_delta = 0;
    Width separation_delta = 0;
    Width reattach_delta = 0;
    Width net_delta = 0;
    Width case_bound = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Runs the full pipeline on one enumerated cut and checks every identity.
CutCheck check_cut(const EnumeratedCut& cut);

struct SweepRow {
    int case_number = 0;
    int m = 0;
    std::size_t configurations = 0;
    Width min_reduction = 0;  // 4 * #split pairs
    Width max_reduction = 0;
    std::size_t violations = 0;
};

struct SweepReport {
    std::size_t max_events = 0;
    std::vector<CutCheck> checks;  // enumeration order
    std::vector<SweepRow> rows;    // sorted by (case, m)
    std::size_t violations = 0;

    std::size_t configurations() const noexcept { return checks.size(); }
    std::size_t configurations_in_case(int case_number) const noexcept;
    const CutCheck* first_violation() const noexcept;
};

/// threads == 0 picks the hardware concurrency. Results do not depend on the
/// thread count.
SweepReport lemma5_sweep(std::size_t max_events, unsigned threads = 1);

/// Throws MorseError(Violation) describing the first failing configuration.
void require_no_violations(const SweepReport& report);

} // namespace morsewidth
