#pragma once

// Verification suites behind `morsewidth verify`. Each suite produces a
// summary table for the terminal and a detail table for CSV export. CSV
// columns are fixed per suite and the header row is always written.

#include <cstddef>
#include <string>
#include <vector>

namespace morsewidth {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    /// Right-aligned columns separated by two spaces.
    std::string to_text() const;
};

struct SuiteResult {
    std::string name;
    Table summary;
    Table details;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string counterexample;  // first failing row, empty when clean
};

/// Bridge width 2b^2 against the stack of two bridge words, 1 <= b1, b2 <= max_b.
SuiteResult verify_theorem41(std::size_t max_b);

/// Width of the canonical bridge word against 2n^2 for n = 1..max_n, and
/// normalize_to_bridge on every knot word with n <= min(max_n, 8).
SuiteResult verify_bridge_formula(std::size_t max_n);

/// Every tuple of 1..max_summands bridge summands with 1..max_maxima maxima.
/// Checks width = sum - 2(n-1) and thin levels = max(0, k-1), where k counts
/// summands with at least two maxima.
SuiteResult verify_stack_width(std::size_t max_summands, std::size_t max_maxima);

/// Cut / separate / reattach bookkeeping on every cut configuration.
SuiteResult verify_lemma5(std::size_t max_events, unsigned threads);

} // namespace morsewidth
