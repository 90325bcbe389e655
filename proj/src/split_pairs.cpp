#include "morsewidth/split_pairs.hpp"

#include <functional>

namespace morsewidth {

namespace {

void collect(const MorseWord& word, Side side, std::vector<std::size_t>& maxima, std::vector<std::size_t>& minima) {
    const ComponentId c = component_of(side);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i].component() != c) continue;
        (word[i].is_max() ? maxima : minima).push_back(i);
    }
}

} // namespace

Pairing descending_pairing(const MorseWord& word, Side side) {
    std::vector<std::size_t> maxima, minima;
    collect(word, side, maxima, minima);
    Pairing p{side, {}};
    p.pairs.reserve(maxima.size());
    // Validity guarantees at least as many maxima as minima above any level,
    // so the i-th maximum is above the i-th minimum.
    for (std::size_t i = 0; i < maxima.size(); ++i) p.pairs.emplace_back(maxima[i], minima[i]);
    return p;
}

Pairing descending_pairing(const CutConfiguration& cut, Side side) { return descending_pairing(cut.word(), side); }

std::vector<Pairing> valid_pairings(const MorseWord& word, Side side) {
    std::vector<std::size_t> maxima, minima;
    collect(word, side, maxima, minima);

    std::vector<Pairing> out;
    std::vector<bool> used(minima.size(), false);
    Pairing current{side, {}};
    std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k == maxima.size()) {
            out.push_back(current);
            return;
        }
        for (std::size_t j = 0; j < minima.size(); ++j) {
            if (used[j] || minima[j] < maxima[k]) continue;
            used[j] = true;
            current.pairs.emplace_back(maxima[k], minima[j]);
            assign(k + 1);
            current.pairs.pop_back();
            used[j] = false;
        }
    };
    assign(0);
    return out;
}

SplitPairReport enumerate_split_pairs(const MorseWord& word, const Pairing& plus, const Pairing& minus) {
    auto check = [&word](const Pairing& p) {
        const ComponentId c = component_of(p.side);
        for (const auto& [mx, mn] : p.pairs) {
            if (mx >= word.size() || mn >= word.size() || word[mx] != max_of(c) || word[mn] != min_of(c) || mx >= mn)
                throw MorseError(ErrorCode::InvalidLabeling, std::string("bad ") + side_char(p.side) + " pair (" +
                                                                 std::to_string(mx) + ", " + std::to_string(mn) + ")");
        }
    };
    check(plus);
    check(minus);

    SplitPairReport report;
    for (const auto& [plus_max, plus_min] : plus.pairs) {
        for (const auto& [minus_max, minus_min] : minus.pairs) {
            // Above means a smaller word index.
            if (plus_max < minus_min && plus_min > minus_max)
                report.split_pairs.push_back({plus_max, plus_min, minus_max, minus_min});
        }
    }
    report.count = report.split_pairs.size();
    report.predicted_delta = -4 * static_cast<Width>(report.count);
    return report;
}

SplitPairReport enumerate_split_pairs(const MorseWord& word) {
    return enumerate_split_pairs(word, descending_pairing(word, Side::Plus), descending_pairing(word, Side::Minus));
}

SplitPairReport enumerate_split_pairs(const CutConfiguration& cut) {
    auto report = enumerate_split_pairs(cut.word());
    report.m_plus = cut.m_plus();
    report.m_minus = cut.m_minus();
    if (cut.min_side() && cut.max_side()) report.case_number = classify_case(cut);
    return report;
}

Width separation_delta(const MorseWord& word) {
    const ComponentId plus = component_of(Side::Plus);
    const ComponentId minus = component_of(Side::Minus);
    // Walk top to bottom, tracking MINUS extrema already seen above.
    Width delta = 0;
    Width minus_max_above = 0;
    Width minus_min_above = 0;
    for (const auto& e : word.events()) {
        if (e.component() == minus) {
            (e.is_max() ? minus_max_above : minus_min_above) += 1;
        } else if (e.component() == plus) {
            delta += e.is_max() ? 4 * minus_min_above : -4 * minus_max_above;
        }
    }
    return delta;
}

Width separation_delta(const CutConfiguration& cut) { return separation_delta(cut.word()); }

int classify_case(const CutConfiguration& cut) {
    if (!cut.min_side() || !cut.max_side())
        throw MorseError(ErrorCode::MissingAdjacentLabels,
                         "the cut does not record the minimum above and the maximum below its level");
    const Side min_side = *cut.min_side();
    const Side max_side = *cut.max_side();
    if (min_side == Side::Plus && max_side == Side::Minus) return 1;
    if (min_side == Side::Minus && max_side == Side::Plus) return 2;
    if (min_side == Side::Plus) return 3;
    return 4;
}

Width case_reduction_bound(int case_number, int m_plus, int m_minus) {
    if (m_plus < 0 || m_minus < 0 || m_plus % 2 != 0 || m_minus % 2 != 0)
        throw MorseError(ErrorCode::BadCase, "strand counts must be even and non-negative");
    const Width mp = m_plus;
    const Width mm = m_minus;
    switch (case_number) {
    case 1: return 4 * (mp + mm);
    case 2: return 2 * (mp + mm) + 8;
    case 3: return 4 * mm + 2 * mp + 4;
    case 4: return 4 * mp + 2 * mm + 4;
    default: throw MorseError(ErrorCode::BadCase, "no case " + std::to_string(case_number));
    }
}

} // namespace morsewidth
