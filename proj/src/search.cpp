#include "morsewidth/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <thread>

#include "morsewidth/split_pairs.hpp"

namespace morsewidth {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw MorseError(ErrorCode::NonPositive, std::string(what) + " must be >= 1, got " + std::to_string(n));
}

void knot_words(std::size_t maxima, std::vector<CriticalEvent>& prefix, std::size_t used, int count,
                const std::function<void(const MorseWord&)>& visit) {
    const std::size_t length = 2 * maxima;
    if (prefix.size() == length) {
        visit(validate(prefix));
        return;
    }
    if (used < maxima) {
        prefix.push_back(max_of(0));
        knot_words(maxima, prefix, used + 1, count + 2, visit);
        prefix.pop_back();
    }
    // The strand count may only reach zero at the final event.
    const bool last = prefix.size() + 1 == length;
    if (count > 2 || (count == 2 && last)) {
        prefix.push_back(min_of(0));
        knot_words(maxima, prefix, used, count - 2, visit);
        prefix.pop_back();
    }
}

struct SideState {
    int count = 0;
    bool started = false;
    bool finished = false;
};

// Applies one event to a side's running restriction; false if that
// restriction can no longer be a knot word.
bool apply(SideState& s, Extremum kind) {
    if (s.finished) return false;
    if (kind == Extremum::Max) {
        s.started = true;
        s.count += 2;
        return true;
    }
    if (s.count < 2) return false;
    s.count -= 2;
    if (s.count == 0) s.finished = true;
    return true;
}

} // namespace

void for_each_knot_word(std::int64_t n_maxima, const std::function<void(const MorseWord&)>& visit) {
    require_positive(n_maxima, "number of maxima");
    std::vector<CriticalEvent> prefix;
    prefix.reserve(static_cast<std::size_t>(2 * n_maxima));
    knot_words(static_cast<std::size_t>(n_maxima), prefix, 0, 0, visit);
}

std::vector<MorseWord> enumerate_knot_words(std::int64_t n_maxima) {
    std::vector<MorseWord> out;
    for_each_knot_word(n_maxima, [&out](const MorseWord& w) { out.push_back(w); });
    return out;
}

MinWidthResult min_width(std::int64_t n_maxima) {
    MinWidthResult result;
    bool first = true;
    for_each_knot_word(n_maxima, [&](const MorseWord& w) {
        const Width wd = width(w);
        if (first || wd < result.width) {
            result.width = wd;
            result.witnesses.clear();
            first = false;
        }
        if (wd == result.width) result.witnesses.push_back(w);
    });
    return result;
}

std::int64_t theorem41_gap(std::int64_t b1, std::int64_t b2) {
    require_positive(b1, "b1");
    require_positive(b2, "b2");
    const std::int64_t b = b1 + b2 - 1;  // bridge number of the sum
    const std::int64_t gap = 2 * b * b - (2 * b1 * b1 + 2 * b2 * b2 - 2);
    if (gap != 4 * (b1 - 1) * (b2 - 1))
        throw MorseError(ErrorCode::Violation,
                         "gap identity fails at b1=" + std::to_string(b1) + " b2=" + std::to_string(b2));
    return gap;
}

std::vector<EnumeratedCut> cuts_of(const MorseWord& source, std::size_t thin_level) {
    // Slots of the cut word: original events 0..T, the two caps, then T+1...
    // Caps have fixed sides; every original event is tried as '+' then '-'.
    struct Slot {
        Extremum kind;
        std::optional<Side> fixed;
    };
    std::vector<Slot> slots;
    slots.reserve(source.size() + 2);
    for (std::size_t i = 0; i < source.size(); ++i) {
        slots.push_back({source[i].kind(), std::nullopt});
        if (i == thin_level) {
            slots.push_back({Extremum::Min, Side::Plus});
            slots.push_back({Extremum::Max, Side::Minus});
        }
    }

    std::vector<EnumeratedCut> out;
    std::vector<Side> labeling;
    labeling.reserve(source.size());
    std::function<void(std::size_t, std::array<SideState, 2>)> assign = [&](std::size_t k,
                                                                              std::array<SideState, 2> state) {
        if (k == slots.size()) {
            for (const auto& s : state)
                if (!s.started || !s.finished) return;
            out.push_back({source, thin_level, cut_at_thin_level(source, thin_level, labeling)});
            return;
        }
        const Slot& slot = slots[k];
        for (Side side : {Side::Plus, Side::Minus}) {
            if (slot.fixed && *slot.fixed != side) continue;
            auto next = state;
            if (!apply(next[static_cast<std::size_t>(side)], slot.kind)) continue;
            if (!slot.fixed) labeling.push_back(side);
            assign(k + 1, next);
            if (!slot.fixed) labeling.pop_back();
        }
    };
    assign(0, {});
    return out;
}

void for_each_cut_configuration(std::size_t max_events, const std::function<void(const EnumeratedCut&)>& visit) {
    if (max_events < 4)
        throw MorseError(ErrorCode::TooSmall, "cut configurations need at least 4 events, got " +
                                                  std::to_string(max_events));
    // A cut word has the source's events plus two caps.
    for (std::size_t n = 1; 2 * n + 2 <= max_events; ++n) {
        for_each_knot_word(static_cast<std::int64_t>(n), [&](const MorseWord& source) {
            for (std::size_t level : thin_levels(source))
                for (const auto& cut : cuts_of(source, level)) visit(cut);
        });
    }
}

std::vector<EnumeratedCut> enumerate_cut_configurations(std::size_t max_events) {
    std::vector<EnumeratedCut> out;
    for_each_cut_configuration(max_events, [&out](const EnumeratedCut& c) { out.push_back(c); });
    return out;
}

CutCheck check_cut(const EnumeratedCut& enumerated) {
    const auto& cut = enumerated.cut;
    CutCheck r;
    r.source = to_compact(enumerated.source);
    r.thin_level = enumerated.thin_level;
    r.labeling = cut.labeling();
    r.m_plus = cut.m_plus();
    r.m_minus = cut.m_minus();
    auto fail = [&r](std::string what) { r.failures.push_back(std::move(what)); };

    const Width m = cut.m();
    const Width source_width = width(enumerated.source);
    const Width cut_width = width(cut.word());
    r.cut_delta = cut_width - source_width;
    if (r.cut_delta != 2 * m + 2) fail("cut delta " + std::to_string(r.cut_delta) + " != 2m+2");

    const auto report = enumerate_split_pairs(cut);
    r.split_pairs = report.count;
    const Width reduction = 4 * static_cast<Width>(report.count);

    const MorseWord separated = separate(cut);
    r.separation_delta = width(separated) - cut_width;
    if (r.separation_delta != -reduction)
        fail("separation delta " + std::to_string(r.separation_delta) + " != -4*#split pairs");
    if (r.separation_delta != separation_delta(cut)) fail("separation delta disagrees with the crossing count");

    r.case_number = classify_case(cut);
    r.case_bound = case_reduction_bound(r.case_number, r.m_plus, r.m_minus);
    if (reduction < r.case_bound)
        fail("reduction " + std::to_string(reduction) + " below case bound " + std::to_string(r.case_bound));

    const MorseWord rejoined = reattach(separated);
    r.reattach_delta = width(rejoined) - width(separated);
    if (r.reattach_delta != -2) fail("reattach delta " + std::to_string(r.reattach_delta) + " != -2");
    if (rejoined.maxima_count() != enumerated.source.maxima_count()) fail("reattached word lost or gained maxima");

    r.net_delta = width(rejoined) - source_width;
    if (r.net_delta != 2 * m - reduction) fail("net delta " + std::to_string(r.net_delta) + " != 2m - 4*#split pairs");
    if (r.net_delta > 0) fail("net delta is positive");
    if (m > 0 && r.net_delta >= 0) fail("net delta is not negative although m > 0");
    if (m == 0 && (r.net_delta != 0 || r.case_number != 1)) fail("m = 0 but net delta != 0 or case != 1");
    return r;
}

std::size_t SweepReport::configurations_in_case(int case_number) const noexcept {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [case_number](const CutCheck& c) {
        return c.case_number == case_number;
    }));
}

const CutCheck* SweepReport::first_violation() const noexcept {
    const auto it = std::find_if(checks.begin(), checks.end(), [](const CutCheck& c) { return !c.ok(); });
    return it == checks.end() ? nullptr : &*it;
}

SweepReport lemma5_sweep(std::size_t max_events, unsigned threads) {
    if (max_events < 4)
        throw MorseError(ErrorCode::TooSmall, "the sweep needs at least 4 events, got " + std::to_string(max_events));

    struct Task {
        MorseWord source;
        std::size_t level;
    };
    std::vector<Task> tasks;
    for (std::size_t n = 1; 2 * n + 2 <= max_events; ++n) {
        for_each_knot_word(static_cast<std::int64_t>(n), [&](const MorseWord& source) {
            for (std::size_t level : thin_levels(source)) tasks.push_back({source, level});
        });
    }

    // Each task owns its output slot; concatenating slots in task order keeps
    // the report independent of scheduling.
    std::vector<std::vector<CutCheck>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            for (const auto& cut : cuts_of(tasks[t].source, tasks[t].level)) slots[t].push_back(check_cut(cut));
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    SweepReport report;
    report.max_events = max_events;
    for (auto& slot : slots)
        for (auto& c : slot) report.checks.push_back(std::move(c));

    std::map<std::pair<int, int>, SweepRow> rows;
    for (const auto& c : report.checks) {
        const int m = c.m_plus + c.m_minus;
        auto [it, inserted] = rows.try_emplace({c.case_number, m});
        SweepRow& row = it->second;
        const Width reduction = 4 * static_cast<Width>(c.split_pairs);
        if (inserted) {
            row.case_number = c.case_number;
            row.m = m;
            row.min_reduction = row.max_reduction = reduction;
        }
        ++row.configurations;
        row.min_reduction = std::min(row.min_reduction, reduction);
        row.max_reduction = std::max(row.max_reduction, reduction);
        if (!c.ok()) {
            ++row.violations;
            ++report.violations;
        }
    }
    for (auto& [key, row] : rows) report.rows.push_back(row);
    return report;
}

void require_no_violations(const SweepReport& report) {
    if (const CutCheck* bad = report.first_violation()) {
        std::string message = "source [" + bad->source + "] level " + std::to_string(bad->thin_level) + " labeling " +
                              bad->labeling + ":";
        for (const auto& f : bad->failures) message += " " + f + ";";
        throw MorseError(ErrorCode::Violation, message);
    }
}

} // namespace morsewidth
