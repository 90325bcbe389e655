#include "morsewidth/morse_core.hpp"

#include <algorithm>

namespace morsewidth {

namespace {

std::string describe(std::size_t index, const CriticalEvent& e) {
    return std::string(e.is_max() ? "max " : "min ") + std::to_string(e.component()) +
           " at event " + std::to_string(index);
}

} // namespace

MorseWord validate(std::vector<CriticalEvent> events) {
    MorseWord word;

    std::vector<ComponentId> labels;
    labels.reserve(events.size());
    for (const auto& e : events) labels.push_back(e.component());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    const std::size_t n = events.size();
    const std::size_t c = labels.size();
    auto dense = [&](ComponentId id) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), id) - labels.begin());
    };

    std::vector<int> running(c, 0);
    std::vector<std::size_t> last_event(c, 0);
    std::vector<int> counts(n * c, 0);
    std::vector<int> totals(n, 0);
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = events[i];
        const std::size_t k = dense(e.component());
        if (e.is_min() && running[k] < 2)
            throw MorseError(ErrorCode::NegativeCount, describe(i, e) + " has no strands to close");
        running[k] += e.strand_change();
        total += e.strand_change();
        last_event[k] = i;
        std::copy(running.begin(), running.end(), counts.begin() + static_cast<std::ptrdiff_t>(i * c));
        totals[i] = total;
    }

    for (std::size_t k = 0; k < c; ++k) {
        if (running[k] != 0)
            throw MorseError(ErrorCode::ComponentNotKnot,
                             "component " + std::to_string(labels[k]) + " ends with " +
                                 std::to_string(running[k]) + " open strands");
    }

    // A component's strand count may only return to zero at its final event.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = dense(events[i].component());
        if (counts[i * c + k] == 0 && i != last_event[k])
            throw MorseError(ErrorCode::InteriorDisconnection,
                             "component " + std::to_string(labels[k]) + " closes up at event " +
                                 std::to_string(i) + " before its last event");
    }

    word.events_ = std::move(events);
    word.components_ = std::move(labels);
    word.counts_ = std::move(counts);
    word.totals_ = std::move(totals);
    return word;
}

bool MorseWord::has_component(ComponentId c) const noexcept {
    return std::binary_search(components_.begin(), components_.end(), c);
}

std::size_t MorseWord::dense_index(ComponentId c) const {
    auto it = std::lower_bound(components_.begin(), components_.end(), c);
    if (it == components_.end() || *it != c)
        throw MorseError(ErrorCode::IndexOutOfRange, "no component " + std::to_string(c));
    return static_cast<std::size_t>(it - components_.begin());
}

int MorseWord::count_after(std::size_t i, ComponentId c) const {
    if (i >= events_.size())
        throw MorseError(ErrorCode::IndexOutOfRange, "event " + std::to_string(i));
    if (!has_component(c)) return 0;
    return counts_[i * components_.size() + dense_index(c)];
}

std::size_t MorseWord::maxima_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(events_.begin(), events_.end(), [](const CriticalEvent& e) { return e.is_max(); }));
}

std::size_t MorseWord::maxima_count(ComponentId c) const noexcept {
    return static_cast<std::size_t>(std::count_if(events_.begin(), events_.end(), [c](const CriticalEvent& e) {
        return e.is_max() && e.component() == c;
    }));
}

std::vector<CriticalEvent> MorseWord::restriction(ComponentId c) const {
    std::vector<CriticalEvent> out;
    std::copy_if(events_.begin(), events_.end(), std::back_inserter(out),
                 [c](const CriticalEvent& e) { return e.component() == c; });
    return out;
}

WidthProfile level_widths(const MorseWord& word) {
    WidthProfile profile;
    if (word.size() < 2) return profile;
    profile.levels.reserve(word.size() - 1);
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        profile.levels.push_back(word.total_after(i));
        profile.width += word.total_after(i);
    }
    return profile;
}

Width width(const MorseWord& word) {
    Width w = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) w += word.total_after(i);
    return w;
}

Width bridge_width_formula(std::int64_t n) {
    if (n < 1) throw MorseError(ErrorCode::NonPositive, "bridge number must be >= 1, got " + std::to_string(n));
    return 2 * n * n;
}

MorseWord canonical_bridge_word(std::size_t maxima, ComponentId component) {
    if (maxima == 0) throw MorseError(ErrorCode::NonPositive, "bridge word needs at least one maximum");
    std::vector<CriticalEvent> events(maxima, max_of(component));
    events.insert(events.end(), maxima, min_of(component));
    return validate(std::move(events));
}

std::vector<std::size_t> thin_levels(const MorseWord& word) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i].is_min() && word[i + 1].is_max()) out.push_back(i);
    return out;
}

bool is_bridge_position(const MorseWord& word) {
    if (word.component_count() > 1)
        throw MorseError(ErrorCode::MultiComponent,
                         "bridge position is defined for knots; word has " +
                             std::to_string(word.component_count()) + " components");
    return thin_levels(word).empty();
}

std::string to_compact(std::span<const CriticalEvent> events) {
    std::string out;
    for (const auto& e : events) {
        if (!out.empty()) out += ' ';
        out += e.is_max() ? 'M' : 'm';
        out += std::to_string(e.component());
    }
    return out;
}

std::string to_compact(const MorseWord& word) { return to_compact(word.events()); }

} // namespace morsewidth
