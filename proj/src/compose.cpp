#include "morsewidth/compose.hpp"

#include <algorithm>

namespace morsewidth {

namespace {

void require_knot(const MorseWord& w, const char* what) {
    if (w.empty()) throw MorseError(ErrorCode::EmptyWord, std::string(what) + " is empty");
    if (w.component_count() != 1)
        throw MorseError(ErrorCode::MultiComponent, std::string(what) + " must be a single-component word");
}

} // namespace

MorseWord split_union(const MorseWord& top, const MorseWord& bottom) {
    const ComponentId offset = top.empty() ? 0 : top.components().back() + 1;
    std::vector<CriticalEvent> events(top.events().begin(), top.events().end());
    events.reserve(top.size() + bottom.size());
    for (const auto& e : bottom.events()) events.emplace_back(e.kind(), e.component() + offset);
    return validate(std::move(events));
}

MorseWord connected_sum(const MorseWord& top, const MorseWord& bottom) {
    require_knot(top, "upper summand");
    require_knot(bottom, "lower summand");

    // A valid knot word ends with its lowest minimum and starts with its
    // highest maximum.
    std::vector<CriticalEvent> events;
    events.reserve(top.size() + bottom.size() - 2);
    for (std::size_t i = 0; i + 1 < top.size(); ++i) events.emplace_back(top[i].kind(), 0);
    for (std::size_t i = 1; i < bottom.size(); ++i) events.emplace_back(bottom[i].kind(), 0);
    return validate(std::move(events));
}

MorseWord stack(std::span<const MorseWord> summands) {
    if (summands.empty()) throw MorseError(ErrorCode::EmptyList, "stack needs at least one summand");
    require_knot(summands.front(), "summand 0");
    MorseWord result = relabel(summands.front(), [](ComponentId) { return 0; });
    for (const auto& next : summands.subspan(1)) result = connected_sum(result, next);
    return result;
}

CutConfiguration CutConfiguration::from_word(MorseWord word, std::size_t cut_level) {
    const auto plus = component_of(Side::Plus);
    const auto minus = component_of(Side::Minus);
    if (word.components() != std::vector<ComponentId>{plus, minus})
        throw MorseError(ErrorCode::InvalidLabeling, "a cut word has exactly the components 0 (+) and 1 (-)");
    if (cut_level + 1 >= word.size())
        throw MorseError(ErrorCode::InvalidLabeling, "cut level " + std::to_string(cut_level) + " out of range");
    if (word[cut_level] != min_of(plus) || word[cut_level + 1] != max_of(minus))
        throw MorseError(ErrorCode::InvalidLabeling,
                         "cut level " + std::to_string(cut_level) + " must sit between a + minimum and a - maximum");

    CutConfiguration cut;
    cut.m_plus_ = word.count_after(cut_level, plus);
    cut.m_minus_ = word.count_after(cut_level, minus);
    if (cut_level >= 1 && word[cut_level - 1].is_min())
        cut.min_side_ = static_cast<Side>(word[cut_level - 1].component());
    if (cut_level + 2 < word.size() && word[cut_level + 2].is_max())
        cut.max_side_ = static_cast<Side>(word[cut_level + 2].component());
    cut.word_ = std::move(word);
    cut.cut_level_ = cut_level;
    return cut;
}

std::string CutConfiguration::labeling() const {
    std::string out;
    out.reserve(word_.size());
    for (const auto& e : word_.events()) out += side_char(static_cast<Side>(e.component()));
    return out;
}

CutConfiguration cut_at_thin_level(const MorseWord& word, std::size_t level, std::span<const Side> labeling) {
    if (word.component_count() != 1)
        throw MorseError(ErrorCode::MultiComponent, "only a knot can be cut at a thin level");
    const auto thin = thin_levels(word);
    if (std::find(thin.begin(), thin.end(), level) == thin.end())
        throw MorseError(ErrorCode::NotThinLevel, "level " + std::to_string(level) + " is not a thin level");
    if (labeling.size() != word.size())
        throw MorseError(ErrorCode::InvalidLabeling, "labeling has " + std::to_string(labeling.size()) +
                                                         " entries for " + std::to_string(word.size()) + " events");

    std::vector<CriticalEvent> events;
    events.reserve(word.size() + 2);
    for (std::size_t i = 0; i < word.size(); ++i) {
        events.emplace_back(word[i].kind(), component_of(labeling[i]));
        if (i == level) {
            events.push_back(min_of(component_of(Side::Plus)));
            events.push_back(max_of(component_of(Side::Minus)));
        }
    }

    MorseWord cut_word;
    try {
        cut_word = validate(std::move(events));
    } catch (const MorseError& e) {
        throw MorseError(ErrorCode::InvalidLabeling, e.what());
    }
    return CutConfiguration::from_word(std::move(cut_word), level + 1);
}

MorseWord separate(const MorseWord& two_component) {
    std::vector<CriticalEvent> events(two_component.events().begin(), two_component.events().end());
    std::stable_partition(events.begin(), events.end(), [](const CriticalEvent& e) {
        return e.component() == component_of(Side::Plus);
    });
    return validate(std::move(events));
}

MorseWord separate(const CutConfiguration& cut) { return separate(cut.word()); }

MorseWord reattach(const MorseWord& separated) {
    const auto plus = component_of(Side::Plus);
    const auto minus = component_of(Side::Minus);
    if (separated.components() != std::vector<ComponentId>{plus, minus})
        throw MorseError(ErrorCode::NotSeparated, "reattach needs exactly the components 0 (+) and 1 (-)");
    const auto events = separated.events();
    const auto first_minus = std::find_if(events.begin(), events.end(),
                                          [minus](const CriticalEvent& e) { return e.component() == minus; });
    if (std::any_of(first_minus, events.end(), [plus](const CriticalEvent& e) { return e.component() == plus; }))
        throw MorseError(ErrorCode::NotSeparated, "a + event lies below a - event");

    const auto split = static_cast<std::size_t>(first_minus - events.begin());
    const MorseWord upper = validate({events.begin(), events.begin() + static_cast<std::ptrdiff_t>(split)});
    const MorseWord lower = validate({first_minus, events.end()});
    return connected_sum(upper, lower);
}

} // namespace morsewidth
