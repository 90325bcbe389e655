#include "morsewidth/verify.hpp"

#include <algorithm>

#include "morsewidth/compose.hpp"
#include "morsewidth/moves.hpp"
#include "morsewidth/search.hpp"

namespace morsewidth {

namespace {

std::string join(const std::vector<std::string>& cells, char sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }
std::string flag(bool ok) { return ok ? "ok" : "FAIL"; }

void record(SuiteResult& r, bool ok, const std::vector<std::string>& row) {
    ++r.checked;
    if (ok) return;
    ++r.violations;
    if (r.counterexample.empty()) {
        std::string text;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ' ';
            text += r.details.header[i] + "=" + row[i];
        }
        r.counterexample = text;
    }
}

Table totals(const SuiteResult& r) {
    return {{"suite", "checked", "violations"}, {{r.name, str(r.checked), str(r.violations)}}};
}

} // namespace

std::string Table::to_csv() const {
    std::string out = join(header, ',') + '\n';
    for (const auto& row : rows) out += join(row, ',') + '\n';
    return out;
}

std::string Table::to_text() const {
    std::vector<std::size_t> widths(header.size(), 0);
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += "  ";
            out += std::string(widths[i] - std::min(widths[i], cells[i].size()), ' ') + cells[i];
        }
        return out + '\n';
    };
    std::string out = line(header);
    for (const auto& row : rows) out += line(row);
    return out;
}

SuiteResult verify_theorem41(std::size_t max_b) {
    SuiteResult r;
    r.name = "theorem41";
    r.details.header = {"b1", "b2", "bridge_number", "bridge_width", "stack_width", "gap", "expected_gap", "ok"};
    std::size_t positive = 0;
    for (std::size_t b1 = 1; b1 <= max_b; ++b1) {
        const MorseWord upper = canonical_bridge_word(b1);
        for (std::size_t b2 = 1; b2 <= max_b; ++b2) {
            const auto sb1 = static_cast<std::int64_t>(b1);
            const auto sb2 = static_cast<std::int64_t>(b2);
            const std::int64_t b = sb1 + sb2 - 1;
            const Width bridge = width(canonical_bridge_word(static_cast<std::size_t>(b)));
            const Width stacked = width(connected_sum(upper, canonical_bridge_word(b2)));
            const std::int64_t expected = 4 * (sb1 - 1) * (sb2 - 1);
            std::int64_t gap = 0;
            bool ok = true;
            try {
                gap = theorem41_gap(sb1, sb2);
            } catch (const MorseError&) {
                ok = false;
            }
            ok = ok && bridge == bridge_width_formula(b) && stacked == 2 * sb1 * sb1 + 2 * sb2 * sb2 - 2 &&
                 gap == bridge - stacked && gap == expected && ((gap > 0) == (b1 > 1 && b2 > 1));
            if (gap > 0) ++positive;
            std::vector<std::string> row{str(b1),      str(b2), str(b),        str(bridge),
                                         str(stacked), str(gap), str(expected), flag(ok)};
            record(r, ok, row);
            r.details.rows.push_back(std::move(row));
        }
    }
    r.summary = {{"suite", "checked", "positive_gaps", "violations"},
                 {{r.name, str(r.checked), str(positive), str(r.violations)}}};
    return r;
}

SuiteResult verify_bridge_formula(std::size_t max_n) {
    SuiteResult r;
    r.name = "bridge-formula";
    r.details.header = {"n", "words", "formula", "canonical_width", "normalized_max_width", "ok"};
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto sn = static_cast<std::int64_t>(n);
        const Width formula = bridge_width_formula(sn);
        const MorseWord canonical = canonical_bridge_word(n);
        const Width canonical_width = width(canonical);
        bool ok = canonical_width == formula && is_bridge_position(canonical);

        std::string words = "-";
        std::string normalized = "-";
        if (n <= 8) {
            std::size_t count = 0;
            Width widest = 0;
            for_each_knot_word(sn, [&](const MorseWord& w) {
                ++count;
                const MorseWord b = normalize_to_bridge(w);
                widest = std::max(widest, width(b));
                ok = ok && b == canonical && width(w) <= formula;
            });
            words = str(count);
            normalized = str(widest);
        }
        std::vector<std::string> row{str(n), words, str(formula), str(canonical_width), normalized, flag(ok)};
        record(r, ok, row);
        r.details.rows.push_back(std::move(row));
    }
    r.summary = totals(r);
    return r;
}

SuiteResult verify_stack_width(std::size_t max_summands, std::size_t max_maxima) {
    SuiteResult r;
    r.name = "stack-width";
    r.details.header = {"summands", "n",           "sum_widths",    "expected_width", "stack_width",
                        "nontrivial", "thin_levels", "expected_thin", "ok"};

    std::vector<MorseWord> bridge_words;
    for (std::size_t b = 1; b <= max_maxima; ++b) bridge_words.push_back(canonical_bridge_word(b));

    std::vector<std::size_t> tuple;
    for (std::size_t n = 1; n <= max_summands; ++n) {
        tuple.assign(n, 1);
        for (;;) {
            std::vector<MorseWord> summands;
            for (std::size_t b : tuple) summands.push_back(bridge_words[b - 1]);
            const MorseWord stacked = stack(summands);
            Width sum = 0;
            for (const auto& s : summands) sum += width(s);
            const auto sn = static_cast<Width>(n);
            const Width expected = sum - 2 * (sn - 1);
            const auto nontrivial =
                static_cast<std::size_t>(std::count_if(tuple.begin(), tuple.end(), [](std::size_t b) { return b >= 2; }));
            const std::size_t expected_thin = nontrivial == 0 ? 0 : nontrivial - 1;
            const std::size_t thin = thin_levels(stacked).size();
            bool ok = width(stacked) == expected && thin == expected_thin;
            for (std::size_t level : thin_levels(stacked)) ok = ok && stacked.total_after(level) == 2;

            std::string name;
            for (std::size_t i = 0; i < n; ++i) name += (i ? "-" : "") + str(tuple[i]);
            std::vector<std::string> row{name,           str(n),   str(sum),           str(expected), str(width(stacked)),
                                         str(nontrivial), str(thin), str(expected_thin), flag(ok)};
            record(r, ok, row);
            r.details.rows.push_back(std::move(row));

            // Odometer over 1..max_maxima.
            std::size_t k = n;
            while (k > 0 && tuple[k - 1] == max_maxima) tuple[--k] = 1;
            if (k == 0) break;
            ++tuple[k - 1];
        }
    }
    r.summary = totals(r);
    return r;
}

SuiteResult verify_lemma5(std::size_t max_events, unsigned threads) {
    const SweepReport report = lemma5_sweep(max_events, threads);
    SuiteResult r;
    r.name = "lemma5";
    r.details.header = {"source",       "thin_level",       "labeling",       "m_plus",    "m_minus",
                        "case",         "split_pairs",      "cut_delta",      "separation_delta",
                        "reattach_delta", "net_delta",      "case_bound",     "ok"};
    for (const auto& c : report.checks) {
        std::vector<std::string> row{c.source,
                                     str(c.thin_level),
                                     c.labeling,
                                     str(c.m_plus),
                                     str(c.m_minus),
                                     str(c.case_number),
                                     str(c.split_pairs),
                                     str(c.cut_delta),
                                     str(c.separation_delta),
                                     str(c.reattach_delta),
                                     str(c.net_delta),
                                     str(c.case_bound),
                                     flag(c.ok())};
        record(r, c.ok(), row);
        if (!c.ok() && r.violations == 1) {
            for (const auto& f : c.failures) r.counterexample += "; " + f;
        }
        r.details.rows.push_back(std::move(row));
    }
    r.summary.header = {"case", "m", "configurations", "min_reduction", "max_reduction", "violations"};
    // Cases with no configuration at this size still get a row.
    for (int c = 1; c <= 4; ++c) {
        if (report.configurations_in_case(c) == 0) {
            r.summary.rows.push_back({str(c), "-", "0", "-", "-", "0"});
            continue;
        }
        for (const auto& row : report.rows) {
            if (row.case_number != c) continue;
            r.summary.rows.push_back({str(row.case_number), str(row.m), str(row.configurations),
                                      str(row.min_reduction), str(row.max_reduction), str(row.violations)});
        }
    }
    return r;
}

} // namespace morsewidth
