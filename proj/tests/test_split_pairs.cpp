#include <doctest.h>

#include <random>

#include "morsewidth/split_pairs.hpp"
#include "test_support.hpp"

using namespace morsewidth;
using morsewidth::testing::position_width;
using morsewidth::testing::word_of;

namespace {

MorseWord random_two_component(std::mt19937_64& rng, std::size_t max_maxima) {
    for (;;) {
        auto w = morsewidth::testing::random_link(rng, 2, max_maxima);
        if (w.component_count() == 2) return w;
    }
}

// Case 2 shape: the minimum above the cut belongs to -, the maximum below to +.
const char* const kCase2 = "M+ M+ M- M- m- m+ M- M+ m- m- m+ m+";

} // namespace

TEST_CASE("descending_pairing") {
    const auto w = word_of("M- M+ M- M+ m- m+ m+ m-");
    const auto plus = descending_pairing(w, Side::Plus);
    CHECK(plus.side == Side::Plus);
    CHECK(plus.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 5}, {3, 6}});
    const auto minus = descending_pairing(w, Side::Minus);
    CHECK(minus.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 4}, {2, 7}});

    const auto bridge = relabel(canonical_bridge_word(4), [](ComponentId) { return 0; });
    CHECK(descending_pairing(bridge, Side::Plus).pairs ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(descending_pairing(bridge, Side::Minus).pairs.empty());
}

TEST_CASE("valid_pairings") {
    const auto w = word_of("M+ M+ m+ m+");
    CHECK(valid_pairings(w, Side::Plus).size() == 2);
    const auto stacked = word_of("M+ M+ m+ M+ m+ m+");
    // The third maximum sits below the first minimum.
    const auto all = valid_pairings(stacked, Side::Plus);
    CHECK(all.size() == 4);
    for (const auto& p : all)
        for (const auto& [mx, mn] : p.pairs) CHECK(mx < mn);
}

TEST_CASE("enumerate_split_pairs") {
    SUBCASE("interleaved: one split pair") {
        const auto w = word_of("M+ M- m+ m-");
        const auto r = enumerate_split_pairs(w);
        CHECK(r.count == 1);
        CHECK(r.predicted_delta == -4);
        REQUIRE(r.split_pairs.size() == 1);
        CHECK(r.split_pairs[0] == SplitPair{0, 2, 1, 3});
        CHECK(width(separate(w)) - width(w) == -4);
    }
    SUBCASE("already separated") {
        const auto r = enumerate_split_pairs(word_of("M+ m+ M- m-"));
        CHECK(r.count == 0);
        CHECK(r.predicted_delta == 0);
    }
    SUBCASE("minus on top, still split") {
        const auto w = word_of("M- M+ m- m+");
        CHECK(enumerate_split_pairs(w).count == 1);
        CHECK(width(w) == 8);
        CHECK(width(separate(w)) == 4);
    }
    SUBCASE("m = 0 cut has no split pairs") {
        const auto cut = cut_at_thin_level(word_of("MMmMmm"), 2, std::vector<Side>{Side::Plus, Side::Plus, Side::Plus,
                                                                                   Side::Minus, Side::Minus,
                                                                                   Side::Minus});
        const auto r = enumerate_split_pairs(cut);
        CHECK(r.count == 0);
        CHECK(r.case_number == 1);
        CHECK(4 * static_cast<Width>(r.count) >= case_reduction_bound(1, r.m_plus, r.m_minus));
    }
    SUBCASE("bad pairings are rejected") {
        const auto w = word_of("M+ M- m+ m-");
        Pairing wrong{Side::Plus, {{2, 0}}};
        CHECK_THROWS_AS(enumerate_split_pairs(w, wrong, descending_pairing(w, Side::Minus)), MorseError);
    }
}

TEST_CASE("separation_delta") {
    CHECK(separation_delta(word_of("M+ M- m+ m-")) == -4);
    CHECK(separation_delta(word_of("M+ m+ M- m-")) == 0);
    CHECK(separation_delta(word_of("M- M+ m- m+")) == -4);
    // A PLUS maximum below a MINUS minimum costs 4 to lift.
    CHECK(separation_delta(word_of("M- m- M+ m+")) == 0);
    CHECK(separation_delta(word_of("M- M+ m- M+ m+ m+")) == -4);
}

TEST_CASE("classify_case") {
    const std::vector<Side> plus_then_minus{Side::Plus, Side::Plus, Side::Plus, Side::Minus, Side::Minus, Side::Minus};
    CHECK(classify_case(cut_at_thin_level(word_of("MMmMmm"), 2, plus_then_minus)) == 1);

    const auto case2 = CutConfiguration::from_word(word_of(kCase2), 5);
    CHECK(classify_case(case2) == 2);
    CHECK(case2.m_plus() == 2);
    CHECK(case2.m_minus() == 2);

    const auto case3 = CutConfiguration::from_word(word_of("M+ M+ M+ m+ m+ M- M+ m+ m+ m-"), 4);
    CHECK(classify_case(case3) == 3);
    const auto case4 = CutConfiguration::from_word(word_of("M+ M- M- m- m+ M- M- m- m- m-"), 4);
    CHECK(classify_case(case4) == 4);

    const auto bare = CutConfiguration::from_word(word_of("M+ m+ M- m-"), 1);
    try {
        classify_case(bare);
        FAIL("expected MissingAdjacentLabels");
    } catch (const MorseError& e) {
        CHECK(e.code() == ErrorCode::MissingAdjacentLabels);
    }
    CHECK_FALSE(enumerate_split_pairs(bare).case_number.has_value());
}

TEST_CASE("case 2 census by hand") {
    const auto cut = CutConfiguration::from_word(word_of(kCase2), 5);
    const auto r = enumerate_split_pairs(cut);
    CHECK(r.count == 7);
    CHECK(position_width(separate(cut)) - position_width(cut.word()) == -28);
    CHECK(separation_delta(cut) == -28);
    CHECK(4 * static_cast<Width>(r.count) >= case_reduction_bound(2, cut.m_plus(), cut.m_minus()));
    CHECK(case_reduction_bound(2, cut.m_plus(), cut.m_minus()) == 16);
}

TEST_CASE("case_reduction_bound") {
    CHECK(case_reduction_bound(1, 2, 2) == 16);
    CHECK(case_reduction_bound(2, 0, 0) == 8);
    CHECK(case_reduction_bound(3, 2, 0) == 8);
    CHECK(case_reduction_bound(4, 0, 2) == 8);
    CHECK(case_reduction_bound(4, 2, 4) == 20);
    CHECK(case_reduction_bound(1, 0, 0) == 0);
    for (int c : {0, 5, -1}) {
        try {
            case_reduction_bound(c, 0, 0);
            FAIL("expected BadCase");
        } catch (const MorseError& e) {
            CHECK(e.code() == ErrorCode::BadCase);
        }
    }
    CHECK_THROWS_AS(case_reduction_bound(1, 1, 0), MorseError);
    CHECK_THROWS_AS(case_reduction_bound(1, 0, -2), MorseError);
}

TEST_CASE("separation removes exactly four per split pair") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto w = random_two_component(rng, 4);
        const auto r = enumerate_split_pairs(w);
        const auto sep = separate(w);
        const Width measured = position_width(sep) - position_width(w);
        CHECK(measured == r.predicted_delta);
        CHECK(measured == separation_delta(w));
        CHECK(width(sep) - width(w) == measured);

        // Non-split pairs of pairs contribute nothing: the +4 of lifting X+
        // past y- cancels the -4 of lifting x+ past Y-.
        const auto plus = descending_pairing(w, Side::Plus);
        const auto minus = descending_pairing(w, Side::Minus);
        for (const auto& [X, x] : plus.pairs) {
            for (const auto& [Y, y] : minus.pairs) {
                const bool split = X < y && x > Y;
                const int contribution = 4 * int(X > y) - 4 * int(x > Y);
                CHECK(contribution == (split ? -4 : 0));
            }
        }
    }
}

TEST_CASE("split pair count does not depend on the pairing") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = random_two_component(rng, 3);
        const std::size_t expected = enumerate_split_pairs(w).count;
        for (const auto& p : valid_pairings(w, Side::Plus))
            for (const auto& m : valid_pairings(w, Side::Minus)) CHECK(enumerate_split_pairs(w, p, m).count == expected);
    }
}
