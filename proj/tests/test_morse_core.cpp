#include <doctest.h>

#include <random>

#include "morsewidth/morse_core.hpp"
#include "test_support.hpp"

using namespace morsewidth;
using morsewidth::testing::events_of;
using morsewidth::testing::position_width;
using morsewidth::testing::word_of;

namespace {

ErrorCode validation_error(const std::string& text) {
    try {
        validate(events_of(text));
    } catch (const MorseError& e) {
        return e.code();
    }
    FAIL("expected validation to fail for " << text);
    return ErrorCode::Violation;
}

} // namespace

TEST_CASE("validate accepts the canonical two-bridge word") {
    const auto w = word_of("M M m m");
    REQUIRE(w.size() == 4);
    CHECK(w.component_count() == 1);
    CHECK(w.count_after(0, 0) == 2);
    CHECK(w.count_after(1, 0) == 4);
    CHECK(w.count_after(2, 0) == 2);
    CHECK(w.count_after(3, 0) == 0);
}

TEST_CASE("validate rejects malformed words") {
    CHECK(validation_error("M m M m") == ErrorCode::InteriorDisconnection);
    CHECK(validation_error("m M") == ErrorCode::NegativeCount);
    CHECK(validation_error("M m m") == ErrorCode::NegativeCount);
    CHECK(validation_error("M M m") == ErrorCode::ComponentNotKnot);
    CHECK(validation_error("M0 M1 m0") == ErrorCode::ComponentNotKnot);
    // Each component checked on its own restriction.
    CHECK(validation_error("M0 M1 m0 M0 m1 m0") == ErrorCode::InteriorDisconnection);
    CHECK(validation_error("M0 m1 m0") == ErrorCode::NegativeCount);
}

TEST_CASE("split-link word reaches zero only between components") {
    const auto w = word_of("M0 M0 m0 m0 M1 M1 m1 m1");
    CHECK(w.component_count() == 2);
    // Direct count simulation, level by level.
    const std::vector<int> expected{2, 4, 2, 0, 2, 4, 2, 0};
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w.total_after(i) == expected[i]);
    CHECK(w.count_after(3, 0) == 0);
    CHECK(w.count_after(3, 1) == 0);
    CHECK(w.count_after(5, 1) == 4);
}

TEST_CASE("empty word") {
    const auto w = validate({});
    CHECK(w.empty());
    CHECK(w.component_count() == 0);
    CHECK(width(w) == 0);
    CHECK(level_widths(w).levels.empty());
    CHECK(thin_levels(w).empty());
    CHECK(w == MorseWord{});
}

TEST_CASE("level_widths and width") {
    SUBCASE("two-bridge") {
        const auto p = level_widths(word_of("MMmm"));
        CHECK(p.levels == std::vector<int>{2, 4, 2});
        CHECK(p.width == 8);
    }
    SUBCASE("one-bridge") {
        const auto p = level_widths(word_of("Mm"));
        CHECK(p.levels == std::vector<int>{2});
        CHECK(p.width == 2);
    }
    SUBCASE("stack of two two-bridge words") {
        const auto w = word_of("MMmMmm");
        REQUIRE(position_width(w) == 14);
        const auto p = level_widths(w);
        CHECK(p.levels == std::vector<int>{2, 4, 2, 4, 2});
        CHECK(p.width == 14);
        CHECK(width(w) == 14);
    }
    CHECK(width(canonical_bridge_word(3)) == 18);
    CHECK(width(canonical_bridge_word(1)) == 2);
}

TEST_CASE("bridge_width_formula") {
    CHECK(bridge_width_formula(1) == 2);
    CHECK(bridge_width_formula(2) == 8);
    CHECK(bridge_width_formula(5) == 50);
    CHECK_THROWS_AS(bridge_width_formula(0), MorseError);
    try {
        bridge_width_formula(-3);
    } catch (const MorseError& e) {
        CHECK(e.code() == ErrorCode::NonPositive);
    }
    for (std::int64_t n = 1; n <= 30; ++n)
        CHECK(width(canonical_bridge_word(static_cast<std::size_t>(n))) == bridge_width_formula(n));
}

TEST_CASE("thin_levels") {
    CHECK(thin_levels(word_of("MMmm")).empty());
    CHECK(thin_levels(word_of("MMmMmm")) == std::vector<std::size_t>{2});
    const auto stack3 = word_of("MMmMmMmm");
    const auto thin = thin_levels(stack3);
    CHECK(thin == std::vector<std::size_t>{2, 4});
    for (auto t : thin) CHECK(stack3.total_after(t) == 2);
}

TEST_CASE("is_bridge_position") {
    CHECK(is_bridge_position(word_of("MMmm")));
    CHECK_FALSE(is_bridge_position(word_of("MMmMmm")));
    CHECK(is_bridge_position(word_of("Mm")));
    CHECK_THROWS_AS(is_bridge_position(word_of("M0 m0 M1 m1")), MorseError);
}

TEST_CASE("CriticalEvent accessors") {
    constexpr CriticalEvent e = max_of(7);
    static_assert(e.is_max() && e.component() == 7 && e.strand_change() == 2);
    static_assert(min_of(0).strand_change() == -2);
    CHECK(e.kind() == Extremum::Max);
}

TEST_CASE("properties over random links") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto w = morsewidth::testing::random_link(rng, 3, 5);
        const auto p = level_widths(w);
        REQUIRE(p.levels.size() == w.size() - 1);
        CHECK(p.width == position_width(w));
        CHECK(p.width % 2 == 0);
        for (int level : p.levels) CHECK((level >= 0 && level % 2 == 0));

        // Relabeling components leaves the width alone.
        const auto shifted = relabel(w, [](ComponentId c) { return 10 + 3 * c; });
        CHECK(width(shifted) == p.width);

        // Maxima never fall behind minima from the top down.
        for (ComponentId c : w.components()) {
            int maxima = 0, minima = 0;
            for (const auto& e : w.restriction(c)) {
                (e.is_max() ? maxima : minima) += 1;
                CHECK(maxima >= minima);
            }
            CHECK(maxima == minima);
        }

        if (w.component_count() == 1) {
            CHECK(is_bridge_position(w) == thin_levels(w).empty());
            CHECK(p.width >= 2 * static_cast<Width>(w.maxima_count()));
        }
    }
}
