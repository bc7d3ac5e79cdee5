#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coalign/errors.hpp"
#include "coalign/fullshift.hpp"

using namespace coalign;

TEST_CASE("builtin tables match their definitions") {
    const auto bar = bar_map();
    CHECK(bar.apply({0}) == 1);
    CHECK(bar.apply({1}) == 0);

    const auto four = four_letter_map();
    CHECK(four.apply({0, 0}) == 0);
    CHECK(four.apply({0, 1}) == 0);
    CHECK(four.apply({1, 0}) == 3);
    CHECK(four.apply({1, 2}) == 2);
    CHECK(four.apply({2, 3}) == 3);
    CHECK(four.apply({3, 1}) == 1);
    CHECK(four.apply({3, 2}) == 0);

    const auto drop = drop_first_map(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(drop.apply({a, b}) == b);

    const auto mod3 = mod_sum_map(3);
    CHECK(mod3.apply({1, 2, 2}) == 2);
    CHECK(mod3.apply({2, 2, 2}) == 0);

    CHECK(find_builtin("mod_sum_4").has_value());
    CHECK(!find_builtin("nope").has_value());
    CHECK_THROWS_AS(BlockMap(2, 2, {0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BlockMap(2, 1, {0, 2}), std::invalid_argument);
}

TEST_CASE("sliding block code application") {
    CHECK(apply_code(bar_map(), {0, 1, 1, 0}) == Word{1, 0, 0, 1});
    // Dropping the first symbol is the shift: length goes down by one.
    CHECK(apply_code(drop_first_map(), {1, 0, 0, 1}) == Word{0, 0, 1});
    CHECK(apply_code(four_letter_map(), {0, 1, 2}) == Word{0, 2});
    CHECK_THROWS_AS(apply_code(four_letter_map(), {0}), std::invalid_argument);
}

TEST_CASE("left permutivity of the named examples") {
    CHECK(is_left_permutive(four_letter_map()).ok);
    for (int n = 2; n <= 5; ++n) CHECK(is_left_permutive(mod_sum_map(n)).ok);
    CHECK(is_left_permutive(bar_map()).ok);

    const auto drop = is_left_permutive(drop_first_map());
    REQUIRE(!drop.ok);
    CHECK(drop.failing_prefix == Word{0});  // the section over context 0 is constant

    // n = 1 means the single section a -> d(a) must be a bijection.
    CHECK(!is_left_permutive(BlockMap(2, 1, {0, 0})).ok);
}

TEST_CASE("star lift: unique for bar, ambiguous for drop-first") {
    const auto bar = bar_map();
    const Word z{0, 1, 1, 0, 1};
    const Word tz = apply_code(bar, z);
    for (int y1 = 0; y1 < 2; ++y1) {
        Word y{y1};
        y.insert(y.end(), tz.begin(), tz.end());
        const auto lifts = star_lift_fullshift(bar, y, z);
        REQUIRE(lifts.size() == 1);
        // The lift prepends the flipped first symbol of y.
        CHECK(lifts[0][0] == 1 - y1);
        CHECK(Word(lifts[0].begin() + 1, lifts[0].end()) == z);
    }

    const auto drop = drop_first_map();
    const Word zz{0, 0, 0, 0};
    Word y{0};
    const Word tzz = apply_code(drop, zz);
    y.insert(y.end(), tzz.begin(), tzz.end());
    const auto lifts = star_lift_fullshift(drop, y, zz);
    CHECK(lifts.size() == 2);  // a1 z and a2 z both work

    // mod-2 sum with y1 = 1, z1 = 1 forces a = 0.
    const auto mod2 = mod_sum_map(2);
    const Word z2{1, 0, 1};
    const Word t2 = apply_code(mod2, z2);
    Word y2{1};
    y2.insert(y2.end(), t2.begin(), t2.end());
    const auto l2 = star_lift_fullshift(mod2, y2, z2);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0][0] == 0);

    CHECK_THROWS_AS(star_lift_fullshift(bar, Word{0}, z), std::invalid_argument);
    CHECK_THROWS_AS(star_lift_fullshift(bar, Word{0, 0, 0}, z), std::invalid_argument);
}

TEST_CASE("window verification matches the examples") {
    CHECK(verify_star_commute_fullshift(bar_map(), 6).ok);
    CHECK(verify_star_commute_fullshift(four_letter_map(), 4).ok);
    const auto res = verify_star_commute_fullshift(drop_first_map(), 4);
    REQUIRE(!res.ok);
    CHECK(res.lifts.size() == 2);
    CHECK(res.lifts[0] != res.lifts[1]);
    // Both offending lifts end in the same tail z.
    for (const auto& lift : res.lifts) CHECK(Word(lift.begin() + 1, lift.end()) == res.z);
    CHECK_THROWS_AS(verify_star_commute_fullshift(bar_map(), 1), std::invalid_argument);
}

TEST_CASE("codes commute with the shift on windows") {
    // All block maps over A = {0,1} with n <= 3, all windows of length 6.
    for (int n = 1; n <= 3; ++n) {
        const int words = 1 << n;
        for (int tbl = 0; tbl < (1 << words); ++tbl) {
            std::vector<int> table(static_cast<std::size_t>(words));
            for (int k = 0; k < words; ++k) table[static_cast<std::size_t>(k)] = (tbl >> k) & 1;
            const BlockMap d{2, n, std::move(table)};
            for (int w = 0; w < (1 << 6); ++w) {
                Word x(6);
                for (int k = 0; k < 6; ++k) x[static_cast<std::size_t>(k)] = (w >> k) & 1;
                const Word lhs = apply_code(d, Word(x.begin() + 1, x.end()));
                const Word rhs_full = apply_code(d, x);
                const Word rhs(rhs_full.begin() + 1, rhs_full.end());
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("left-permutive one-symbol maps act bijectively on windows") {
    const auto bar = bar_map();
    for (int len = 1; len <= 6; ++len) {
        std::set<Word> images;
        for (int w = 0; w < (1 << len); ++w) {
            Word x(static_cast<std::size_t>(len));
            for (int k = 0; k < len; ++k) x[static_cast<std::size_t>(k)] = (w >> k) & 1;
            images.insert(apply_code(bar, x));
        }
        CHECK(images.size() == (1u << len));
    }
}

TEST_CASE("block map files round-trip and validate") {
    for (const auto& [name, d] : builtin_examples()) {
        const std::string text = save_block_map(d);
        const auto reloaded = load_block_map_string(text);
        CHECK(reloaded == d);
        CHECK(save_block_map(reloaded) == text);
    }
    CHECK_THROWS_AS(load_block_map_string("blockmap\nalphabet 2\nn 1\n0 0\n"), ParseError);  // missing row
    CHECK_THROWS_AS(load_block_map_string("blockmap\nalphabet 2\nn 1\n0 0\n1 2\n"), ParseError);
    CHECK_THROWS_AS(load_block_map_string("blockmap\nalphabet 2\nn 1\n0 0\n0 1\n"), ParseError);  // dup row
    CHECK_THROWS_AS(load_block_map_string("alphabet 2\n"), ParseError);
}
