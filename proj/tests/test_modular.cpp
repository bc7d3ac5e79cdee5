#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "coalign/modular.hpp"
#include "oracles.hpp"

using namespace coalign;

TEST_CASE("residues reduce into [0, q)") {
    const Modulus q{5};
    CHECK(Residue(7, q).value() == 2);
    CHECK(Residue(-1, q).value() == 4);
    CHECK(Residue(-10, q).value() == 0);
    CHECK_THROWS_AS(Modulus{1}, std::invalid_argument);
}

TEST_CASE("arithmetic stays in the ring and rejects mixed moduli") {
    const Modulus q{6};
    const Residue a{4, q}, b{5, q};
    CHECK((a + b).value() == 3);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 2);
    const Residue other{1, Modulus{7}};
    CHECK_THROWS_AS(a + other, std::logic_error);
    CHECK_THROWS_AS(a * other, std::logic_error);
}

TEST_CASE("extended euclid solves a*x + b*y = gcd") {
    for (std::int64_t a = 0; a <= 40; ++a) {
        for (std::int64_t b = 0; b <= 40; ++b) {
            if (a == 0 && b == 0) continue;
            const auto e = extended_euclid(a, b);
            CHECK(e.gcd == std::gcd(a, b));
            CHECK(a * e.x + b * e.y == e.gcd);
        }
    }
}

TEST_CASE("inverse: pinned examples") {
    CHECK(inverse(Residue{1, Modulus{9}})->value() == 1);
    CHECK(inverse(Residue{3, Modulus{7}})->value() == 5);  // 3*5 = 15 = 1 mod 7
    CHECK(!inverse(Residue{2, Modulus{4}}).has_value());
}

TEST_CASE("inverse agrees with exhaustive search for q <= 64") {
    for (std::int64_t q = 2; q <= 64; ++q) {
        for (std::int64_t a = 0; a < q; ++a) {
            const auto got = inverse(Residue{a, Modulus{q}});
            const auto want = oracle::inverse(a, q);
            CHECK(got.has_value() == want.has_value());
            CHECK(got.has_value() == (std::gcd(a, q) == 1));
            if (got) CHECK(got->value() == *want);
        }
    }
}

TEST_CASE("solve_linear: pinned examples") {
    const Modulus q4{4};
    for (std::int64_t r = 0; r < 7; ++r) {
        const auto sols = solve_linear(Residue{1, Modulus{7}}, Residue{r, Modulus{7}});
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].value() == r);
    }
    CHECK(solve_linear(Residue{2, q4}, Residue{1, q4}).empty());
    const auto two = solve_linear(Residue{2, q4}, Residue{2, q4});
    REQUIRE(two.size() == 2);
    CHECK(two[0].value() == 1);
    CHECK(two[1].value() == 3);
    CHECK_THROWS_AS(solve_linear(Residue{1, Modulus{3}}, Residue{1, Modulus{5}}), std::logic_error);
}

TEST_CASE("solve_linear matches exhaustive search and the gcd count law") {
    for (std::int64_t q = 2; q <= 64; ++q) {
        const Modulus m{q};
        for (std::int64_t w = 0; w < q; ++w) {
            for (std::int64_t r = 0; r < q; ++r) {
                const auto got = solve_linear(Residue{w, m}, Residue{r, m});
                const auto want = oracle::solve_linear(w, r, q);
                REQUIRE(got.size() == want.size());
                const std::int64_t g = std::gcd(w, q);
                CHECK((got.empty() || static_cast<std::int64_t>(got.size()) == g));
                for (std::size_t i = 0; i < got.size(); ++i) {
                    CHECK(got[i].value() == want[i]);  // ascending order matches the scan
                    CHECK((w * got[i].value()) % q == r);
                    if (i) CHECK(got[i - 1].value() < got[i].value());
                }
            }
        }
    }
}
