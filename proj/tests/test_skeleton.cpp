#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalign/errors.hpp"
#include "coalign/skeleton.hpp"

using namespace coalign;

namespace {

// One vertex with one loop per color and the single commuting square
// for every color pair.
KGraphSkeleton terminal_graph(int k) {
    std::vector<SkeletonEdge> edges;
    for (int c = 1; c <= k; ++c) edges.push_back({"l" + std::to_string(c), c, "v", "v"});
    std::vector<Square> squares;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            squares.push_back({i, j, "l" + std::to_string(i), "l" + std::to_string(j),
                               "l" + std::to_string(i), "l" + std::to_string(j)});
    return {k, {"v"}, std::move(edges), std::move(squares)};
}

// One vertex, two loops per color, squares arranged so that both
// factorization directions are bijections yet the pair (a, b) has two
// witnesses and (a, b2) has none.
KGraphSkeleton factorizing_but_not_coaligned() {
    std::vector<SkeletonEdge> edges = {
        {"a", 1, "v", "v"}, {"a2", 1, "v", "v"}, {"b", 2, "v", "v"}, {"b2", 2, "v", "v"}};
    std::vector<Square> squares = {
        {1, 2, "a", "b", "a", "b"},
        {1, 2, "a", "b", "a2", "b2"},
        {1, 2, "a2", "b2", "a", "b"},
        {1, 2, "a2", "b2", "a2", "b2"},
    };
    return {2, {"v"}, std::move(edges), std::move(squares)};
}

}  // namespace

TEST_CASE("terminal graph passes every validation check") {
    const auto g = terminal_graph(2);
    const auto rep = validate(g);
    CHECK(rep.ok());
    CHECK(rep.warnings.empty());
    for (const char* name : {"structure", "square-consistency", "unique-factorization",
                             "no-sources", "no-sinks", "row-finite"})
        CHECK(rep.find(name) != nullptr);
}

TEST_CASE("terminal graph has exactly one witness per pair") {
    const auto g = terminal_graph(2);
    const auto ws = coalign_witness(g, "l1", "l2");
    REQUIRE(ws.size() == 1);
    CHECK(ws[0] == std::pair<std::string, std::string>{"l1", "l2"});
    // Reversed color order swaps the witness pair.
    const auto rev = coalign_witness(g, "l2", "l1");
    REQUIRE(rev.size() == 1);
    CHECK(rev[0] == std::pair<std::string, std::string>{"l2", "l1"});
    const auto res = is_one_coaligned(g);
    CHECK(res.coaligned);
    CHECK(res.pairs_checked == 1);
}

TEST_CASE("k=3 validation warns that the cube condition is unchecked") {
    const auto g = terminal_graph(3);
    const auto rep = validate(g);
    CHECK(rep.ok());
    REQUIRE(rep.warnings.size() == 1);
    CHECK(rep.warnings[0].find("cube") != std::string::npos);
    CHECK(is_one_coaligned(g).coaligned);
}

TEST_CASE("unique factorization does not imply coalignment") {
    const auto g = factorizing_but_not_coaligned();
    CHECK(validate(g).ok());
    CHECK(coalign_witness(g, "a", "b").size() == 2);
    CHECK(coalign_witness(g, "a", "b2").empty());
    const auto res = is_one_coaligned(g);
    REQUIRE(!res.coaligned);
    REQUIRE(res.counterexample.has_value());
    CHECK(res.counterexample->ei == "a");
    CHECK(res.counterexample->ej == "b");
    CHECK(res.counterexample->witnesses == 2);
}

TEST_CASE("a composable pair in two squares fails factorization") {
    std::vector<SkeletonEdge> edges = {
        {"p", 1, "u", "w"}, {"P", 1, "w", "u"}, {"d", 2, "u", "w"}, {"D", 2, "w", "u"}};
    std::vector<Square> squares = {
        {1, 2, "p", "d", "P", "D"},
        {1, 2, "P", "D", "p", "d"},
        {1, 2, "p", "d", "P", "D"},  // duplicate
    };
    const KGraphSkeleton g{2, {"u", "w"}, std::move(edges), std::move(squares)};
    const auto rep = validate(g);
    CHECK(!rep.ok());
    const auto* fact = rep.find("unique-factorization");
    REQUIRE(fact != nullptr);
    CHECK(!fact->passed);
    CHECK(fact->detail.find("2 squares") != std::string::npos);
}

TEST_CASE("dangling endpoints are reported, not repaired") {
    const KGraphSkeleton g{2, {"v"}, {{"e", 1, "v", "ghost"}}, {}};
    const auto rep = validate(g);
    REQUIRE(!rep.ok());
    const auto* s = rep.find("structure");
    REQUIRE(s != nullptr);
    CHECK(!s->passed);
    CHECK(s->detail.find("dangling") != std::string::npos);
    CHECK_THROWS_AS(is_one_coaligned(g), std::invalid_argument);
}

TEST_CASE("a vertex missing an in-color fails the no-sources check") {
    // Color-2 edges both point at u, so w receives no color-2 edge.
    std::vector<SkeletonEdge> edges = {
        {"x1", 1, "u", "w"}, {"x2", 1, "w", "u"}, {"y1", 2, "u", "u"}, {"y2", 2, "w", "u"}};
    const KGraphSkeleton g{2, {"u", "w"}, std::move(edges), {}};
    const auto rep = validate(g);
    const auto* src = rep.find("no-sources");
    REQUIRE(src != nullptr);
    CHECK(!src->passed);
}

TEST_CASE("witness preconditions are enforced") {
    const auto g = factorizing_but_not_coaligned();
    CHECK_THROWS_AS(coalign_witness(g, "a", "a2"), std::invalid_argument);  // same color
    const KGraphSkeleton h{2,
                           {"u", "w"},
                           {{"a", 1, "u", "w"}, {"b", 2, "w", "u"}},
                           {}};
    CHECK_THROWS_AS(coalign_witness(h, "a", "b"), std::invalid_argument);  // different sources
    CHECK_THROWS_AS(coalign_witness(g, "a", "zz"), std::invalid_argument);  // unknown id
}

TEST_CASE("skeleton files round-trip byte-identically") {
    const auto g = terminal_graph(2);
    const std::string text = save_skeleton(g);
    const auto reloaded = load_skeleton_string(text);
    CHECK(save_skeleton(reloaded) == text);
    CHECK(reloaded.k() == 2);
    CHECK(reloaded.edges().size() == 2);
    CHECK(reloaded.squares().size() == 1);
}

TEST_CASE("skeleton parse errors are pointed") {
    CHECK_THROWS_AS(load_skeleton_string("not-a-skeleton\n"), ParseError);
    CHECK_THROWS_AS(load_skeleton_string("skeleton\nv a\n"), ParseError);  // missing k
    CHECK_THROWS_AS(load_skeleton_string("skeleton\nk 2\nsq 1 2 a b c\n"), ParseError);
    CHECK_THROWS_AS(load_skeleton_string("skeleton\nk 2\ne e1 one v v\n"), ParseError);
}
