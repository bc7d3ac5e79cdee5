// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//   C1  coalignment equivalence sweep over small tiles and moduli
//   C2  *-commutation at depth (2,2) agrees with coalignment
//   C3  block-map *-commutation sweep against left permutivity
//   C4  named block-map examples behave as documented
//   C5  square completion equals full brute-force enumeration
//   C6  vertex and edge counts
//   C7  path-space identity suite (unique prepend, sections, shifts)
//   C8  cylinder preimage decomposition

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coalign/basic_data.hpp"
#include "coalign/fullshift.hpp"
#include "coalign/path_space.hpp"
#include "coalign/skeleton.hpp"
#include "coalign/sweeps.hpp"
#include "oracles.hpp"

using namespace coalign;

namespace {

struct Criterion {
    std::string name;
    bool passed = true;
    std::string detail;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

const Tile kThreeDot{{{0, 0}, {1, 0}, {0, 1}}};
const Tile kUnitSquare{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
const Tile kWide{{{0, 0}, {1, 0}, {2, 0}, {0, 1}}};
const Tile kTall{{{0, 0}, {0, 1}, {0, 2}, {1, 0}}};

std::string fmt_count(const char* label, std::int64_t v) {
    return std::string(label) + "=" + std::to_string(v);
}

// --------------------------------------------------------------------------
// C1: Exhaustive/sampled equivalence of brute-force coalignment and the
// invertibility of w(0); zero mismatches tolerated.  The sweep also
// checks the q^(|T|-1) vertex-count law used again by C6.

TileSweepResult g_sweep_result;  // shared with C6

Criterion criterion_1() {
    Criterion c{"C1 coalignment-equivalence-sweep", true, ""};
    Timer timer;
    TileSweepOptions opts;  // tiles {three-dot, unit square}, q 2..6, 200 samples for q in {5,6}
    g_sweep_result = run_tile_sweep(opts);
    const double secs = timer.seconds();
    c.passed = g_sweep_result.mismatches == 0 && secs < 60.0;
    c.detail = fmt_count("cases", g_sweep_result.cases) + " " +
               fmt_count("mismatches", g_sweep_result.mismatches) + " " +
               std::to_string(secs).substr(0, 5) + "s";
    if (!g_sweep_result.first_failure.empty()) c.detail += " first: " + g_sweep_result.first_failure;
    return c;
}

// --------------------------------------------------------------------------
// C2: verify_star_commute at depth (2,2) must agree with coalignment on
// coaligned and non-coaligned instances alike.

Criterion criterion_2() {
    Criterion c{"C2 star-commute-depth-2-2", true, ""};
    Timer timer;
    // Rule values follow lex tile order: three-dot (0,0),(0,1),(1,0);
    // unit square (0,0),(0,1),(1,0),(1,1).
    const std::vector<BasicData> coaligned = {
        {kThreeDot, Modulus{2}, 0, {1, 1, 1}},
        {kUnitSquare, Modulus{2}, 1, {1, 1, 1, 1}},
        {kThreeDot, Modulus{3}, 1, {2, 1, 1}},
        {kUnitSquare, Modulus{3}, 2, {1, 1, 1, 2}},
        {kThreeDot, Modulus{4}, 2, {3, 1, 3}},
        {kThreeDot, Modulus{5}, 2, {2, 4, 3}},
    };
    const std::vector<BasicData> non_coaligned = {
        {kThreeDot, Modulus{4}, 0, {2, 1, 1}},
        {kUnitSquare, Modulus{4}, 1, {2, 3, 1, 0}},
        {kThreeDot, Modulus{6}, 0, {2, 1, 5}},
        {kThreeDot, Modulus{6}, 5, {3, 5, 1}},
        {kThreeDot, Modulus{4}, 1, {0, 1, 3}},
        {kUnitSquare, Modulus{6}, 3, {4, 5, 1, 2}},
    };
    int checked = 0;
    for (const auto& bd : coaligned) {
        if (!has_invertible_zero(bd)) {
            c.passed = false;
            c.detail = "instance misclassified as coaligned";
            return c;
        }
        const BasicDataUniverse u{&bd};
        const auto res = verify_star_commute(u, 1, 2, Vec2{2, 2});
        if (!res.ok) {
            c.passed = false;
            c.detail = "coaligned instance q=" + std::to_string(bd.q().value()) +
                       " failed: " + res.counterexample;
            return c;
        }
        ++checked;
    }
    for (const auto& bd : non_coaligned) {
        if (has_invertible_zero(bd)) {
            c.passed = false;
            c.detail = "instance misclassified as non-coaligned";
            return c;
        }
        const BasicDataUniverse u{&bd};
        const auto res = verify_star_commute(u, 1, 2, Vec2{2, 2});
        if (res.ok) {
            c.passed = false;
            c.detail = "non-coaligned instance q=" + std::to_string(bd.q().value()) + " passed";
            return c;
        }
        std::printf("      counterexample (q=%lld, lifts=%zu): %.120s...\n",
                    static_cast<long long>(bd.q().value()), res.lift_count,
                    res.counterexample.c_str());
        ++checked;
    }
    const double secs = timer.seconds();
    c.passed = secs < 60.0;
    c.detail = fmt_count("instances", checked) + " all-agree " + std::to_string(secs).substr(0, 5) + "s";
    if (!c.passed) c.detail += " (over the 60s budget)";
    return c;
}

// --------------------------------------------------------------------------
// C3: every block map over {0,1} with n in {1,2,3} at L = n+3, and every
// table over {0,1,2} with n = 2 at L = 5.

Criterion criterion_3() {
    Criterion c{"C3 blockmap-equivalence-sweep", true, ""};
    Timer timer;
    BlockMapSweepOptions two;  // alphabet 2, windows {1,2,3}, L = n+3
    const auto r2 = run_blockmap_sweep(two);
    BlockMapSweepOptions three;
    three.alphabet = 3;
    three.windows = {2};
    three.extra_len = 3;  // L = 5
    const auto r3 = run_blockmap_sweep(three);
    const double secs = timer.seconds();
    c.passed = r2.ok() && r3.ok() && r2.tables == 276 && r3.tables == 19683 && secs < 120.0;
    c.detail = fmt_count("tables_2", r2.tables) + " " + fmt_count("tables_3", r3.tables) + " " +
               fmt_count("mismatches", r2.mismatches + r3.mismatches) + " " +
               std::to_string(secs).substr(0, 5) + "s";
    if (!r2.first_failure.empty()) c.detail += " first: " + r2.first_failure;
    if (!r3.first_failure.empty()) c.detail += " first: " + r3.first_failure;
    return c;
}

// --------------------------------------------------------------------------
// C4: the named examples.

Criterion criterion_4() {
    Criterion c{"C4 example-regression", true, ""};
    if (!is_left_permutive(four_letter_map()).ok) {
        c.passed = false;
        c.detail = "four_letter is not left permutive";
        return c;
    }
    for (int n = 2; n <= 5; ++n) {
        if (!is_left_permutive(mod_sum_map(n)).ok) {
            c.passed = false;
            c.detail = "mod_sum_" + std::to_string(n) + " is not left permutive";
            return c;
        }
    }
    if (!verify_star_commute_fullshift(bar_map(), 6).ok) {
        c.passed = false;
        c.detail = "bar does not *-commute with the shift at L=6";
        return c;
    }
    const auto drop = verify_star_commute_fullshift(drop_first_map(), 5);
    if (drop.ok || drop.lifts.size() != 2) {
        c.passed = false;
        c.detail = "drop_first should fail with a two-preimage counterexample";
        return c;
    }
    c.detail = "four_letter, mod_sum 2..5, bar (L=6), drop_first two-preimage: all as expected";
    return c;
}

// --------------------------------------------------------------------------
// C5: complete_square equals the full q^|T(e1+e2)| brute-force filter on
// every same-source pair.

Criterion criterion_5() {
    Criterion c{"C5 square-completion-oracle", true, ""};
    Timer timer;
    struct Case {
        Tile tile;
        std::int64_t q;
    };
    const std::vector<Case> cases = {{kThreeDot, 2}, {kThreeDot, 3}, {kUnitSquare, 2},
                                     {kUnitSquare, 3}, {kWide, 2},    {kTall, 2}};
    std::int64_t pairs = 0;
    for (const auto& [tile, q] : cases) {
        std::vector<std::vector<std::int64_t>> rules;
        rules.emplace_back(tile.size(), 1);                 // all ones
        std::vector<std::int64_t> zero0(tile.size(), 1);    // w(0) = 0, rest units
        zero0[0] = 0;
        rules.push_back(zero0);
        std::vector<std::int64_t> mixed(tile.size(), 1);    // w(0) = q-1, last cell varied
        mixed[0] = q - 1;
        mixed[tile.size() - 1] = 1;
        if (tile.size() > 3) mixed[1] = q - 1;
        rules.push_back(mixed);
        for (const auto& rule : rules) {
            for (std::int64_t t = 0; t < q; ++t) {
                const BasicData bd{tile, Modulus{q}, t, rule};
                const auto all_squares = oracle::paths(bd, {1, 1});
                const auto blues = enumerate_edges(bd, 1);
                const auto reds = enumerate_edges(bd, 2);
                std::map<PathFn, std::vector<const PathFn*>> reds_by_source;
                for (const auto& r : reds) reds_by_source[source_of(bd, r)].push_back(&r);
                for (const auto& b : blues) {
                    const auto it = reds_by_source.find(source_of(bd, b));
                    if (it == reds_by_source.end()) continue;
                    for (const PathFn* r : it->second) {
                        ++pairs;
                        const auto got = complete_square(bd, b, *r);
                        std::vector<PathFn> want;
                        for (const auto& lam : all_squares)
                            if (oracle::is_completion_of(bd, lam, b, *r)) want.push_back(lam);
                        if (got != want) {
                            c.passed = false;
                            c.detail = "mismatch at q=" + std::to_string(q) + " pair " + show(bd, b) +
                                       " / " + show(bd, *r);
                            return c;
                        }
                    }
                }
            }
        }
    }
    const double secs = timer.seconds();
    c.passed = secs < 30.0;
    c.detail = fmt_count("pairs", pairs) + " identical " + std::to_string(secs).substr(0, 5) + "s";
    if (!c.passed) c.detail += " (over the 30s budget)";
    return c;
}

// --------------------------------------------------------------------------
// C6: counts.  The three-dot instance over Z/2: 4 vertices, 8 edges per
// direction; the vertex-count law was enforced across the C1 sweep.

Criterion criterion_6() {
    Criterion c{"C6 counts", true, ""};
    const BasicData bd{kThreeDot, Modulus{2}, 0, {1, 1, 1}};
    const auto nv = enumerate_vertices(bd).size();
    const auto ne1 = enumerate_edges(bd, 1).size();
    const auto ne2 = enumerate_edges(bd, 2).size();
    c.passed = nv == 4 && ne1 == 8 && ne2 == 8 && g_sweep_result.cases > 0 &&
               g_sweep_result.vertex_count_failures == 0;
    c.detail = fmt_count("vertices", static_cast<std::int64_t>(nv)) + " " +
               fmt_count("edges_dir1", static_cast<std::int64_t>(ne1)) + " " +
               fmt_count("edges_dir2", static_cast<std::int64_t>(ne2)) + " " +
               fmt_count("sweep_vertex_count_failures", g_sweep_result.vertex_count_failures);
    return c;
}

// --------------------------------------------------------------------------
// C7: shift/prepend identity suite at depth (3,3) for the Z/2 three-dot
// instance: unique prepend, the section identity, associativity and
// shift additivity; zero violations.

Criterion criterion_7() {
    Criterion c{"C7 path-identity-suite", true, ""};
    Timer timer;
    const BasicData bd{kThreeDot, Modulus{2}, 0, {1, 1, 1}};
    const BasicDataUniverse u{&bd};
    std::int64_t checks = 0;

    std::vector<Vec2> degrees;
    for (Vec2 p{0, 0}; p.x <= 3; ++p.x)
        for (p.y = 0; p.y <= 3; ++p.y) degrees.push_back(p);

    const auto deep = u.all_paths({3, 3});
    // Shift additivity and the section identity P2.
    for (const auto& x : deep) {
        for (const Vec2 p : degrees) {
            for (const Vec2 r : degrees) {
                if (!componentwise_leq(p + r, {3, 3})) continue;
                if (u.shift(u.shift(x, p), r) != u.shift(x, p + r)) {
                    c.passed = false;
                    c.detail = "shift additivity fails";
                    return c;
                }
                ++checks;
            }
            if (u.prepend(u.initial(x, p), u.shift(x, p)) != x) {
                c.passed = false;
                c.detail = "section identity fails";
                return c;
            }
            ++checks;
        }
    }
    // Unique prepend P1: (initial, shift) is a bijection onto composable pairs.
    for (const Vec2 p : degrees) {
        if (p == Vec2{0, 0}) continue;
        std::map<std::pair<PathFn, PathFn>, std::vector<const PathFn*>> fibers;
        for (const auto& y : deep) fibers[{u.initial(y, p), u.shift(y, p)}].push_back(&y);
        std::int64_t composable = 0;
        for (const auto& lam : enumerate_paths(bd, p))
            composable += static_cast<std::int64_t>(
                enumerate_paths_with_range(bd, Vec2{3, 3} - p, source_of(bd, lam)).size());
        if (static_cast<std::int64_t>(fibers.size()) != composable) {
            c.passed = false;
            c.detail = "prepend misses a composable pair at degree " + to_string(p);
            return c;
        }
        for (const auto& [key, ys] : fibers) {
            if (ys.size() != 1 || u.prepend(key.first, key.second) != *ys[0]) {
                c.passed = false;
                c.detail = "prepend is not unique at degree " + to_string(p);
                return c;
            }
            ++checks;
        }
    }
    // Associativity P4 over unit and square factors.
    const std::vector<Vec2> small = {{1, 0}, {0, 1}, {1, 1}};
    for (const Vec2 a : small) {
        for (const Vec2 b : small) {
            const Vec2 rest = Vec2{3, 3} - a - b;
            for (const auto& lam : enumerate_paths(bd, a)) {
                for (const auto& mu : enumerate_paths_with_range(bd, b, source_of(bd, lam))) {
                    for (const auto& x : enumerate_paths_with_range(bd, rest, source_of(bd, mu))) {
                        if (u.prepend(lam, u.prepend(mu, x)) != u.prepend(compose(bd, lam, mu), x)) {
                            c.passed = false;
                            c.detail = "prepend associativity fails";
                            return c;
                        }
                        ++checks;
                    }
                }
            }
        }
    }
    c.detail = fmt_count("identities", checks) + " zero-violations " +
               std::to_string(timer.seconds()).substr(0, 5) + "s";
    return c;
}

// --------------------------------------------------------------------------
// C8: preimage cylinder decomposition for every vertex cylinder of the
// Z/2 three-dot instance at depth (2,2), both colors.

Criterion criterion_8() {
    Criterion c{"C8 cylinder-decomposition", true, ""};
    const BasicData bd{kThreeDot, Modulus{2}, 0, {1, 1, 1}};
    const BasicDataUniverse u{&bd};
    std::int64_t cylinders = 0;
    for (const auto& v : enumerate_vertices(bd)) {
        for (int color : {1, 2}) {
            const auto out = preimage_cylinder_check(u, v, color, Vec2{2, 2});
            if (!out.ok()) {
                c.passed = false;
                c.detail = "vertex cylinder " + show(bd, v) + " color " + std::to_string(color) +
                           ": " + out.detail;
                return c;
            }
            ++cylinders;
        }
    }
    for (int color : {1, 2}) {
        if (!shift_surjective_at_depth(u, color, Vec2{2, 2})) {
            c.passed = false;
            c.detail = "shift " + std::to_string(color) + " is not onto at depth (2,2)";
            return c;
        }
    }
    c.detail = fmt_count("cylinders", cylinders) + " disjoint-and-covering, shifts onto";
    return c;
}

}  // namespace

int main() {
    const std::vector<Criterion (*)()> criteria = {criterion_1, criterion_2, criterion_3,
                                                   criterion_4, criterion_5, criterion_6,
                                                   criterion_7, criterion_8};
    int failed = 0;
    for (const auto& fn : criteria) {
        const Criterion c = fn();
        std::printf("[%s] %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
        if (!c.passed) ++failed;
    }
    std::printf("ACCEPTANCE: %d/8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
