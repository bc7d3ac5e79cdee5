#include "coalign/sweeps.hpp"

#include <numeric>
#include <random>

#include "coalign/errors.hpp"
#include "coalign/parallel.hpp"

namespace coalign {

std::vector<Tile> default_sweep_tiles() {
    return {Tile{{{0, 0}, {1, 0}, {0, 1}}}, Tile{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}};
}

namespace {

std::vector<std::int64_t> units_mod(std::int64_t q) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 1; v < q; ++v)
        if (std::gcd(v, q) == 1) out.push_back(v);
    return out;
}

std::int64_t int_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) out *= base;
    return out;
}

std::string describe_case(const BasicData& bd) {
    std::string out = "q=" + std::to_string(bd.q().value()) + " t=" + std::to_string(bd.trace().value()) + " tile=";
    for (const auto& p : bd.tile().points()) out += to_string(p);
    out += " w=";
    for (std::size_t i = 0; i < bd.rule_values().size(); ++i)
        out += (i ? "," : "") + std::to_string(bd.rule_values()[i]);
    return out;
}

}  // namespace

TileSweepResult run_tile_sweep(const TileSweepOptions& opts) {
    const std::vector<Tile> tiles = opts.tiles.empty() ? default_sweep_tiles() : opts.tiles;

    // Materialize the case list up front so sampling stays deterministic
    // and the parallel run aggregates by index.
    std::vector<BasicData> cases;
    std::mt19937_64 rng(opts.seed);
    for (const Tile& tile : tiles) {
        const Vec2 c = tile.corner();
        const Vec2 corner1{c.x, 0}, corner2{0, c.y};
        for (const std::int64_t q : opts.qs) {
            const auto units = units_mod(q);
            const auto& pts = tile.points();
            std::vector<std::size_t> corner_slots, free_slots;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (pts[i] == corner1 || pts[i] == corner2)
                    corner_slots.push_back(i);
                else
                    free_slots.push_back(i);
            }
            if (q <= opts.exhaustive_q_max) {
                // Odometer over corner units, free cells and the trace.
                std::vector<std::size_t> unit_idx(corner_slots.size(), 0);
                std::vector<std::int64_t> free_val(free_slots.size(), 0);
                for (;;) {
                    std::vector<std::int64_t> rule(pts.size(), 0);
                    for (std::size_t k = 0; k < corner_slots.size(); ++k)
                        rule[corner_slots[k]] = units[unit_idx[k]];
                    for (std::size_t k = 0; k < free_slots.size(); ++k)
                        rule[free_slots[k]] = free_val[k];
                    for (std::int64_t t = 0; t < q; ++t)
                        cases.emplace_back(tile, Modulus{q}, t, rule);

                    std::size_t k = 0;
                    for (; k < free_slots.size(); ++k) {
                        if (++free_val[k] < q) break;
                        free_val[k] = 0;
                    }
                    if (k < free_slots.size()) continue;
                    for (k = 0; k < corner_slots.size(); ++k) {
                        if (++unit_idx[k] < units.size()) break;
                        unit_idx[k] = 0;
                    }
                    if (k == corner_slots.size()) break;
                }
            } else {
                // Sampled rules, every trace per rule.
                std::uniform_int_distribution<std::int64_t> any(0, q - 1);
                std::uniform_int_distribution<std::size_t> unit(0, units.size() - 1);
                for (int s = 0; s < opts.samples_per_q; ++s) {
                    std::vector<std::int64_t> rule(pts.size(), 0);
                    for (std::size_t i = 0; i < pts.size(); ++i) rule[i] = any(rng);
                    for (const std::size_t i : corner_slots) rule[i] = units[unit(rng)];
                    for (std::int64_t t = 0; t < q; ++t) cases.emplace_back(tile, Modulus{q}, t, rule);
                }
            }
        }
    }

    struct CaseOutcome {
        bool mismatch = false;
        bool vertex_count_bad = false;
        std::string description;
    };
    std::vector<CaseOutcome> outcomes(cases.size());
    parallel_for(static_cast<std::int64_t>(cases.size()), [&](std::int64_t i) {
        const BasicData& bd = cases[static_cast<std::size_t>(i)];
        CaseOutcome& out = outcomes[static_cast<std::size_t>(i)];
        const bool criterion = has_invertible_zero(bd);
        const auto brute = is_one_coaligned_bruteforce(bd);
        if (brute.coaligned != criterion) {
            out.mismatch = true;
            out.description = describe_case(bd) + " : brute=" + (brute.coaligned ? "true" : "false") +
                              " criterion=" + (criterion ? "true" : "false");
        }
        const auto n_vertices = static_cast<std::int64_t>(enumerate_vertices(bd).size());
        const std::int64_t expected =
            int_pow(bd.q().value(), static_cast<std::int64_t>(bd.tile().size()) - 1);
        if (n_vertices != expected) {
            out.vertex_count_bad = true;
            if (out.description.empty())
                out.description = describe_case(bd) + " : vertices=" + std::to_string(n_vertices) +
                                  " expected=" + std::to_string(expected);
        }
    });

    TileSweepResult res;
    res.cases = static_cast<std::int64_t>(cases.size());
    for (const auto& out : outcomes) {
        if (out.mismatch) ++res.mismatches;
        if (out.vertex_count_bad) ++res.vertex_count_failures;
        if ((out.mismatch || out.vertex_count_bad) && res.first_failure.empty())
            res.first_failure = out.description;
    }
    return res;
}

BlockMapSweepResult run_blockmap_sweep(const BlockMapSweepOptions& opts) {
    detail::check_arg(opts.alphabet >= 1, "alphabet must be at least 1");
    BlockMapSweepResult res;
    for (const int n : opts.windows) {
        const std::int64_t words = int_pow(opts.alphabet, n);
        detail::check_arg(words <= 32, "window word count too large for an exhaustive table sweep");
        std::int64_t tables = 1;
        for (std::int64_t i = 0; i < words; ++i) {
            tables *= opts.alphabet;
            detail::check_arg(tables <= (std::int64_t{1} << 40),
                              "table count too large for an exhaustive sweep");
        }
        const int len = n + opts.extra_len;

        std::vector<std::string> failures(static_cast<std::size_t>(tables));
        parallel_for(tables, [&](std::int64_t idx) {
            std::vector<int> table(static_cast<std::size_t>(words));
            std::int64_t rem = idx;
            for (std::size_t k = table.size(); k-- > 0;) {
                table[k] = static_cast<int>(rem % opts.alphabet);
                rem /= opts.alphabet;
            }
            const BlockMap d{opts.alphabet, n, std::move(table)};
            const bool permutive = is_left_permutive(d).ok;
            const auto star = verify_star_commute_fullshift(d, len);
            if (star.ok != permutive)
                failures[static_cast<std::size_t>(idx)] =
                    "alphabet=" + std::to_string(opts.alphabet) + " n=" + std::to_string(n) +
                    " table#" + std::to_string(idx) + " : star=" + (star.ok ? "true" : "false") +
                    " permutive=" + (permutive ? "true" : "false");
        });
        res.tables += tables;
        for (const auto& f : failures) {
            if (f.empty()) continue;
            ++res.mismatches;
            if (res.first_failure.empty()) res.first_failure = f;
        }
    }
    return res;
}

}  // namespace coalign
