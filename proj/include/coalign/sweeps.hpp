#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coalign/basic_data.hpp"
#include "coalign/fullshift.hpp"

namespace coalign {

// Equivalence sweep over basic data: brute-force 1-coalignment against
// invertibility of w(0), plus the q^(|T|-1) vertex-count identity.
struct TileSweepOptions {
    std::vector<std::int64_t> qs = {2, 3, 4, 5, 6};
    std::int64_t exhaustive_q_max = 4;  // larger moduli are sampled
    int samples_per_q = 200;
    std::uint64_t seed = 20260808;
    std::vector<Tile> tiles;  // empty selects default_sweep_tiles()
};

struct TileSweepResult {
    std::int64_t cases = 0;
    std::int64_t mismatches = 0;
    std::int64_t vertex_count_failures = 0;
    std::string first_failure;
    bool ok() const { return mismatches == 0 && vertex_count_failures == 0; }
};

// The hereditary tiles between {0,e1,e2} and the full unit square.
std::vector<Tile> default_sweep_tiles();

TileSweepResult run_tile_sweep(const TileSweepOptions&);

// Equivalence sweep over every block map with the given alphabet and
// window lengths: window-L *-commutation against left permutivity.
struct BlockMapSweepOptions {
    int alphabet = 2;
    std::vector<int> windows = {1, 2, 3};
    int extra_len = 3;  // verification length L = window + extra_len
};

struct BlockMapSweepResult {
    std::int64_t tables = 0;
    std::int64_t mismatches = 0;
    std::string first_failure;
    bool ok() const { return mismatches == 0; }
};

BlockMapSweepResult run_blockmap_sweep(const BlockMapSweepOptions&);

}  // namespace coalign
