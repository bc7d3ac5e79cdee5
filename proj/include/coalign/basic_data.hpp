#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalign/modular.hpp"
#include "coalign/validation.hpp"
#include "coalign/vec2.hpp"

namespace coalign {

class KGraphSkeleton;

// Finite subset of N^2.  Heredity (downward closure) and corner
// positivity are checked by validate_basic_data rather than enforced
// here, so broken tiles can be constructed and reported.
class Tile {
public:
    Tile() = default;
    explicit Tile(std::vector<Vec2> points);  // sorts and dedups

    const std::vector<Vec2>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(Vec2 p) const;
    Vec2 corner() const;  // componentwise join; (0,0) when empty
    // First (lex) point required by downward closure but absent.
    std::optional<Vec2> heredity_violation() const;
    // T(n): union of the translates T + m over 0 <= m <= n, lex sorted.
    std::vector<Vec2> region(Vec2 degree) const;

private:
    std::vector<Vec2> points_;
};

namespace detail {
struct DegreeContext;  // cached cells and trace congruences per degree
}

// Generating data of a 2-graph: tile, alphabet Z/qZ, trace t and rule w
// with one coefficient per tile point.  Immutable after construction.
class BasicData {
public:
    // rule is aligned with tile.points(); values are reduced mod q.
    BasicData(Tile tile, Modulus q, std::int64_t trace, std::vector<std::int64_t> rule);
    // Throws std::invalid_argument unless the rule is defined on exactly
    // the tile.
    static BasicData from_map(Tile tile, Modulus q, std::int64_t trace,
                              const std::map<Vec2, std::int64_t>& rule);

    const Tile& tile() const { return tile_; }
    Modulus q() const { return q_; }
    Residue trace() const { return {trace_, q_}; }
    Residue rule_at(Vec2 tile_point) const;
    const std::vector<std::int64_t>& rule_values() const { return rule_; }

    // Internal: memoized domain data for one path degree.
    const detail::DegreeContext& degree_context(Vec2 degree) const;
    // Internal: empty when valid, else the first failing check (cached).
    const std::string& validity_failure() const;

private:
    Tile tile_;
    Modulus q_;
    std::int64_t trace_;
    std::vector<std::int64_t> rule_;
    struct CacheState;
    std::shared_ptr<CacheState> cache_;
};

// Path of degree n: one value per cell of T(n), stored in lex cell
// order.  The owning BasicData supplies the tile and modulus; paths of
// different data must not be mixed.
class PathFn {
public:
    PathFn() = default;
    PathFn(Vec2 degree, std::vector<std::int64_t> values);

    Vec2 degree() const { return degree_; }
    const std::vector<std::int64_t>& values() const { return values_; }

    friend auto operator<=>(const PathFn&, const PathFn&) = default;

private:
    Vec2 degree_{0, 0};
    std::vector<std::int64_t> values_;
};

std::int64_t value_at(const BasicData&, const PathFn&, Vec2 cell);
// "(x,y)=v ..." in lex cell order.
std::string show(const BasicData&, const PathFn&);

// Heredity, corner positivity and corner invertibility, each reported.
ValidationReport validate_basic_data(const BasicData&);
// Throws std::invalid_argument naming the first failing check.
void require_valid(const BasicData&);

bool has_invertible_zero(const BasicData&);
bool has_three_invertible_corners(const BasicData&);

// Exhaustive enumerations (brute force with constraint pruning); results
// are sorted and deterministic.
std::vector<PathFn> enumerate_vertices(const BasicData&);
std::vector<PathFn> enumerate_edges(const BasicData&, int direction);  // 1 or 2
std::vector<PathFn> enumerate_paths(const BasicData&, Vec2 degree);
std::vector<PathFn> enumerate_paths_with_source(const BasicData&, Vec2 degree, const PathFn& vertex);
std::vector<PathFn> enumerate_paths_with_range(const BasicData&, Vec2 degree, const PathFn& vertex);

// lambda(m, n): the degree n-m path i |-> lambda(m + i).
PathFn segment(const BasicData&, const PathFn&, Vec2 m, Vec2 n);
PathFn range_of(const BasicData&, const PathFn&);   // lambda(0, 0)
PathFn source_of(const BasicData&, const PathFn&);  // lambda(d, d)

// All degree-(1,1) paths lambda with lambda(e1, e1+e2) = e_red and
// lambda(e2, e1+e2) = e_blue, built from the forced boundary values and
// the solutions of the origin-cell congruence.  Empty and multi-element
// results are legitimate outcomes, not errors.
std::vector<PathFn> complete_square(const BasicData&, const PathFn& e_blue, const PathFn& e_red);

// Unique composite with initial segment mu and final segment nu, found
// by constraint propagation over the translated trace congruences.
PathFn compose(const BasicData&, const PathFn& mu, const PathFn& nu);

// Propagation could not determine every cell; indicates invalid input
// when compose's preconditions hold.
class ComposeStallError : public std::runtime_error {
public:
    ComposeStallError(std::string msg, std::vector<Vec2> stuck)
        : std::runtime_error(std::move(msg)), stuck_cells(std::move(stuck)) {}
    std::vector<Vec2> stuck_cells;
};

struct CoalignCounterexample {
    PathFn edge_blue;   // degree e1
    PathFn edge_red;    // degree e2
    std::size_t completions = 0;
};
struct BruteCoalignResult {
    bool coaligned = true;
    std::int64_t pairs_checked = 0;
    std::optional<CoalignCounterexample> counterexample;
};
// True iff every same-source (blue, red) edge pair has exactly one
// degree-(1,1) completion.
BruteCoalignResult is_one_coaligned_bruteforce(const BasicData&);

// 2-colored skeleton with the degree-0/e1/e2 data as vertices and edges
// and one square per degree-(1,1) path.
KGraphSkeleton export_skeleton(const BasicData&);

BasicData load_basic_data(std::istream&);
BasicData load_basic_data_string(const std::string& text);
BasicData load_basic_data_file(const std::string& path);
std::string save_basic_data(const BasicData&);

}  // namespace coalign
