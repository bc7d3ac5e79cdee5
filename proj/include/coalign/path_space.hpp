#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coalign/basic_data.hpp"
#include "coalign/errors.hpp"
#include "coalign/skeleton.hpp"

namespace coalign {

// ---------------------------------------------------------------------------
// Degree vectors of general rank.

using DegreeVec = std::vector<int>;

DegreeVec dv_zero(int k);
DegreeVec dv_unit(int k, int axis);  // axis 1..k
DegreeVec dv_add(const DegreeVec& a, const DegreeVec& b);
DegreeVec dv_sub(const DegreeVec& a, const DegreeVec& b);
bool dv_leq(const DegreeVec& a, const DegreeVec& b);
std::string dv_show(const DegreeVec& a);

// Row-major layout of the lattice box prod [0, dims[c]); iteration in
// index order is lex order on points.
struct GridLayout {
    std::vector<int> dims;

    std::size_t size() const;
    std::size_t index(const DegreeVec& p) const;
    DegreeVec point(std::size_t idx) const;
};

// ---------------------------------------------------------------------------
// Depth-truncated path of a skeleton-presented k-graph: one vertex per
// lattice point of [0, depth] and one edge per unit step, with every
// unit cell matching a recorded commuting square.

class GridPath {
public:
    GridPath() = default;
    GridPath(DegreeVec depth, std::vector<std::string> vertices,
             std::vector<std::vector<std::string>> edges_per_axis);

    const DegreeVec& depth() const { return depth_; }
    int rank() const { return static_cast<int>(depth_.size()); }
    const std::string& vertex_at(const DegreeVec& p) const;
    // Edge from lattice point p to p + e_axis (range at p).
    const std::string& edge_at(const DegreeVec& p, int axis) const;

    GridLayout vertex_layout() const;
    GridLayout edge_layout(int axis) const;

    std::string show() const;
    friend bool operator==(const GridPath&, const GridPath&) = default;

private:
    DegreeVec depth_;
    std::vector<std::string> vertices_;
    std::vector<std::vector<std::string>> edges_;
};

// Throws std::logic_error unless every edge id resolves with the axis
// color, endpoints line up, and every unit cell is a recorded square.
void check_grid(const KGraphSkeleton&, const GridPath&);

// ---------------------------------------------------------------------------
// Path universes: the two backends share one operation vocabulary so the
// shift/lift algorithms below can run over either.

struct BasicDataUniverse {
    const BasicData* bd = nullptr;

    using Path = PathFn;
    using Degree = Vec2;
    using Vertex = PathFn;

    int rank() const { return 2; }
    Degree zero() const { return {0, 0}; }
    Degree unit(int color) const { return unit2(color); }
    Degree add(Degree a, Degree b) const { return a + b; }
    Degree sub(Degree a, Degree b) const { return a - b; }
    bool leq(Degree a, Degree b) const { return componentwise_leq(a, b); }
    Degree depth_of(const Path& x) const { return x.degree(); }

    Path shift(const Path& x, Degree p) const;
    Path prepend(const Path& lambda, const Path& x) const { return compose(*bd, lambda, x); }
    Path initial(const Path& x, Degree p) const { return segment(*bd, x, {0, 0}, p); }
    Vertex range_of(const Path& x) const { return coalign::range_of(*bd, x); }

    std::vector<Path> all_paths(Degree depth) const { return enumerate_paths(*bd, depth); }
    std::vector<Path> edges_with_source(int color, const Vertex& v) const {
        return enumerate_paths_with_source(*bd, unit(color), v);
    }
    std::vector<std::pair<Path, Path>> coalign_witnesses(const Path& edge_i, const Path& edge_j,
                                                         int i, int j) const;
    std::string show(const Path& x) const { return coalign::show(*bd, x); }
};

struct SkeletonUniverse {
    const KGraphSkeleton* graph = nullptr;

    using Path = GridPath;
    using Degree = DegreeVec;
    using Vertex = std::string;

    int rank() const { return graph->k(); }
    Degree zero() const { return dv_zero(rank()); }
    Degree unit(int color) const { return dv_unit(rank(), color); }
    Degree add(Degree a, Degree b) const { return dv_add(a, b); }
    Degree sub(Degree a, Degree b) const { return dv_sub(a, b); }
    bool leq(const Degree& a, const Degree& b) const { return dv_leq(a, b); }
    Degree depth_of(const Path& x) const { return x.depth(); }

    Path shift(const Path& x, const Degree& p) const;
    Path prepend(const Path& lambda, const Path& x) const;
    Path initial(const Path& x, const Degree& p) const;
    Vertex range_of(const Path& x) const { return x.vertex_at(zero()); }

    std::vector<Path> all_paths(const Degree& depth) const;
    std::vector<Path> edges_with_source(int color, const Vertex& v) const;
    std::vector<std::pair<Path, Path>> coalign_witnesses(const Path& edge_i, const Path& edge_j,
                                                         int i, int j) const;
    std::string show(const Path& x) const { return x.show(); }

    // Single skeleton edge as a depth-e_color path.
    Path edge_path(const std::string& edge_id) const;

private:
    Path prepend_edge(const std::string& edge_id, int axis, const Path& x) const;
};

// ---------------------------------------------------------------------------
// Generic operations.

// All x with shift(x, e_j) = y and shift(x, e_i) = z, built as
// f_j e_i w from the coalignment witnesses of the leading edge pair.
// Preconditions (throwing std::invalid_argument): i != j, the depths
// line up, and shift(y, e_i) == shift(z, e_j).
template <class U>
std::vector<typename U::Path> star_lift(const U& u, const typename U::Path& y,
                                        const typename U::Path& z, int i, int j) {
    detail::check_arg(1 <= i && i <= u.rank() && 1 <= j && j <= u.rank() && i != j,
                      "star_lift needs two distinct colors in 1..k");
    const auto ei = u.unit(i);
    const auto ej = u.unit(j);
    detail::check_arg(u.leq(ei, u.depth_of(y)), "depth(y) must dominate e_i");
    detail::check_arg(u.leq(ej, u.depth_of(z)), "depth(z) must dominate e_j");
    detail::check_arg(u.sub(u.depth_of(y), ei) == u.sub(u.depth_of(z), ej),
                      "star_lift needs depth(y) - e_i == depth(z) - e_j");
    detail::check_arg(u.shift(y, ei) == u.shift(z, ej),
                      "star_lift needs shift(y, e_i) == shift(z, e_j)");

    const auto edge_i = u.initial(y, ei);
    const auto edge_j = u.initial(z, ej);
    const auto witnesses = u.coalign_witnesses(edge_i, edge_j, i, j);

    std::vector<typename U::Path> lifts;
    lifts.reserve(witnesses.size());
    for (const auto& [fi, fj] : witnesses) {
        auto x = u.prepend(fj, y);
        detail::require(u.shift(x, ej) == y, "star lift does not shift back to y");
        detail::require(u.shift(x, ei) == z, "star lift does not shift back to z");
        detail::require(x == u.prepend(fi, z), "star lift disagrees with its other factorization");
        lifts.push_back(std::move(x));
    }
    return lifts;
}

struct StarCommuteOutcome {
    bool ok = true;
    std::int64_t tails = 0;      // common tails w enumerated
    std::int64_t instances = 0;  // (w, e_i, e_j) lift problems checked
    std::size_t lift_count = 1;  // lifts at the counterexample
    std::string counterexample;  // human-readable; empty iff ok
};

// Finite-depth *-commutation of sigma^{e_i} and sigma^{e_j}: for every
// common tail w of the given depth and every edge pair into r(w), the
// pair (e_i w, e_j w) must admit exactly one lift.
template <class U>
StarCommuteOutcome verify_star_commute(const U& u, int i, int j, const typename U::Degree& depth) {
    detail::check_arg(1 <= i && i <= u.rank() && 1 <= j && j <= u.rank() && i != j,
                      "verify_star_commute needs two distinct colors in 1..k");
    StarCommuteOutcome out;
    // Edge lists per range vertex, computed once.
    std::map<typename U::Vertex, std::pair<std::vector<typename U::Path>, std::vector<typename U::Path>>>
        edges_into;
    for (const auto& w : u.all_paths(depth)) {
        ++out.tails;
        const auto v = u.range_of(w);
        auto it = edges_into.find(v);
        if (it == edges_into.end())
            it = edges_into.emplace(v, std::make_pair(u.edges_with_source(i, v), u.edges_with_source(j, v)))
                     .first;
        const auto& eis = it->second.first;
        const auto& ejs = it->second.second;
        for (const auto& pe : eis) {
            const auto y = u.prepend(pe, w);
            for (const auto& qe : ejs) {
                const auto z = u.prepend(qe, w);
                ++out.instances;
                const auto lifts = star_lift(u, y, z, i, j);
                if (lifts.size() != 1) {
                    out.ok = false;
                    out.lift_count = lifts.size();
                    out.counterexample = "y = " + u.show(y) + " ; z = " + u.show(z) +
                                         " ; lifts = " + std::to_string(lifts.size());
                    return out;
                }
            }
        }
    }
    return out;
}

struct CylinderOutcome {
    bool covered = true;
    bool disjoint = true;
    std::int64_t preimage_size = 0;
    std::int64_t pieces = 0;
    std::string detail;
    bool ok() const { return covered && disjoint; }
};

// At the given truncation depth, the preimage of the lambda-cylinder
// under sigma^{e_i} must be the disjoint union of the (e lambda)-
// cylinders over the color-i edges e into r(lambda).
template <class U>
CylinderOutcome preimage_cylinder_check(const U& u, const typename U::Path& lambda, int i,
                                        const typename U::Degree& depth) {
    const auto ei = u.unit(i);
    const auto d = u.depth_of(lambda);
    detail::check_arg(u.leq(u.add(d, ei), depth),
                      "cylinder check needs depth >= d(lambda) + e_i");
    CylinderOutcome out;
    const auto all = u.all_paths(depth);
    std::set<std::string> preimage;
    for (const auto& x : all)
        if (u.initial(u.shift(x, ei), d) == lambda) preimage.insert(u.show(x));
    out.preimage_size = static_cast<std::int64_t>(preimage.size());

    std::set<std::string> covered_by_pieces;
    for (const auto& e : u.edges_with_source(i, u.range_of(lambda))) {
        ++out.pieces;
        const auto e_lambda = u.prepend(e, lambda);
        const auto dd = u.add(d, ei);
        for (const auto& x : all) {
            if (u.initial(x, dd) == e_lambda && !covered_by_pieces.insert(u.show(x)).second) {
                out.disjoint = false;
                out.detail = "cylinders overlap at " + u.show(x);
            }
        }
    }
    if (preimage != covered_by_pieces) {
        out.covered = false;
        if (out.detail.empty()) out.detail = "preimage and cylinder union differ";
    }
    return out;
}

// Every depth (D - e_i) path is shift(x, e_i) of some depth-D path.
template <class U>
bool shift_surjective_at_depth(const U& u, int i, const typename U::Degree& depth) {
    const auto ei = u.unit(i);
    detail::check_arg(u.leq(ei, depth), "depth must dominate e_i");
    std::set<std::string> images;
    for (const auto& x : u.all_paths(depth)) images.insert(u.show(u.shift(x, ei)));
    for (const auto& y : u.all_paths(u.sub(depth, ei)))
        if (!images.count(u.show(y))) return false;
    return true;
}

}  // namespace coalign
