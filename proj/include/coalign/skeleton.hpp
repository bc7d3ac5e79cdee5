#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalign/validation.hpp"

namespace coalign {

struct SkeletonEdge {
    std::string id;
    int color = 1;  // 1..k
    std::string source;
    std::string range;
    friend bool operator==(const SkeletonEdge&, const SkeletonEdge&) = default;
};

// Commuting square fi ej = fj ei for a color pair ci < cj.  The e-side
// edges share the square's source vertex, the f-side edges its range:
//   s(fi) = r(ej),  s(fj) = r(ei),  r(fi) = r(fj),  s(ei) = s(ej).
struct Square {
    int ci = 1;
    int cj = 2;
    std::string ei, ej;  // e-side edges, colors ci / cj
    std::string fi, fj;  // f-side edges, colors ci / cj
    friend auto operator<=>(const Square&, const Square&) = default;
};

// Finite k-graph presented as a k-colored graph with its commuting
// squares.  Construction sorts everything into canonical order and
// accepts structurally broken input; validate() reports the damage.
class KGraphSkeleton {
public:
    KGraphSkeleton(int k, std::vector<std::string> vertices,
                   std::vector<SkeletonEdge> edges, std::vector<Square> squares);

    int k() const { return k_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<SkeletonEdge>& edges() const { return edges_; }
    const std::vector<Square>& squares() const { return squares_; }

    bool has_vertex(const std::string& id) const;
    const SkeletonEdge* find_edge(const std::string& id) const;
    const SkeletonEdge& edge(const std::string& id) const;  // throws if unknown

    std::vector<std::string> edges_with_source(int color, const std::string& vertex) const;
    std::vector<std::string> edges_with_range(int color, const std::string& vertex) const;

    // Squares whose e-side edges for the (normalized) color pair of the
    // two arguments are exactly these two edges.
    std::vector<const Square*> squares_with_e_sides(const std::string& edge_a,
                                                    const std::string& edge_b) const;
    // Squares factoring the composite (f of color f_color) (e of e_color);
    // at most one in a graph satisfying unique bi-colored factorization.
    std::vector<const Square*> squares_factoring(int f_color, const std::string& f_edge,
                                                 int e_color, const std::string& e_edge) const;

private:
    int k_;
    std::vector<std::string> vertices_;
    std::vector<SkeletonEdge> edges_;
    std::vector<Square> squares_;
};

// Checks, in order: structural soundness (colors in range, endpoints and
// square edge ids resolve), square color/endpoint consistency, unique
// bi-colored factorization, no sources, no sinks, and row-finiteness
// bounds.  k >= 3 inputs get a warning that only pairwise factorization
// is verified.
ValidationReport validate(const KGraphSkeleton&);

// Throws std::invalid_argument unless ids resolve and colors are in
// range; the cheap prerequisite for the traversal operations below.
void require_structurally_sound(const KGraphSkeleton&);

// All witness pairs (f_a, f_b) with f_a edge_b = f_b edge_a, where
// edge_a, edge_b have distinct colors and a common source.  The first
// member of each pair has the color of edge_a.  Exactly one pair per
// query iff the graph is 1-coaligned.
std::vector<std::pair<std::string, std::string>> coalign_witness(
    const KGraphSkeleton&, const std::string& edge_a, const std::string& edge_b);

struct SkeletonCoalignResult {
    bool coaligned = true;
    std::int64_t pairs_checked = 0;
    struct Pair {
        std::string ei, ej;
        std::size_t witnesses = 0;
    };
    std::optional<Pair> counterexample;
};
SkeletonCoalignResult is_one_coaligned(const KGraphSkeleton&);

KGraphSkeleton load_skeleton(std::istream&);
KGraphSkeleton load_skeleton_string(const std::string& text);
KGraphSkeleton load_skeleton_file(const std::string& path);
std::string save_skeleton(const KGraphSkeleton&);

}  // namespace coalign
