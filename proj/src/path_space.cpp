#include "coalign/path_space.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace coalign {

// ---------------------------------------------------------------------------
// Degree vectors

DegreeVec dv_zero(int k) { return DegreeVec(static_cast<std::size_t>(k), 0); }

DegreeVec dv_unit(int k, int axis) {
    detail::check_arg(1 <= axis && axis <= k, "axis out of range");
    DegreeVec d = dv_zero(k);
    d[static_cast<std::size_t>(axis - 1)] = 1;
    return d;
}

DegreeVec dv_add(const DegreeVec& a, const DegreeVec& b) {
    detail::check_arg(a.size() == b.size(), "degree rank mismatch");
    DegreeVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

DegreeVec dv_sub(const DegreeVec& a, const DegreeVec& b) {
    detail::check_arg(a.size() == b.size(), "degree rank mismatch");
    DegreeVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool dv_leq(const DegreeVec& a, const DegreeVec& b) {
    detail::check_arg(a.size() == b.size(), "degree rank mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string dv_show(const DegreeVec& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Grid layout

std::size_t GridLayout::size() const {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

std::size_t GridLayout::index(const DegreeVec& p) const {
    detail::require(p.size() == dims.size(), "layout rank mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        detail::require(0 <= p[i] && p[i] < dims[i], "lattice point outside layout");
        idx = idx * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(p[i]);
    }
    return idx;
}

DegreeVec GridLayout::point(std::size_t idx) const {
    DegreeVec p(dims.size(), 0);
    for (std::size_t i = dims.size(); i-- > 0;) {
        p[i] = static_cast<int>(idx % static_cast<std::size_t>(dims[i]));
        idx /= static_cast<std::size_t>(dims[i]);
    }
    return p;
}

// ---------------------------------------------------------------------------
// GridPath

namespace {

GridLayout vertex_layout_for(const DegreeVec& depth) {
    GridLayout lay;
    for (int d : depth) lay.dims.push_back(d + 1);
    return lay;
}

GridLayout edge_layout_for(const DegreeVec& depth, int axis) {
    GridLayout lay;
    for (std::size_t i = 0; i < depth.size(); ++i)
        lay.dims.push_back(i == static_cast<std::size_t>(axis - 1) ? depth[i] : depth[i] + 1);
    return lay;
}

}  // namespace

GridPath::GridPath(DegreeVec depth, std::vector<std::string> vertices,
                   std::vector<std::vector<std::string>> edges_per_axis)
    : depth_(std::move(depth)), vertices_(std::move(vertices)), edges_(std::move(edges_per_axis)) {
    for (int d : depth_) detail::check_arg(d >= 0, "grid depth must be non-negative");
    detail::check_arg(vertices_.size() == vertex_layout_for(depth_).size(),
                      "grid vertex array has the wrong size");
    detail::check_arg(edges_.size() == depth_.size(), "grid needs one edge array per axis");
    for (std::size_t c = 0; c < edges_.size(); ++c)
        detail::check_arg(edges_[c].size() == edge_layout_for(depth_, static_cast<int>(c + 1)).size(),
                          "grid edge array has the wrong size");
}

const std::string& GridPath::vertex_at(const DegreeVec& p) const {
    return vertices_[vertex_layout_for(depth_).index(p)];
}

const std::string& GridPath::edge_at(const DegreeVec& p, int axis) const {
    return edges_[static_cast<std::size_t>(axis - 1)][edge_layout_for(depth_, axis).index(p)];
}

GridLayout GridPath::vertex_layout() const { return vertex_layout_for(depth_); }
GridLayout GridPath::edge_layout(int axis) const { return edge_layout_for(depth_, axis); }

std::string GridPath::show() const {
    std::string out = "d=" + dv_show(depth_) + " v:[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ",";
        out += vertices_[i];
    }
    out += "]";
    for (std::size_t c = 0; c < edges_.size(); ++c) {
        out += " e" + std::to_string(c + 1) + ":[";
        for (std::size_t i = 0; i < edges_[c].size(); ++i) {
            if (i) out += ",";
            out += edges_[c][i];
        }
        out += "]";
    }
    return out;
}

void check_grid(const KGraphSkeleton& g, const GridPath& x) {
    const int k = x.rank();
    detail::require(k == g.k(), "grid rank must match the skeleton rank");
    const GridLayout vlay = x.vertex_layout();
    for (std::size_t idx = 0; idx < vlay.size(); ++idx)
        detail::require(g.has_vertex(x.vertex_at(vlay.point(idx))), "grid vertex not in skeleton");
    for (int c = 1; c <= k; ++c) {
        const GridLayout elay = x.edge_layout(c);
        for (std::size_t idx = 0; idx < elay.size(); ++idx) {
            const DegreeVec p = elay.point(idx);
            const SkeletonEdge* e = g.find_edge(x.edge_at(p, c));
            detail::require(e != nullptr, "grid edge not in skeleton");
            detail::require(e->color == c, "grid edge color does not match its axis");
            DegreeVec pn = p;
            ++pn[static_cast<std::size_t>(c - 1)];
            detail::require(e->range == x.vertex_at(p) && e->source == x.vertex_at(pn),
                            "grid edge endpoints do not match grid vertices");
        }
    }
    // Every unit cell must be a recorded commuting square.
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            for (std::size_t idx = 0; idx < vlay.size(); ++idx) {
                const DegreeVec b = vlay.point(idx);
                DegreeVec bi = b, bj = b, bij = b;
                ++bi[static_cast<std::size_t>(i - 1)];
                ++bj[static_cast<std::size_t>(j - 1)];
                ++bij[static_cast<std::size_t>(i - 1)];
                ++bij[static_cast<std::size_t>(j - 1)];
                if (!dv_leq(bij, x.depth())) continue;
                const Square cell{i, j, x.edge_at(bj, i), x.edge_at(bi, j), x.edge_at(b, i),
                                  x.edge_at(b, j)};
                detail::require(
                    std::binary_search(g.squares().begin(), g.squares().end(), cell),
                    "grid cell is not a recorded commuting square");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// BasicDataUniverse

PathFn BasicDataUniverse::shift(const Path& x, Degree p) const {
    detail::check_arg(componentwise_leq(p, x.degree()), "shift amount exceeds path depth");
    return segment(*bd, x, p, x.degree());
}

std::vector<std::pair<PathFn, PathFn>> BasicDataUniverse::coalign_witnesses(const Path& edge_i,
                                                                            const Path& edge_j,
                                                                            int i, int j) const {
    detail::check_arg((i == 1 && j == 2) || (i == 2 && j == 1), "colors must be {1,2}");
    const Path& blue = i == 1 ? edge_i : edge_j;
    const Path& red = i == 1 ? edge_j : edge_i;
    std::vector<std::pair<Path, Path>> out;
    for (const auto& lambda : complete_square(*bd, blue, red)) {
        PathFn f_blue = segment(*bd, lambda, {0, 0}, {1, 0});
        PathFn f_red = segment(*bd, lambda, {0, 0}, {0, 1});
        if (i == 1)
            out.emplace_back(std::move(f_blue), std::move(f_red));
        else
            out.emplace_back(std::move(f_red), std::move(f_blue));
    }
    return out;
}

// ---------------------------------------------------------------------------
// SkeletonUniverse

GridPath SkeletonUniverse::shift(const Path& x, const Degree& p) const {
    detail::check_arg(dv_leq(dv_zero(rank()), p) && dv_leq(p, x.depth()),
                      "shift amount exceeds path depth");
    const DegreeVec nd = dv_sub(x.depth(), p);
    const GridLayout vlay = vertex_layout_for(nd);
    std::vector<std::string> verts(vlay.size());
    for (std::size_t idx = 0; idx < vlay.size(); ++idx)
        verts[idx] = x.vertex_at(dv_add(vlay.point(idx), p));
    std::vector<std::vector<std::string>> edges(static_cast<std::size_t>(rank()));
    for (int c = 1; c <= rank(); ++c) {
        const GridLayout elay = edge_layout_for(nd, c);
        auto& arr = edges[static_cast<std::size_t>(c - 1)];
        arr.resize(elay.size());
        for (std::size_t idx = 0; idx < elay.size(); ++idx)
            arr[idx] = x.edge_at(dv_add(elay.point(idx), p), c);
    }
    return {nd, std::move(verts), std::move(edges)};
}

GridPath SkeletonUniverse::initial(const Path& x, const Degree& p) const {
    detail::check_arg(dv_leq(dv_zero(rank()), p) && dv_leq(p, x.depth()),
                      "initial segment degree exceeds path depth");
    const GridLayout vlay = vertex_layout_for(p);
    std::vector<std::string> verts(vlay.size());
    for (std::size_t idx = 0; idx < vlay.size(); ++idx)
        verts[idx] = x.vertex_at(vlay.point(idx));
    std::vector<std::vector<std::string>> edges(static_cast<std::size_t>(rank()));
    for (int c = 1; c <= rank(); ++c) {
        const GridLayout elay = edge_layout_for(p, c);
        auto& arr = edges[static_cast<std::size_t>(c - 1)];
        arr.resize(elay.size());
        for (std::size_t idx = 0; idx < elay.size(); ++idx)
            arr[idx] = x.edge_at(elay.point(idx), c);
    }
    return {p, std::move(verts), std::move(edges)};
}

GridPath SkeletonUniverse::edge_path(const std::string& edge_id) const {
    const SkeletonEdge& e = graph->edge(edge_id);
    const DegreeVec d = dv_unit(rank(), e.color);
    const GridLayout vlay = vertex_layout_for(d);
    std::vector<std::string> verts(vlay.size());
    verts[vlay.index(dv_zero(rank()))] = e.range;
    verts[vlay.index(d)] = e.source;
    std::vector<std::vector<std::string>> edges(static_cast<std::size_t>(rank()));
    for (int c = 1; c <= rank(); ++c)
        edges[static_cast<std::size_t>(c - 1)].resize(edge_layout_for(d, c).size());
    edges[static_cast<std::size_t>(e.color - 1)][0] = edge_id;
    return {d, std::move(verts), std::move(edges)};
}

GridPath SkeletonUniverse::prepend_edge(const std::string& edge_id, int axis, const Path& x) const {
    const SkeletonEdge& g = graph->edge(edge_id);
    detail::check_arg(g.color == axis, "prepended edge color must match the axis");
    detail::check_arg(g.source == x.vertex_at(dv_zero(rank())), "prepend needs s(edge) == r(path)");

    const DegreeVec yd = dv_add(x.depth(), dv_unit(rank(), axis));
    const std::size_t ax = static_cast<std::size_t>(axis - 1);
    const GridLayout vlay = vertex_layout_for(yd);
    std::vector<std::string> verts(vlay.size());
    std::vector<std::vector<std::string>> edges(static_cast<std::size_t>(rank()));
    std::vector<GridLayout> elays;
    for (int c = 1; c <= rank(); ++c) {
        elays.push_back(edge_layout_for(yd, c));
        edges[static_cast<std::size_t>(c - 1)].resize(elays.back().size());
    }

    // Interior (points with a positive axis coordinate) is x, translated.
    for (std::size_t idx = 0; idx < vlay.size(); ++idx) {
        DegreeVec p = vlay.point(idx);
        if (p[ax] >= 1) {
            --p[ax];
            verts[idx] = x.vertex_at(p);
        }
    }
    for (int c = 1; c <= rank(); ++c) {
        const GridLayout& elay = elays[static_cast<std::size_t>(c - 1)];
        for (std::size_t idx = 0; idx < elay.size(); ++idx) {
            DegreeVec p = elay.point(idx);
            if (p[ax] >= 1) {
                --p[ax];
                edges[static_cast<std::size_t>(c - 1)][idx] = x.edge_at(p, c);
            }
        }
    }

    // Slab (axis coordinate zero): march in lex order, factoring each
    // known (axis-edge, interior-edge) composite through its unique
    // square to recover the slab edge and the next axis-edge.
    auto set_or_verify = [&](std::vector<std::string>& arr, std::size_t idx, const std::string& id) {
        if (arr[idx].empty())
            arr[idx] = id;
        else
            detail::require(arr[idx] == id, "prepend derived conflicting edges; squares are inconsistent");
    };
    edges[ax][elays[ax].index(dv_zero(rank()))] = edge_id;

    // Slab points are the points of [0, yd] with axis coordinate zero.
    GridLayout slab_lay;
    for (std::size_t i = 0; i < yd.size(); ++i)
        slab_lay.dims.push_back(i == ax ? 1 : yd[i] + 1);
    for (std::size_t sidx = 0; sidx < slab_lay.size(); ++sidx) {
        const DegreeVec p = slab_lay.point(sidx);
        const std::string fc = edges[ax][elays[ax].index(p)];
        detail::require(!fc.empty(), "prepend marching order failed to seed an axis edge");
        for (int a = 1; a <= rank(); ++a) {
            if (a == axis) continue;
            DegreeVec pa = p;
            ++pa[static_cast<std::size_t>(a - 1)];
            if (!dv_leq(pa, yd)) continue;
            // e-side edge lives in x at the same point.
            const std::string e_side = x.edge_at(p, a);
            const auto squares = graph->squares_factoring(axis, fc, a, e_side);
            detail::require(squares.size() == 1,
                            "prepend needs exactly one square factoring each composite");
            const Square* sq = squares.front();
            const std::string slab_edge = axis < a ? sq->fj : sq->fi;
            const std::string next_axis_edge = axis < a ? sq->ei : sq->ej;
            set_or_verify(edges[static_cast<std::size_t>(a - 1)],
                          elays[static_cast<std::size_t>(a - 1)].index(p), slab_edge);
            set_or_verify(edges[ax], elays[ax].index(pa), next_axis_edge);
        }
    }
    for (std::size_t sidx = 0; sidx < slab_lay.size(); ++sidx) {
        const DegreeVec p = slab_lay.point(sidx);
        verts[vlay.index(p)] = graph->edge(edges[ax][elays[ax].index(p)]).range;
    }

    GridPath y{yd, std::move(verts), std::move(edges)};
    check_grid(*graph, y);
    return y;
}

GridPath SkeletonUniverse::prepend(const Path& lambda, const Path& x) const {
    detail::check_arg(lambda.vertex_at(lambda.depth()) == x.vertex_at(dv_zero(rank())),
                      "prepend needs s(lambda) == r(path)");
    GridPath acc = x;
    GridPath rest = lambda;
    while (rest.depth() != dv_zero(rank())) {
        int axis = 0;
        for (int c = 1; c <= rank(); ++c)
            if (rest.depth()[static_cast<std::size_t>(c - 1)] > 0) {
                axis = c;
                break;
            }
        DegreeVec base = dv_sub(rest.depth(), dv_unit(rank(), axis));
        const std::string edge_id = rest.edge_at(base, axis);
        acc = prepend_edge(edge_id, axis, acc);
        rest = initial(rest, base);
    }
    return acc;
}

std::vector<GridPath> SkeletonUniverse::all_paths(const Degree& depth) const {
    require_structurally_sound(*graph);
    detail::check_arg(static_cast<int>(depth.size()) == rank(), "depth rank mismatch");
    for (int d : depth) detail::check_arg(d >= 0, "depth must be non-negative");

    const GridLayout vlay = vertex_layout_for(depth);
    std::vector<GridLayout> elays;
    for (int c = 1; c <= rank(); ++c) elays.push_back(edge_layout_for(depth, c));

    struct Slot {
        DegreeVec point;
        std::size_t point_idx;
        int axis;
    };
    std::vector<Slot> slots;
    for (std::size_t idx = 0; idx < vlay.size(); ++idx) {
        const DegreeVec p = vlay.point(idx);
        for (int c = 1; c <= rank(); ++c)
            if (p[static_cast<std::size_t>(c - 1)] < depth[static_cast<std::size_t>(c - 1)])
                slots.push_back({p, idx, c});
    }

    std::map<std::pair<int, std::string>, std::vector<const SkeletonEdge*>> by_color_range;
    for (const auto& e : graph->edges()) by_color_range[{e.color, e.range}].push_back(&e);

    std::vector<std::string> verts(vlay.size());
    std::vector<std::vector<std::string>> edges(static_cast<std::size_t>(rank()));
    for (int c = 1; c <= rank(); ++c)
        edges[static_cast<std::size_t>(c - 1)].resize(elays[static_cast<std::size_t>(c - 1)].size());

    std::vector<GridPath> out;
    std::function<void(std::size_t)> walk = [&](std::size_t s) {
        if (s == slots.size()) {
            out.emplace_back(depth, verts, edges);
            return;
        }
        const Slot& sl = slots[s];
        const auto it = by_color_range.find({sl.axis, verts[sl.point_idx]});
        if (it == by_color_range.end()) return;
        DegreeVec pn = sl.point;
        ++pn[static_cast<std::size_t>(sl.axis - 1)];
        const std::size_t next_idx = vlay.index(pn);
        const std::size_t eidx = elays[static_cast<std::size_t>(sl.axis - 1)].index(sl.point);
        for (const SkeletonEdge* e : it->second) {
            const bool fresh_vertex = verts[next_idx].empty();
            if (!fresh_vertex && verts[next_idx] != e->source) continue;

            // Cells completed by this slot: bases p - e_i for colors i < axis.
            bool cells_ok = true;
            for (int i = 1; i < sl.axis && cells_ok; ++i) {
                if (sl.point[static_cast<std::size_t>(i - 1)] == 0) continue;
                DegreeVec b = sl.point;
                --b[static_cast<std::size_t>(i - 1)];
                DegreeVec bj = b;
                ++bj[static_cast<std::size_t>(sl.axis - 1)];
                const Square cell{
                    i,
                    sl.axis,
                    edges[static_cast<std::size_t>(i - 1)][elays[static_cast<std::size_t>(i - 1)].index(bj)],
                    e->id,
                    edges[static_cast<std::size_t>(i - 1)][elays[static_cast<std::size_t>(i - 1)].index(b)],
                    edges[static_cast<std::size_t>(sl.axis - 1)][elays[static_cast<std::size_t>(sl.axis - 1)].index(b)]};
                cells_ok = std::binary_search(graph->squares().begin(), graph->squares().end(), cell);
            }
            if (!cells_ok) continue;

            edges[static_cast<std::size_t>(sl.axis - 1)][eidx] = e->id;
            if (fresh_vertex) verts[next_idx] = e->source;
            walk(s + 1);
            edges[static_cast<std::size_t>(sl.axis - 1)][eidx].clear();
            if (fresh_vertex) verts[next_idx].clear();
        }
    };

    for (const auto& v : graph->vertices()) {
        verts[vlay.index(dv_zero(rank()))] = v;
        walk(0);
        verts[vlay.index(dv_zero(rank()))].clear();
    }
    return out;
}

std::vector<GridPath> SkeletonUniverse::edges_with_source(int color, const Vertex& v) const {
    std::vector<GridPath> out;
    for (const auto& id : graph->edges_with_source(color, v)) out.push_back(edge_path(id));
    return out;
}

std::vector<std::pair<GridPath, GridPath>> SkeletonUniverse::coalign_witnesses(const Path& edge_i,
                                                                               const Path& edge_j,
                                                                               int i, int j) const {
    const std::string id_i = edge_i.edge_at(dv_zero(rank()), i);
    const std::string id_j = edge_j.edge_at(dv_zero(rank()), j);
    std::vector<std::pair<GridPath, GridPath>> out;
    for (const auto& [fi, fj] : coalign_witness(*graph, id_i, id_j))
        out.emplace_back(edge_path(fi), edge_path(fj));
    return out;
}

}  // namespace coalign
