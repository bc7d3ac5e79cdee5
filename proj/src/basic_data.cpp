#include "coalign/basic_data.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "coalign/errors.hpp"
#include "coalign/skeleton.hpp"

namespace coalign {

namespace detail {

struct TraceConstraint {
    std::vector<std::pair<std::size_t, std::int64_t>> terms;  // (cell index, weight)
    std::size_t last_cell = 0;
};

// Everything about paths of one degree that depends only on the data:
// the lex-sorted cell list, the translated trace congruences, and the
// congruences keyed by their last cell (for pruning during search).
struct DegreeContext {
    std::vector<Vec2> cells;
    std::vector<TraceConstraint> constraints;
    std::vector<std::vector<std::size_t>> by_last_cell;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Tile

Tile::Tile(std::vector<Vec2> points) : points_(std::move(points)) {
    for (const auto& p : points_)
        detail::check_arg(p.x >= 0 && p.y >= 0, "tile points must lie in N^2");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Tile::contains(Vec2 p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

Vec2 Tile::corner() const {
    Vec2 c{0, 0};
    for (const auto& p : points_) c = join(c, p);
    return c;
}

std::optional<Vec2> Tile::heredity_violation() const {
    for (const auto& p : points_)
        for (Vec2 below{0, 0}; below.x <= p.x; ++below.x)
            for (below.y = 0; below.y <= p.y; ++below.y)
                if (!contains(below)) return below;
    return std::nullopt;
}

std::vector<Vec2> Tile::region(Vec2 degree) const {
    detail::check_arg(degree.x >= 0 && degree.y >= 0, "degree must be non-negative");
    std::set<Vec2> cells;
    for (Vec2 m{0, 0}; m.x <= degree.x; ++m.x)
        for (m.y = 0; m.y <= degree.y; ++m.y)
            for (const auto& p : points_) cells.insert(p + m);
    return {cells.begin(), cells.end()};
}

// ---------------------------------------------------------------------------
// BasicData / PathFn

struct BasicData::CacheState {
    std::mutex mutex;
    std::map<Vec2, std::unique_ptr<detail::DegreeContext>> by_degree;
    std::optional<std::string> validity;  // "" when valid, else the failure summary
};

BasicData::BasicData(Tile tile, Modulus q, std::int64_t trace, std::vector<std::int64_t> rule)
    : tile_(std::move(tile)), q_(q), trace_(Residue(trace, q).value()), rule_(std::move(rule)),
      cache_(std::make_shared<CacheState>()) {
    detail::check_arg(tile_.size() > 0, "tile must be nonempty");
    detail::check_arg(rule_.size() == tile_.size(), "rule must have one value per tile point");
    for (auto& v : rule_) v = Residue(v, q_).value();
}

const detail::DegreeContext& BasicData::degree_context(Vec2 degree) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->by_degree.find(degree);
    if (it != cache_->by_degree.end()) return *it->second;

    auto ctx = std::make_unique<detail::DegreeContext>();
    ctx->cells = tile_.region(degree);
    const auto& pts = tile_.points();
    for (Vec2 m{0, 0}; m.x <= degree.x; ++m.x) {
        for (m.y = 0; m.y <= degree.y; ++m.y) {
            detail::TraceConstraint tc;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const auto at = std::lower_bound(ctx->cells.begin(), ctx->cells.end(), pts[i] + m);
                tc.terms.emplace_back(static_cast<std::size_t>(at - ctx->cells.begin()), rule_[i]);
            }
            tc.last_cell = 0;
            for (const auto& [ci, w] : tc.terms) tc.last_cell = std::max(tc.last_cell, ci);
            ctx->constraints.push_back(std::move(tc));
        }
    }
    ctx->by_last_cell.resize(ctx->cells.size());
    for (std::size_t k = 0; k < ctx->constraints.size(); ++k)
        ctx->by_last_cell[ctx->constraints[k].last_cell].push_back(k);
    return *cache_->by_degree.emplace(degree, std::move(ctx)).first->second;
}

BasicData BasicData::from_map(Tile tile, Modulus q, std::int64_t trace,
                              const std::map<Vec2, std::int64_t>& rule) {
    detail::check_arg(rule.size() == tile.size(), "rule domain must be exactly the tile");
    std::vector<std::int64_t> values;
    values.reserve(tile.size());
    for (const auto& p : tile.points()) {
        auto it = rule.find(p);
        detail::check_arg(it != rule.end(), "rule missing tile point " + to_string(p));
        values.push_back(it->second);
    }
    return BasicData(std::move(tile), q, trace, std::move(values));
}

Residue BasicData::rule_at(Vec2 tile_point) const {
    const auto& pts = tile_.points();
    auto it = std::lower_bound(pts.begin(), pts.end(), tile_point);
    detail::check_arg(it != pts.end() && *it == tile_point,
                      "rule queried off the tile at " + to_string(tile_point));
    return {rule_[static_cast<std::size_t>(it - pts.begin())], q_};
}

PathFn::PathFn(Vec2 degree, std::vector<std::int64_t> values)
    : degree_(degree), values_(std::move(values)) {}

namespace {

std::size_t cell_index(const std::vector<Vec2>& cells, Vec2 cell) {
    auto it = std::lower_bound(cells.begin(), cells.end(), cell);
    detail::check_arg(it != cells.end() && *it == cell, "cell " + to_string(cell) + " outside the path domain");
    return static_cast<std::size_t>(it - cells.begin());
}

void check_path_shape(const BasicData& bd, const PathFn& p, const char* role) {
    const auto& cells = bd.degree_context(p.degree()).cells;
    if (p.values().size() != cells.size())
        throw std::invalid_argument(std::string(role) + " has " + std::to_string(p.values().size()) +
                                    " values but its domain has " + std::to_string(cells.size()) +
                                    " cells");
}

}  // namespace

std::int64_t value_at(const BasicData& bd, const PathFn& p, Vec2 cell) {
    const auto& cells = bd.degree_context(p.degree()).cells;
    return p.values()[cell_index(cells, cell)];
}

std::string show(const BasicData& bd, const PathFn& p) {
    const auto& cells = bd.degree_context(p.degree()).cells;
    std::string out = "deg" + to_string(p.degree()) + " ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += " ";
        out += to_string(cells[i]) + "=" + std::to_string(p.values()[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_basic_data(const BasicData& bd) {
    ValidationReport rep;
    const auto missing = bd.tile().heredity_violation();
    rep.checks.push_back({"hereditary", !missing,
                          missing ? "tile is not hereditary: missing point " + to_string(*missing)
                                  : "tile is downward closed"});
    const Vec2 c = bd.tile().corner();
    const bool pos = c.x >= 1 && c.y >= 1;
    rep.checks.push_back({"corner-positive", pos,
                          pos ? "corner " + to_string(c) : "corner " + to_string(c) + " must be >= (1,1)"});
    if (!missing && pos) {
        const bool c1 = is_unit(bd.rule_at({c.x, 0}));
        const bool c2 = is_unit(bd.rule_at({0, c.y}));
        rep.checks.push_back({"corner-invertible", c1 && c2,
                              c1 && c2 ? "w(c1 e1) and w(c2 e2) are units"
                                       : std::string("non-unit rule value at ") +
                                             (c1 ? to_string({0, c.y}) : to_string({c.x, 0}))});
    } else {
        rep.checks.push_back({"corner-invertible", false, "skipped: tile invalid"});
    }
    return rep;
}

void require_valid(const BasicData& bd) {
    const std::string& failure = bd.validity_failure();
    detail::check_arg(failure.empty(), "invalid basic data: " + failure);
}

const std::string& BasicData::validity_failure() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->validity) {
        const auto rep = validate_basic_data(*this);
        cache_->validity = rep.ok() ? std::string() : rep.summary();
    }
    return *cache_->validity;
}

bool has_invertible_zero(const BasicData& bd) {
    require_valid(bd);
    return is_unit(bd.rule_at({0, 0}));
}

bool has_three_invertible_corners(const BasicData& bd) {
    require_valid(bd);
    const Vec2 c = bd.tile().corner();
    return is_unit(bd.rule_at({0, 0})) && is_unit(bd.rule_at({c.x, 0})) && is_unit(bd.rule_at({0, c.y}));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

bool constraint_holds(const detail::TraceConstraint& tc, const std::vector<std::int64_t>& values,
                      std::int64_t q, std::int64_t t) {
    std::int64_t sum = 0;
    for (const auto& [ci, w] : tc.terms) sum += w * values[ci];
    return sum % q == t;
}

// All assignments of the free cells that satisfy every translated trace
// congruence, in lex order.  prescribed[i], when set, pins cells[i].
std::vector<PathFn> enumerate_with_prescription(const BasicData& bd, Vec2 degree,
                                                const std::vector<std::optional<std::int64_t>>& prescribed) {
    const auto& ctx = bd.degree_context(degree);
    const std::int64_t q = bd.q().value();
    const std::int64_t t = bd.trace().value();
    std::vector<std::int64_t> values(ctx.cells.size(), 0);
    std::vector<PathFn> out;

    std::function<void(std::size_t)> walk = [&](std::size_t k) {
        if (k == ctx.cells.size()) {
            out.emplace_back(degree, values);
            return;
        }
        const std::int64_t lo = prescribed[k] ? *prescribed[k] : 0;
        const std::int64_t hi = prescribed[k] ? *prescribed[k] : q - 1;
        for (std::int64_t v = lo; v <= hi; ++v) {
            values[k] = v;
            bool ok = true;
            for (const std::size_t ci : ctx.by_last_cell[k])
                if (!constraint_holds(ctx.constraints[ci], values, q, t)) {
                    ok = false;
                    break;
                }
            if (ok) walk(k + 1);
        }
    };
    walk(0);
    return out;
}

std::vector<std::optional<std::int64_t>> prescription_from(const BasicData& bd, Vec2 degree,
                                                           Vec2 offset, const PathFn& vertex) {
    check_path_shape(bd, vertex, "vertex");
    detail::check_arg(vertex.degree() == Vec2{0, 0}, "prescription path must be a vertex");
    const auto& cells = bd.degree_context(degree).cells;
    std::vector<std::optional<std::int64_t>> prescribed(cells.size());
    const auto& pts = bd.tile().points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        prescribed[cell_index(cells, pts[i] + offset)] = vertex.values()[i];
    return prescribed;
}

}  // namespace

std::vector<PathFn> enumerate_paths(const BasicData& bd, Vec2 degree) {
    require_valid(bd);
    const auto& cells = bd.degree_context(degree).cells;
    return enumerate_with_prescription(bd, degree, std::vector<std::optional<std::int64_t>>(cells.size()));
}

std::vector<PathFn> enumerate_vertices(const BasicData& bd) { return enumerate_paths(bd, {0, 0}); }

std::vector<PathFn> enumerate_edges(const BasicData& bd, int direction) {
    detail::check_arg(direction == 1 || direction == 2, "direction must be 1 or 2");
    return enumerate_paths(bd, unit2(direction));
}

std::vector<PathFn> enumerate_paths_with_source(const BasicData& bd, Vec2 degree, const PathFn& vertex) {
    require_valid(bd);
    return enumerate_with_prescription(bd, degree, prescription_from(bd, degree, degree, vertex));
}

std::vector<PathFn> enumerate_paths_with_range(const BasicData& bd, Vec2 degree, const PathFn& vertex) {
    require_valid(bd);
    return enumerate_with_prescription(bd, degree, prescription_from(bd, degree, {0, 0}, vertex));
}

// ---------------------------------------------------------------------------
// Segments

PathFn segment(const BasicData& bd, const PathFn& p, Vec2 m, Vec2 n) {
    check_path_shape(bd, p, "path");
    detail::check_arg(componentwise_leq({0, 0}, m) && componentwise_leq(m, n) &&
                          componentwise_leq(n, p.degree()),
                      "segment bounds must satisfy 0 <= m <= n <= degree");
    const auto& cells = bd.degree_context(p.degree()).cells;
    const auto& sub = bd.degree_context(n - m).cells;
    std::vector<std::int64_t> values;
    values.reserve(sub.size());
    for (const auto& i : sub) values.push_back(p.values()[cell_index(cells, i + m)]);
    return {n - m, std::move(values)};
}

PathFn range_of(const BasicData& bd, const PathFn& p) { return segment(bd, p, {0, 0}, {0, 0}); }

PathFn source_of(const BasicData& bd, const PathFn& p) {
    return segment(bd, p, p.degree(), p.degree());
}

// ---------------------------------------------------------------------------
// Square completion

std::vector<PathFn> complete_square(const BasicData& bd, const PathFn& e_blue, const PathFn& e_red) {
    require_valid(bd);
    check_path_shape(bd, e_blue, "blue edge");
    check_path_shape(bd, e_red, "red edge");
    detail::check_arg(e_blue.degree() == Vec2{1, 0}, "blue edge must have degree (1,0)");
    detail::check_arg(e_red.degree() == Vec2{0, 1}, "red edge must have degree (0,1)");
    detail::check_arg(source_of(bd, e_blue) == source_of(bd, e_red),
                      "square completion needs edges with a common source");

    const Vec2 e1{1, 0}, e2{0, 1};
    const auto& ctx = bd.degree_context({1, 1});
    const auto& cells = ctx.cells;
    const auto& blue_cells = bd.degree_context(e1).cells;
    const auto& red_cells = bd.degree_context(e2).cells;

    // Boundary: cells with x > 0 copy from the red edge, cells with
    // y > 0 from the blue edge; the overlap must agree.
    std::vector<std::int64_t> values(cells.size(), -1);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Vec2 i = cells[k];
        if (i == Vec2{0, 0}) continue;
        std::optional<std::int64_t> from_red, from_blue;
        if (i.x > 0) from_red = e_red.values()[cell_index(red_cells, i - e1)];
        if (i.y > 0) from_blue = e_blue.values()[cell_index(blue_cells, i - e2)];
        detail::require(!(from_red && from_blue) || *from_red == *from_blue,
                        "square boundary is not well-defined; edges do not share a source");
        values[k] = from_red ? *from_red : *from_blue;
    }

    // Origin congruence: w(0) t0 = t - sum_{i in T, i != 0} w(i) lambda(i).
    const auto& pts = bd.tile().points();
    Residue rhs = bd.trace();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == Vec2{0, 0}) continue;
        rhs = rhs - Residue(bd.rule_values()[i], bd.q()) *
                        Residue(values[cell_index(cells, pts[i])], bd.q());
    }
    const auto sols = solve_linear(bd.rule_at({0, 0}), rhs);

    std::vector<PathFn> out;
    out.reserve(sols.size());
    const std::size_t origin = cell_index(cells, {0, 0});
    for (const Residue& t0 : sols) {
        values[origin] = t0.value();
        PathFn lambda({1, 1}, values);
        // Re-check the path conditions and restrictions on every return.
        for (const auto& tc : ctx.constraints)
            detail::require(constraint_holds(tc, lambda.values(), bd.q().value(), bd.trace().value()),
                            "square completion violates a trace congruence");
        detail::require(segment(bd, lambda, e1, {1, 1}) == e_red,
                        "square completion does not restrict to the red edge");
        detail::require(segment(bd, lambda, e2, {1, 1}) == e_blue,
                        "square completion does not restrict to the blue edge");
        out.push_back(std::move(lambda));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Composition

PathFn compose(const BasicData& bd, const PathFn& mu, const PathFn& nu) {
    require_valid(bd);
    check_path_shape(bd, mu, "first factor");
    check_path_shape(bd, nu, "second factor");
    detail::check_arg(source_of(bd, mu) == range_of(bd, nu),
                      "compose needs s(first) == r(second)");

    const Vec2 m = mu.degree(), n = nu.degree(), d = m + n;
    const auto& ctx = bd.degree_context(d);
    const auto& cells = ctx.cells;
    const std::int64_t q = bd.q().value();
    const std::int64_t t = bd.trace().value();

    std::vector<std::optional<std::int64_t>> known(cells.size());
    auto prescribe = [&](Vec2 cell, std::int64_t v) {
        auto& slot = known[cell_index(cells, cell)];
        if (slot)
            detail::check_arg(*slot == v, "factors disagree on their overlap at " + to_string(cell));
        slot = v;
    };
    const auto& mu_cells = bd.degree_context(m).cells;
    for (std::size_t i = 0; i < mu_cells.size(); ++i) prescribe(mu_cells[i], mu.values()[i]);
    const auto& nu_cells = bd.degree_context(n).cells;
    for (std::size_t i = 0; i < nu_cells.size(); ++i) prescribe(nu_cells[i] + m, nu.values()[i]);

    // Fill the rest by propagation: any congruence with a single unknown
    // cell and a uniquely solvable coefficient pins that cell.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& tc : ctx.constraints) {
            std::size_t unknown = cells.size();
            std::size_t n_unknown = 0;
            std::int64_t coeff = 0;
            std::int64_t rhs = t;
            for (const auto& [ci, w] : tc.terms) {
                if (known[ci]) {
                    rhs -= w * *known[ci];
                } else {
                    ++n_unknown;
                    unknown = ci;
                    coeff = w;
                }
            }
            if (n_unknown != 1) continue;
            const auto sols = solve_linear(Residue(coeff, bd.q()), Residue(rhs, bd.q()));
            detail::check_arg(!sols.empty(), "compose inputs leave a trace congruence unsatisfiable");
            if (sols.size() == 1) {
                known[unknown] = sols.front().value();
                progress = true;
            }
        }
    }

    std::vector<Vec2> stuck;
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (!known[k]) stuck.push_back(cells[k]);
    if (!stuck.empty()) {
        std::string msg = "compose propagation stalled; undetermined cells:";
        for (const auto& c : stuck) msg += " " + to_string(c);
        throw ComposeStallError(msg, std::move(stuck));
    }

    std::vector<std::int64_t> values(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) values[k] = *known[k];
    for (const auto& tc : ctx.constraints)
        detail::check_arg(constraint_holds(tc, values, q, t),
                          "compose inputs are not paths: a trace congruence fails");
    return {d, std::move(values)};
}

// ---------------------------------------------------------------------------
// Coalignment by brute force

BruteCoalignResult is_one_coaligned_bruteforce(const BasicData& bd) {
    require_valid(bd);
    BruteCoalignResult res;
    const auto blues = enumerate_edges(bd, 1);
    const auto reds = enumerate_edges(bd, 2);
    std::map<PathFn, std::vector<const PathFn*>> reds_by_source;
    for (const auto& r : reds) reds_by_source[source_of(bd, r)].push_back(&r);
    for (const auto& b : blues) {
        auto it = reds_by_source.find(source_of(bd, b));
        if (it == reds_by_source.end()) continue;
        for (const PathFn* r : it->second) {
            ++res.pairs_checked;
            const auto comps = complete_square(bd, b, *r);
            if (comps.size() != 1) {
                res.coaligned = false;
                res.counterexample = CoalignCounterexample{b, *r, comps.size()};
                return res;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Skeleton export

namespace {

std::string value_id(char prefix, const PathFn& p) {
    std::string id(1, prefix);
    for (std::size_t i = 0; i < p.values().size(); ++i) {
        id += i ? "." : ":";
        id += std::to_string(p.values()[i]);
    }
    return id;
}

}  // namespace

KGraphSkeleton export_skeleton(const BasicData& bd) {
    require_valid(bd);
    const Vec2 e1{1, 0}, e2{0, 1};

    std::vector<std::string> vertices;
    for (const auto& v : enumerate_vertices(bd)) vertices.push_back(value_id('v', v));

    const auto blues = enumerate_edges(bd, 1);
    const auto reds = enumerate_edges(bd, 2);
    std::vector<SkeletonEdge> edges;
    for (const auto& b : blues)
        edges.push_back({value_id('b', b), 1, value_id('v', source_of(bd, b)),
                         value_id('v', range_of(bd, b))});
    for (const auto& r : reds)
        edges.push_back({value_id('r', r), 2, value_id('v', source_of(bd, r)),
                         value_id('v', range_of(bd, r))});

    std::map<PathFn, std::vector<const PathFn*>> reds_by_source;
    for (const auto& r : reds) reds_by_source[source_of(bd, r)].push_back(&r);
    std::vector<Square> squares;
    for (const auto& b : blues) {
        auto it = reds_by_source.find(source_of(bd, b));
        if (it == reds_by_source.end()) continue;
        for (const PathFn* r : it->second) {
            for (const auto& lambda : complete_square(bd, b, *r)) {
                const PathFn f_blue = segment(bd, lambda, {0, 0}, e1);
                const PathFn f_red = segment(bd, lambda, {0, 0}, e2);
                squares.push_back({1, 2, value_id('b', b), value_id('r', *r),
                                   value_id('b', f_blue), value_id('r', f_red)});
            }
        }
    }
    return {2, std::move(vertices), std::move(edges), std::move(squares)};
}

// ---------------------------------------------------------------------------
// Text format.
//
//   basicdata
//   q <modulus>
//   t <trace>
//   tile <x,y> <x,y> ...
//   w <x,y> <value>
//
// '#' starts a comment.  save() emits the canonical lex-sorted form.

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

std::int64_t parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) parse_fail(lineno, "bad integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(lineno, "bad integer '" + tok + "'");
    }
}

Vec2 parse_point(const std::string& tok, int lineno) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) parse_fail(lineno, "expected 'x,y' but got '" + tok + "'");
    return {parse_int(tok.substr(0, comma), lineno), parse_int(tok.substr(comma + 1), lineno)};
}

}  // namespace

BasicData load_basic_data(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = false;
    std::optional<std::int64_t> q, t;
    std::vector<Vec2> tile_points;
    std::vector<std::pair<Vec2, std::int64_t>> weights;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks[0] != "basicdata") parse_fail(lineno, "expected 'basicdata' header");
            header = true;
            continue;
        }
        if (toks[0] == "q") {
            if (toks.size() != 2) parse_fail(lineno, "expected 'q <modulus>'");
            q = parse_int(toks[1], lineno);
            if (*q < 2) parse_fail(lineno, "modulus must be at least 2");
        } else if (toks[0] == "t") {
            if (toks.size() != 2) parse_fail(lineno, "expected 't <trace>'");
            t = parse_int(toks[1], lineno);
        } else if (toks[0] == "tile") {
            if (toks.size() < 2) parse_fail(lineno, "expected 'tile <x,y> ...'");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const Vec2 p = parse_point(toks[i], lineno);
                if (p.x < 0 || p.y < 0) parse_fail(lineno, "tile point " + to_string(p) + " outside N^2");
                tile_points.push_back(p);
            }
        } else if (toks[0] == "w") {
            if (toks.size() != 3) parse_fail(lineno, "expected 'w <x,y> <value>'");
            weights.emplace_back(parse_point(toks[1], lineno), parse_int(toks[2], lineno));
        } else {
            parse_fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!header) throw ParseError("missing 'basicdata' header");
    if (!q) throw ParseError("missing 'q' line");
    if (!t) throw ParseError("missing 't' line");
    if (tile_points.empty()) throw ParseError("missing 'tile' line");

    Tile tile{tile_points};
    if (const auto missing = tile.heredity_violation())
        throw ParseError("tile is not hereditary: missing point " + to_string(*missing));

    std::map<Vec2, std::int64_t> rule;
    for (const auto& [p, v] : weights) {
        if (!tile.contains(p)) throw ParseError("rule value at " + to_string(p) + " which is not a tile point");
        if (!rule.emplace(p, v).second) throw ParseError("duplicate rule value at " + to_string(p));
    }
    for (const auto& p : tile.points())
        if (!rule.count(p)) throw ParseError("rule missing a value at tile point " + to_string(p));
    return BasicData::from_map(std::move(tile), Modulus{*q}, *t, rule);
}

BasicData load_basic_data_string(const std::string& text) {
    std::istringstream in(text);
    return load_basic_data(in);
}

BasicData load_basic_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_basic_data(in);
}

std::string save_basic_data(const BasicData& bd) {
    std::ostringstream out;
    out << "basicdata\n";
    out << "q " << bd.q().value() << "\n";
    out << "t " << bd.trace().value() << "\n";
    out << "tile";
    for (const auto& p : bd.tile().points()) out << " " << p.x << "," << p.y;
    out << "\n";
    for (std::size_t i = 0; i < bd.tile().size(); ++i) {
        const Vec2 p = bd.tile().points()[i];
        out << "w " << p.x << "," << p.y << " " << bd.rule_values()[i] << "\n";
    }
    return out.str();
}

}  // namespace coalign
