#include "coalign/skeleton.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "coalign/errors.hpp"

namespace coalign {

KGraphSkeleton::KGraphSkeleton(int k, std::vector<std::string> vertices,
                               std::vector<SkeletonEdge> edges, std::vector<Square> squares)
    : k_(k), vertices_(std::move(vertices)), edges_(std::move(edges)), squares_(std::move(squares)) {
    detail::check_arg(k_ >= 1, "skeleton rank k must be at least 1");
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const SkeletonEdge& a, const SkeletonEdge& b) { return a.id < b.id; });
    std::sort(squares_.begin(), squares_.end());
}

bool KGraphSkeleton::has_vertex(const std::string& id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

const SkeletonEdge* KGraphSkeleton::find_edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const SkeletonEdge& e, const std::string& s) { return e.id < s; });
    if (it == edges_.end() || it->id != id) return nullptr;
    return &*it;
}

const SkeletonEdge& KGraphSkeleton::edge(const std::string& id) const {
    const SkeletonEdge* e = find_edge(id);
    detail::check_arg(e != nullptr, "unknown edge id: " + id);
    return *e;
}

std::vector<std::string> KGraphSkeleton::edges_with_source(int color, const std::string& vertex) const {
    std::vector<std::string> out;
    for (const auto& e : edges_)
        if (e.color == color && e.source == vertex) out.push_back(e.id);
    return out;
}

std::vector<std::string> KGraphSkeleton::edges_with_range(int color, const std::string& vertex) const {
    std::vector<std::string> out;
    for (const auto& e : edges_)
        if (e.color == color && e.range == vertex) out.push_back(e.id);
    return out;
}

std::vector<const Square*> KGraphSkeleton::squares_with_e_sides(const std::string& edge_a,
                                                                const std::string& edge_b) const {
    const SkeletonEdge& a = edge(edge_a);
    const SkeletonEdge& b = edge(edge_b);
    detail::check_arg(a.color != b.color, "e-side edges must have distinct colors");
    const std::string& lo = a.color < b.color ? edge_a : edge_b;
    const std::string& hi = a.color < b.color ? edge_b : edge_a;
    const int ci = std::min(a.color, b.color), cj = std::max(a.color, b.color);
    std::vector<const Square*> out;
    for (const auto& sq : squares_)
        if (sq.ci == ci && sq.cj == cj && sq.ei == lo && sq.ej == hi) out.push_back(&sq);
    return out;
}

std::vector<const Square*> KGraphSkeleton::squares_factoring(int f_color, const std::string& f_edge,
                                                             int e_color, const std::string& e_edge) const {
    detail::check_arg(f_color != e_color, "factoring query needs distinct colors");
    std::vector<const Square*> out;
    const int ci = std::min(f_color, e_color), cj = std::max(f_color, e_color);
    for (const auto& sq : squares_) {
        if (sq.ci != ci || sq.cj != cj) continue;
        if (f_color == ci) {
            if (sq.fi == f_edge && sq.ej == e_edge) out.push_back(&sq);
        } else {
            if (sq.fj == f_edge && sq.ei == e_edge) out.push_back(&sq);
        }
    }
    return out;
}

namespace {

bool structurally_sound(const KGraphSkeleton& g, std::string* why) {
    std::set<std::string> seen;
    for (const auto& v : g.vertices())
        if (!seen.insert(v).second) {
            *why = "duplicate vertex id " + v;
            return false;
        }
    std::set<std::string> edge_ids;
    for (const auto& e : g.edges()) {
        if (!edge_ids.insert(e.id).second) {
            *why = "duplicate edge id " + e.id;
            return false;
        }
        if (e.color < 1 || e.color > g.k()) {
            *why = "edge " + e.id + " has color " + std::to_string(e.color) + " outside 1.." +
                   std::to_string(g.k());
            return false;
        }
        if (!g.has_vertex(e.source) || !g.has_vertex(e.range)) {
            *why = "edge " + e.id + " has a dangling endpoint";
            return false;
        }
    }
    for (const auto& sq : g.squares()) {
        if (!(1 <= sq.ci && sq.ci < sq.cj && sq.cj <= g.k())) {
            *why = "square has color pair (" + std::to_string(sq.ci) + "," + std::to_string(sq.cj) +
                   ") outside 1<=i<j<=k";
            return false;
        }
        for (const std::string* id : {&sq.ei, &sq.ej, &sq.fi, &sq.fj})
            if (g.find_edge(*id) == nullptr) {
                *why = "square references unknown edge " + *id;
                return false;
            }
    }
    return true;
}

bool square_consistent(const KGraphSkeleton& g, const Square& sq, std::string* why) {
    const SkeletonEdge& ei = g.edge(sq.ei);
    const SkeletonEdge& ej = g.edge(sq.ej);
    const SkeletonEdge& fi = g.edge(sq.fi);
    const SkeletonEdge& fj = g.edge(sq.fj);
    if (ei.color != sq.ci || fi.color != sq.ci || ej.color != sq.cj || fj.color != sq.cj) {
        *why = "square (" + sq.ei + "," + sq.ej + "," + sq.fi + "," + sq.fj + ") mixes colors";
        return false;
    }
    if (ei.source != ej.source) {
        *why = "square e-sides " + sq.ei + "," + sq.ej + " have different sources";
        return false;
    }
    if (fi.range != fj.range) {
        *why = "square f-sides " + sq.fi + "," + sq.fj + " have different ranges";
        return false;
    }
    if (fi.source != ej.range || fj.source != ei.range) {
        *why = "square (" + sq.ei + "," + sq.ej + "," + sq.fi + "," + sq.fj +
               ") composites do not line up";
        return false;
    }
    return true;
}

}  // namespace

ValidationReport validate(const KGraphSkeleton& g) {
    ValidationReport rep;
    std::string why;
    const bool sound = structurally_sound(g, &why);
    rep.checks.push_back({"structure", sound, sound ? "ids and colors resolve" : why});
    if (!sound) return rep;

    bool squares_ok = true;
    std::string square_why;
    for (const auto& sq : g.squares())
        if (!square_consistent(g, sq, &square_why)) {
            squares_ok = false;
            break;
        }
    rep.checks.push_back({"square-consistency", squares_ok,
                          squares_ok ? std::to_string(g.squares().size()) + " squares consistent"
                                     : square_why});

    // Unique bi-colored factorization: every composable pair (f of color
    // i, e of color j) for i != j lies in exactly one square.
    bool fact_ok = true;
    std::string fact_why;
    for (int ci = 1; ci <= g.k() && fact_ok; ++ci) {
        for (int cj = 1; cj <= g.k() && fact_ok; ++cj) {
            if (ci == cj) continue;
            for (const auto& f : g.edges()) {
                if (f.color != ci) continue;
                for (const auto& e : g.edges()) {
                    if (e.color != cj || f.source != e.range) continue;
                    const auto matches = g.squares_factoring(ci, f.id, cj, e.id);
                    if (matches.size() != 1) {
                        fact_ok = false;
                        fact_why = "composable pair (" + f.id + "," + e.id + ") lies in " +
                                   std::to_string(matches.size()) + " squares";
                        break;
                    }
                }
                if (!fact_ok) break;
            }
        }
    }
    rep.checks.push_back({"unique-factorization", fact_ok, fact_ok ? "each bi-colored composite in exactly one square" : fact_why});

    bool no_sources = true, no_sinks = true;
    std::string src_why, sink_why;
    for (const auto& v : g.vertices()) {
        for (int c = 1; c <= g.k(); ++c) {
            if (no_sources && g.edges_with_range(c, v).empty()) {
                no_sources = false;
                src_why = "vertex " + v + " receives no edge of color " + std::to_string(c);
            }
            if (no_sinks && g.edges_with_source(c, v).empty()) {
                no_sinks = false;
                sink_why = "vertex " + v + " emits no edge of color " + std::to_string(c);
            }
        }
    }
    rep.checks.push_back({"no-sources", no_sources, no_sources ? "every vertex receives every color" : src_why});
    rep.checks.push_back({"no-sinks", no_sinks, no_sinks ? "every vertex emits every color" : sink_why});

    std::size_t max_in = 0;
    for (const auto& v : g.vertices())
        for (int c = 1; c <= g.k(); ++c)
            max_in = std::max(max_in, g.edges_with_range(c, v).size());
    rep.checks.push_back({"row-finite", true,
                          "finite data; max per-color in-degree " + std::to_string(max_in)});

    if (g.k() >= 3)
        rep.warnings.push_back(
            "k >= 3: only pairwise unique factorization is checked; the cube condition is not verified");
    return rep;
}

void require_structurally_sound(const KGraphSkeleton& g) {
    std::string why;
    detail::check_arg(structurally_sound(g, &why), "skeleton is structurally unsound: " + why);
}

std::vector<std::pair<std::string, std::string>> coalign_witness(const KGraphSkeleton& g,
                                                                 const std::string& edge_a,
                                                                 const std::string& edge_b) {
    require_structurally_sound(g);
    const SkeletonEdge& a = g.edge(edge_a);
    const SkeletonEdge& b = g.edge(edge_b);
    detail::check_arg(a.color != b.color, "coalign_witness needs edges of distinct colors");
    detail::check_arg(a.source == b.source, "coalign_witness needs edges with a common source");

    std::vector<std::pair<std::string, std::string>> out;
    for (const Square* sq : g.squares_with_e_sides(edge_a, edge_b)) {
        // f paired with the color of edge_a first.
        std::pair<std::string, std::string> w =
            a.color < b.color ? std::make_pair(sq->fi, sq->fj) : std::make_pair(sq->fj, sq->fi);
        const SkeletonEdge& fa = g.edge(w.first);
        const SkeletonEdge& fb = g.edge(w.second);
        detail::require(fa.source == b.range && fb.source == a.range && fa.range == fb.range,
                        "coalign witness violates the square endpoint equations");
        out.push_back(std::move(w));
    }
    return out;
}

SkeletonCoalignResult is_one_coaligned(const KGraphSkeleton& g) {
    require_structurally_sound(g);
    SkeletonCoalignResult res;
    for (int ci = 1; ci <= g.k(); ++ci) {
        for (int cj = ci + 1; cj <= g.k(); ++cj) {
            for (const auto& v : g.vertices()) {
                for (const auto& ei : g.edges_with_source(ci, v)) {
                    for (const auto& ej : g.edges_with_source(cj, v)) {
                        ++res.pairs_checked;
                        const auto ws = coalign_witness(g, ei, ej);
                        if (ws.size() != 1) {
                            res.coaligned = false;
                            res.counterexample = SkeletonCoalignResult::Pair{ei, ej, ws.size()};
                            return res;
                        }
                    }
                }
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Text format.
//
//   skeleton
//   k <k>
//   v <vertex-id>
//   e <edge-id> <color> <source> <range>
//   sq <ci> <cj> <ei> <ej> <fi> <fj>
//
// '#' starts a comment; blank lines are ignored.  save() emits the
// canonical sorted form, so save(load(save(g))) == save(g).

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

long parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) parse_fail(lineno, "bad integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(lineno, "bad integer '" + tok + "'");
    }
}

}  // namespace

KGraphSkeleton load_skeleton(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = false;
    std::optional<int> k;
    std::vector<std::string> vertices;
    std::vector<SkeletonEdge> edges;
    std::vector<Square> squares;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks[0] != "skeleton") parse_fail(lineno, "expected 'skeleton' header");
            header = true;
            continue;
        }
        if (toks[0] == "k") {
            if (toks.size() != 2) parse_fail(lineno, "expected 'k <rank>'");
            k = static_cast<int>(parse_int(toks[1], lineno));
        } else if (toks[0] == "v") {
            if (toks.size() != 2) parse_fail(lineno, "expected 'v <id>'");
            vertices.push_back(toks[1]);
        } else if (toks[0] == "e") {
            if (toks.size() != 5) parse_fail(lineno, "expected 'e <id> <color> <source> <range>'");
            edges.push_back({toks[1], static_cast<int>(parse_int(toks[2], lineno)), toks[3], toks[4]});
        } else if (toks[0] == "sq") {
            if (toks.size() != 7) parse_fail(lineno, "expected 'sq <ci> <cj> <ei> <ej> <fi> <fj>'");
            squares.push_back({static_cast<int>(parse_int(toks[1], lineno)),
                               static_cast<int>(parse_int(toks[2], lineno)), toks[3], toks[4], toks[5],
                               toks[6]});
        } else {
            parse_fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!header) throw ParseError("missing 'skeleton' header");
    if (!k) throw ParseError("missing 'k' line");
    try {
        return KGraphSkeleton(*k, std::move(vertices), std::move(edges), std::move(squares));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

KGraphSkeleton load_skeleton_string(const std::string& text) {
    std::istringstream in(text);
    return load_skeleton(in);
}

KGraphSkeleton load_skeleton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_skeleton(in);
}

std::string save_skeleton(const KGraphSkeleton& g) {
    std::ostringstream out;
    out << "skeleton\n";
    out << "k " << g.k() << "\n";
    for (const auto& v : g.vertices()) out << "v " << v << "\n";
    for (const auto& e : g.edges())
        out << "e " << e.id << " " << e.color << " " << e.source << " " << e.range << "\n";
    for (const auto& sq : g.squares())
        out << "sq " << sq.ci << " " << sq.cj << " " << sq.ei << " " << sq.ej << " " << sq.fi << " "
            << sq.fj << "\n";
    return out.str();
}

}  // namespace coalign
