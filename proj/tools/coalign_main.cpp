// coalign: checks for *-commuting shift maps on k-graphs, basic-data
// 2-graphs and full shifts, with brute-force and closed-form routes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coalign/basic_data.hpp"
#include "coalign/errors.hpp"
#include "coalign/fullshift.hpp"
#include "coalign/path_space.hpp"
#include "coalign/report.hpp"
#include "coalign/skeleton.hpp"
#include "coalign/sweeps.hpp"

namespace {

using namespace coalign;

struct OutputOptions {
    bool json = false;
    bool timings = false;
};

int emit(const Report& r, const OutputOptions& out) {
    if (out.json)
        std::cout << to_json_line(r, out.timings) << "\n";
    else
        std::cout << to_text(r, out.timings);
    switch (r.verdict) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 1;
        case Verdict::error: return 2;
    }
    return 2;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string detect_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok && tok[0] != '#') return tok;
    }
    return "";
}

Vec2 parse_vec2(const std::string& s, const char* what) {
    const auto comma = s.find(',');
    detail::check_arg(comma != std::string::npos, std::string(what) + " must look like 'x,y'");
    try {
        return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + " must look like 'x,y'");
    }
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& path, const OutputOptions& out) {
    const std::string text = read_file(path);
    const std::string kind = detect_format(text);
    Timer timer;
    Report rep;
    if (kind == "basicdata") {
        const BasicData bd = load_basic_data_string(text);
        const std::string digest = digest_hex(save_basic_data(bd));
        const auto v = validate_basic_data(bd);
        rep = v.ok() ? make_pass("validate-basicdata", digest)
                     : make_fail("validate-basicdata", digest, v.summary());
        for (const auto& c : v.checks) rep.add_count("check." + c.name, c.passed ? 1 : 0);
    } else if (kind == "skeleton") {
        const KGraphSkeleton g = load_skeleton_string(text);
        const std::string digest = digest_hex(save_skeleton(g));
        const auto v = validate(g);
        rep = v.ok() ? make_pass("validate-skeleton", digest)
                     : make_fail("validate-skeleton", digest, v.summary());
        for (const auto& c : v.checks) rep.add_count("check." + c.name, c.passed ? 1 : 0);
        for (const auto& w : v.warnings) rep.note += (rep.note.empty() ? "" : "; ") + w;
        rep.add_count("vertices", static_cast<std::int64_t>(g.vertices().size()));
        rep.add_count("edges", static_cast<std::int64_t>(g.edges().size()));
        rep.add_count("squares", static_cast<std::int64_t>(g.squares().size()));
    } else if (kind == "blockmap") {
        const BlockMap d = load_block_map_string(text);
        rep = make_pass("validate-blockmap", digest_hex(save_block_map(d)));
        rep.add_count("alphabet", d.alphabet_size());
        rep.add_count("window", d.window());
        rep.add_count("rows", static_cast<std::int64_t>(d.table().size()));
    } else {
        throw ParseError("unrecognized file header '" + kind + "'");
    }
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const std::string& path, const std::string& what, const std::string& degree_str,
                  int bound, const OutputOptions& out) {
    const BasicData bd = load_basic_data_file(path);
    const std::string digest = digest_hex(save_basic_data(bd));
    Timer timer;
    Report rep = make_pass("enumerate-" + what, digest);
    if (what == "vertices") {
        rep.add_count("vertices", static_cast<std::int64_t>(enumerate_vertices(bd).size()));
    } else if (what == "edges") {
        rep.add_count("edges.dir1", static_cast<std::int64_t>(enumerate_edges(bd, 1).size()));
        rep.add_count("edges.dir2", static_cast<std::int64_t>(enumerate_edges(bd, 2).size()));
    } else if (what == "paths") {
        const Vec2 degree = parse_vec2(degree_str, "--degree");
        detail::check_arg(degree.x + degree.y <= bound,
                          "degree sum " + std::to_string(degree.x + degree.y) +
                              " exceeds the enumeration bound " + std::to_string(bound) +
                              " (raise with --bound)");
        rep.add_count("paths", static_cast<std::int64_t>(enumerate_paths(bd, degree).size()));
        rep.add_count("degree.x", degree.x);
        rep.add_count("degree.y", degree.y);
    } else {
        throw std::invalid_argument("--what must be vertices, edges or paths");
    }
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

// ---------------------------------------------------------------------------
// coaligned

int cmd_coaligned(const std::string& path, const std::string& method, const OutputOptions& out) {
    const std::string text = read_file(path);
    const std::string kind = detect_format(text);
    Timer timer;
    Report rep;
    if (kind == "basicdata") {
        const BasicData bd = load_basic_data_string(text);
        const std::string digest = digest_hex(save_basic_data(bd));
        std::optional<bool> brute, criterion;
        std::string counterexample;
        if (method == "brute" || method == "both") {
            const auto r = is_one_coaligned_bruteforce(bd);
            brute = r.coaligned;
            if (r.counterexample)
                counterexample = "pair with " + std::to_string(r.counterexample->completions) +
                                 " completions: blue " + show(bd, r.counterexample->edge_blue) +
                                 " ; red " + show(bd, r.counterexample->edge_red);
        }
        if (method == "criterion" || method == "both") criterion = has_invertible_zero(bd);
        if (brute && criterion && *brute != *criterion) {
            rep = make_error("coaligned", digest,
                             "brute-force and closed-form routes disagree; this is a bug");
        } else {
            const bool coaligned = brute ? *brute : *criterion;
            rep = coaligned ? make_pass("coaligned", digest)
                            : make_fail("coaligned", digest,
                                        counterexample.empty() ? "w(0) is not a unit" : counterexample);
            if (brute) rep.add_count("brute", *brute ? 1 : 0);
            if (criterion) rep.add_count("criterion", *criterion ? 1 : 0);
            rep.add_count("three_invertible_corners", has_three_invertible_corners(bd) ? 1 : 0);
        }
    } else if (kind == "skeleton") {
        detail::check_arg(method == "brute",
                          "skeleton inputs support only --method brute (the closed-form criterion "
                          "needs basic data)");
        const KGraphSkeleton g = load_skeleton_string(text);
        const std::string digest = digest_hex(save_skeleton(g));
        const auto r = is_one_coaligned(g);
        rep = r.coaligned
                  ? make_pass("coaligned", digest)
                  : make_fail("coaligned", digest,
                              "pair (" + r.counterexample->ei + ", " + r.counterexample->ej + ") has " +
                                  std::to_string(r.counterexample->witnesses) + " witnesses");
        rep.add_count("pairs_checked", r.pairs_checked);
    } else {
        throw ParseError("coaligned needs a basicdata or skeleton file");
    }
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

// ---------------------------------------------------------------------------
// star-check

int cmd_star_check(const std::string& path, const std::string& depth_str,
                   const std::string& colors_str, const OutputOptions& out) {
    const std::string text = read_file(path);
    const std::string kind = detect_format(text);
    const Vec2 colors = parse_vec2(colors_str, "--colors");
    const int ci = static_cast<int>(colors.x), cj = static_cast<int>(colors.y);
    Timer timer;
    Report rep;
    if (kind == "basicdata") {
        const BasicData bd = load_basic_data_string(text);
        const std::string digest = digest_hex(save_basic_data(bd));
        const Vec2 depth = parse_vec2(depth_str, "--depth");
        const BasicDataUniverse u{&bd};
        const auto r = verify_star_commute(u, ci, cj, depth);
        rep = r.ok ? make_pass("star-check", digest) : make_fail("star-check", digest, r.counterexample);
        rep.add_count("tails", r.tails);
        rep.add_count("instances", r.instances);
    } else if (kind == "skeleton") {
        const KGraphSkeleton g = load_skeleton_string(text);
        const std::string digest = digest_hex(save_skeleton(g));
        const SkeletonUniverse u{&g};
        DegreeVec depth = dv_zero(g.k());
        if (g.k() == 2) {
            const Vec2 d = parse_vec2(depth_str, "--depth");
            depth[0] = static_cast<int>(d.x);
            depth[1] = static_cast<int>(d.y);
        } else {
            std::istringstream ds(depth_str);
            std::string part;
            std::size_t i = 0;
            while (std::getline(ds, part, ',') && i < depth.size()) depth[i++] = std::stoi(part);
            detail::check_arg(i == depth.size(), "--depth needs one entry per color");
        }
        const auto r = verify_star_commute(u, ci, cj, depth);
        rep = r.ok ? make_pass("star-check", digest) : make_fail("star-check", digest, r.counterexample);
        rep.add_count("tails", r.tails);
        rep.add_count("instances", r.instances);
    } else {
        throw ParseError("star-check needs a basicdata or skeleton file");
    }
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

// ---------------------------------------------------------------------------
// blockmap

int cmd_blockmap(const std::string& which, const std::string& check, int len,
                 const OutputOptions& out) {
    BlockMap d = [&] {
        if (auto builtin = find_builtin(which)) return *builtin;
        return load_block_map_file(which);
    }();
    const std::string digest = digest_hex(save_block_map(d));
    Timer timer;
    Report rep;
    if (check == "permutive") {
        const auto r = is_left_permutive(d);
        rep = r.ok ? make_pass("blockmap-permutive", digest)
                   : make_fail("blockmap-permutive", digest,
                               "section at prefix " + show_word(r.failing_prefix, d.alphabet_size()) +
                                   " is not a bijection");
    } else if (check == "star") {
        const int use_len = len > 0 ? len : d.window() + 3;
        const auto r = verify_star_commute_fullshift(d, use_len);
        if (r.ok) {
            rep = make_pass("blockmap-star", digest);
        } else {
            std::string ce = "y = " + show_word(r.y, d.alphabet_size()) +
                             " ; z = " + show_word(r.z, d.alphabet_size()) + " ; lifts =";
            for (const auto& lift : r.lifts) ce += " " + show_word(lift, d.alphabet_size());
            if (r.lifts.empty()) ce += " (none)";
            rep = make_fail("blockmap-star", digest, ce);
        }
        rep.add_count("len", use_len);
        rep.add_count("instances", r.instances);
    } else {
        throw std::invalid_argument("--check must be permutive or star");
    }
    rep.add_count("alphabet", d.alphabet_size());
    rep.add_count("window", d.window());
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

// ---------------------------------------------------------------------------
// export

int cmd_export(const std::string& path, const std::string& out_path, const OutputOptions& out) {
    const BasicData bd = load_basic_data_file(path);
    Timer timer;
    const KGraphSkeleton g = export_skeleton(bd);
    const std::string text = save_skeleton(g);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream of(out_path);
    detail::check_arg(static_cast<bool>(of), "cannot write " + out_path);
    of << text;
    Report rep = make_pass("export-skeleton", digest_hex(save_basic_data(bd)));
    rep.add_count("vertices", static_cast<std::int64_t>(g.vertices().size()));
    rep.add_count("edges", static_cast<std::int64_t>(g.edges().size()));
    rep.add_count("squares", static_cast<std::int64_t>(g.squares().size()));
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep_tiles(const std::vector<std::int64_t>& qs, int samples, std::uint64_t seed,
                    bool force, const OutputOptions& out) {
    TileSweepOptions opts;
    if (!qs.empty()) opts.qs = qs;
    opts.samples_per_q = samples;
    opts.seed = seed;
    if (!force) {
        for (const auto q : opts.qs)
            detail::check_arg(q <= 12, "q > 12 needs --force (brute-force cost grows fast)");
        detail::check_arg(samples <= 5000, "more than 5000 samples per q needs --force");
    }
    std::string param = "tiles qs=";
    for (const auto q : opts.qs) param += std::to_string(q) + ",";
    param += " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
    Timer timer;
    const auto r = run_tile_sweep(opts);
    Report rep = r.ok() ? make_pass("sweep-tiles", digest_hex(param))
                        : make_fail("sweep-tiles", digest_hex(param), r.first_failure);
    rep.add_count("cases", r.cases);
    rep.add_count("mismatches", r.mismatches);
    rep.add_count("vertex_count_failures", r.vertex_count_failures);
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

int cmd_sweep_blockmaps(int alphabet, const std::vector<int>& windows, int extra_len, bool force,
                        const OutputOptions& out) {
    BlockMapSweepOptions opts;
    opts.alphabet = alphabet;
    if (!windows.empty()) opts.windows = windows;
    opts.extra_len = extra_len;
    if (!force) {
        for (const int n : opts.windows) {
            std::int64_t words = 1, tables = 1;
            for (int i = 0; i < n; ++i) words *= alphabet;
            detail::check_arg(words <= 16, "alphabet^n > 16 needs --force");
            for (std::int64_t i = 0; i < words; ++i) {
                tables *= alphabet;
                detail::check_arg(tables <= (1 << 20), "table count > 2^20 needs --force");
            }
        }
    }
    std::string param = "blockmaps alphabet=" + std::to_string(alphabet) + " windows=";
    for (const int n : opts.windows) param += std::to_string(n) + ",";
    param += " extra_len=" + std::to_string(extra_len);
    Timer timer;
    const auto r = run_blockmap_sweep(opts);
    Report rep = r.ok() ? make_pass("sweep-blockmaps", digest_hex(param))
                        : make_fail("sweep-blockmaps", digest_hex(param), r.first_failure);
    rep.add_count("tables", r.tables);
    rep.add_count("mismatches", r.mismatches);
    rep.elapsed_seconds = timer.seconds();
    rep.sort_counts();
    return emit(rep, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"checks for *-commuting shift maps on k-graphs, basic-data 2-graphs and full shifts"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions out;
    app.add_flag("--json", out.json, "emit one JSON record per check");
    app.add_flag("--timings", out.timings, "include elapsed time (output is no longer byte-stable)");

    std::string file, what = "vertices", degree = "1,1", method = "both", depth = "2,2",
                colors = "1,2", check = "permutive", family;
    int bound = 4, len = 0, alphabet = 2, samples = 200, extra_len = 3;
    std::uint64_t seed = 20260808;
    std::vector<std::int64_t> qs;
    std::vector<int> windows;
    bool force = false;

    auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a data file");
    validate_cmd->add_option("file", file, "basicdata, skeleton or blockmap file")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "count vertices, edges or paths of basic data");
    enum_cmd->add_option("file", file, "basicdata file")->required();
    enum_cmd->add_option("--what", what, "vertices | edges | paths");
    enum_cmd->add_option("--degree", degree, "path degree 'x,y' (with --what paths)");
    enum_cmd->add_option("--bound", bound, "cap on the degree sum for path enumeration");

    auto* coal_cmd = app.add_subcommand("coaligned", "decide 1-coalignment");
    coal_cmd->add_option("file", file, "basicdata or skeleton file")->required();
    coal_cmd->add_option("--method", method, "brute | criterion | both");

    auto* star_cmd = app.add_subcommand("star-check", "verify *-commuting shifts at a finite depth");
    star_cmd->add_option("file", file, "basicdata or skeleton file")->required();
    star_cmd->add_option("--depth", depth, "common tail depth, e.g. 2,2");
    star_cmd->add_option("--colors", colors, "color pair i,j");

    auto* bm_cmd = app.add_subcommand("blockmap", "block map checks");
    bm_cmd->add_option("map", file, "blockmap file or builtin name (bar, drop_first, four_letter, mod_sum_N)")
        ->required();
    bm_cmd->add_option("--check", check, "permutive | star");
    bm_cmd->add_option("--len", len, "window length for --check star (default window + 3)");

    std::string out_path;
    auto* export_cmd = app.add_subcommand("export", "write the skeleton of a basic-data 2-graph");
    export_cmd->add_option("file", file, "basicdata file")->required();
    export_cmd->add_option("-o,--out", out_path, "output path (default: stdout)");

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive equivalence sweeps");
    sweep_cmd->add_option("--family", family, "tiles | blockmaps")->required();
    sweep_cmd->add_option("--q", qs, "moduli for the tile sweep");
    sweep_cmd->add_option("--samples", samples, "samples per non-exhaustive modulus");
    sweep_cmd->add_option("--seed", seed, "sampling seed");
    sweep_cmd->add_option("--alphabet", alphabet, "alphabet size for the blockmap sweep");
    sweep_cmd->add_option("--windows", windows, "window lengths for the blockmap sweep");
    sweep_cmd->add_option("--extra-len", extra_len, "verification length minus window");
    sweep_cmd->add_flag("--force", force, "lift the safety caps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(file, out);
        if (enum_cmd->parsed()) return cmd_enumerate(file, what, degree, bound, out);
        if (coal_cmd->parsed()) return cmd_coaligned(file, method, out);
        if (star_cmd->parsed()) return cmd_star_check(file, depth, colors, out);
        if (bm_cmd->parsed()) return cmd_blockmap(file, check, len, out);
        if (export_cmd->parsed()) return cmd_export(file, out_path, out);
        if (sweep_cmd->parsed()) {
            if (family == "tiles") return cmd_sweep_tiles(qs, samples, seed, force, out);
            if (family == "blockmaps") return cmd_sweep_blockmaps(alphabet, windows, extra_len, force, out);
            throw std::invalid_argument("--family must be tiles or blockmaps");
        }
    } catch (const std::exception& e) {
        return emit(make_error(app.get_subcommands().empty() ? "cli" : app.get_subcommands()[0]->get_name(),
                               "", e.what()),
                    out);
    }
    return 2;
}
