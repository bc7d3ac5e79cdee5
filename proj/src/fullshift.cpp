#include "coalign/fullshift.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coalign/errors.hpp"

namespace coalign {

std::string show_word(const Word& w, int alphabet_size) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (alphabet_size > 10 && i) out += ".";
        out += std::to_string(w[i]);
    }
    return out.empty() ? "(empty)" : out;
}

BlockMap::BlockMap(int alphabet_size, int window, std::vector<int> table)
    : alphabet_(alphabet_size), window_(window), table_(std::move(table)) {
    detail::check_arg(alphabet_ >= 1, "alphabet size must be at least 1");
    detail::check_arg(window_ >= 1, "window length must be at least 1");
    std::size_t expect = 1;
    for (int i = 0; i < window_; ++i) expect *= static_cast<std::size_t>(alphabet_);
    detail::check_arg(table_.size() == expect, "block map table must cover every window word");
    for (int v : table_)
        detail::check_arg(0 <= v && v < alphabet_, "block map value outside the alphabet");
}

int BlockMap::apply_at(const Word& w, std::size_t offset) const {
    detail::check_arg(offset + static_cast<std::size_t>(window_) <= w.size(),
                      "window extends past the end of the word");
    std::size_t idx = 0;
    for (int i = 0; i < window_; ++i) {
        const int s = w[offset + static_cast<std::size_t>(i)];
        detail::check_arg(0 <= s && s < alphabet_, "symbol outside the alphabet");
        idx = idx * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(s);
    }
    return table_[idx];
}

int BlockMap::apply(const Word& w) const {
    detail::check_arg(w.size() == static_cast<std::size_t>(window_),
                      "apply needs a word of exactly the window length");
    return apply_at(w, 0);
}

Word apply_code(const BlockMap& d, const Word& x) {
    detail::check_arg(x.size() >= static_cast<std::size_t>(d.window()),
                      "apply_code needs a word at least as long as the window");
    Word out(x.size() - static_cast<std::size_t>(d.window()) + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = d.apply_at(x, i);
    return out;
}

PermutiveResult is_left_permutive(const BlockMap& d) {
    const int a = d.alphabet_size();
    const int ctx_len = d.window() - 1;
    Word context(static_cast<std::size_t>(ctx_len), 0);
    // Odometer over all (n-1)-contexts; the empty context covers n = 1.
    for (;;) {
        std::vector<bool> hit(static_cast<std::size_t>(a), false);
        bool bijective = true;
        Word word(static_cast<std::size_t>(d.window()));
        std::copy(context.begin(), context.end(), word.begin() + 1);
        for (int first = 0; first < a && bijective; ++first) {
            word[0] = first;
            const int v = d.apply(word);
            if (hit[static_cast<std::size_t>(v)]) bijective = false;
            hit[static_cast<std::size_t>(v)] = true;
        }
        if (!bijective) return {false, context};

        int pos = ctx_len - 1;
        while (pos >= 0 && context[static_cast<std::size_t>(pos)] == a - 1) {
            context[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++context[static_cast<std::size_t>(pos)];
    }
    return {};
}

std::vector<Word> star_lift_fullshift(const BlockMap& d, const Word& y, const Word& z) {
    const std::size_t n = static_cast<std::size_t>(d.window());
    detail::check_arg(y.size() >= 2, "y must have at least two symbols");
    detail::check_arg(z.size() >= n, "z must be at least the window length");
    const Word ty = Word(y.begin() + 1, y.end());  // shift(y)
    const Word tz = apply_code(d, z);
    const std::size_t overlap = std::min(ty.size(), tz.size());
    detail::check_arg(overlap >= 1, "shift(y) and code(z) must overlap");
    for (std::size_t i = 0; i < overlap; ++i)
        detail::check_arg(ty[i] == tz[i], "star lift needs shift(y) == code(z) on the overlap");

    std::vector<Word> lifts;
    for (int a = 0; a < d.alphabet_size(); ++a) {
        Word word(n);
        word[0] = a;
        std::copy(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n - 1), word.begin() + 1);
        if (d.apply(word) == y[0]) {
            Word x;
            x.reserve(z.size() + 1);
            x.push_back(a);
            x.insert(x.end(), z.begin(), z.end());
            lifts.push_back(std::move(x));
        }
    }
    return lifts;
}

FullShiftStarResult verify_star_commute_fullshift(const BlockMap& d, int len) {
    detail::check_arg(len >= d.window() + 1, "verification length must be at least window + 1");
    FullShiftStarResult res;
    const int a = d.alphabet_size();
    Word z(static_cast<std::size_t>(len), 0);
    for (;;) {
        const Word tz = apply_code(d, z);
        for (int y1 = 0; y1 < a; ++y1) {
            Word y;
            y.reserve(tz.size() + 1);
            y.push_back(y1);
            y.insert(y.end(), tz.begin(), tz.end());
            ++res.instances;
            auto lifts = star_lift_fullshift(d, y, z);
            if (lifts.size() != 1) {
                res.ok = false;
                res.y = std::move(y);
                res.z = z;
                res.lifts = std::move(lifts);
                return res;
            }
        }
        std::size_t pos = z.size();
        while (pos > 0 && z[pos - 1] == a - 1) z[--pos] = 0;
        if (pos == 0) break;
        ++z[pos - 1];
    }
    return res;
}

// ---------------------------------------------------------------------------
// Named examples

BlockMap bar_map() { return {2, 1, {1, 0}}; }

BlockMap drop_first_map(int alphabet_size) {
    const int a = alphabet_size;
    std::vector<int> table(static_cast<std::size_t>(a) * static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < a; ++y) table[static_cast<std::size_t>(x * a + y)] = y;
    return {a, 2, std::move(table)};
}

BlockMap four_letter_map() {
    return {4, 2,
            {0, 0, 1, 1,    // d(00) d(01) d(02) d(03)
             3, 3, 2, 2,    // d(10) d(11) d(12) d(13)
             2, 2, 3, 3,    // d(20) d(21) d(22) d(23)
             1, 1, 0, 0}};  // d(30) d(31) d(32) d(33)
}

BlockMap mod_sum_map(int n) {
    detail::check_arg(n >= 1, "mod_sum needs n >= 1");
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) size *= static_cast<std::size_t>(n);
    std::vector<int> table(size);
    Word word(static_cast<std::size_t>(n), 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
        int sum = 0;
        for (int v : word) sum += v;
        table[idx] = sum % n;
        std::size_t pos = word.size();
        while (pos > 0 && word[pos - 1] == n - 1) word[--pos] = 0;
        if (pos > 0) ++word[pos - 1];
    }
    return {n, n, std::move(table)};
}

std::vector<std::pair<std::string, BlockMap>> builtin_examples() {
    std::vector<std::pair<std::string, BlockMap>> out;
    out.emplace_back("bar", bar_map());
    out.emplace_back("drop_first", drop_first_map());
    out.emplace_back("four_letter", four_letter_map());
    for (int n = 2; n <= 5; ++n) out.emplace_back("mod_sum_" + std::to_string(n), mod_sum_map(n));
    return out;
}

std::optional<BlockMap> find_builtin(const std::string& name) {
    for (auto& [n, d] : builtin_examples())
        if (n == name) return d;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format.
//
//   blockmap
//   alphabet <size>
//   n <window>
//   <word> <value>     (one line per window word; digits, or dot-separated
//                       symbols when the alphabet exceeds 10)

namespace {

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

int parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size()) parse_fail(lineno, "bad integer '" + tok + "'");
        return static_cast<int>(v);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(lineno, "bad integer '" + tok + "'");
    }
}

Word parse_word(const std::string& tok, int alphabet, int window, int lineno) {
    Word w;
    if (alphabet > 10) {
        std::istringstream in(tok);
        std::string part;
        while (std::getline(in, part, '.')) w.push_back(parse_int(part, lineno));
    } else {
        for (char c : tok) {
            if (c < '0' || c > '9') parse_fail(lineno, "bad word '" + tok + "'");
            w.push_back(c - '0');
        }
    }
    if (w.size() != static_cast<std::size_t>(window))
        parse_fail(lineno, "word '" + tok + "' does not have the window length");
    for (int s : w)
        if (s < 0 || s >= alphabet) parse_fail(lineno, "word '" + tok + "' leaves the alphabet");
    return w;
}

}  // namespace

BlockMap load_block_map(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = false;
    std::optional<int> alphabet, window;
    std::vector<std::optional<int>> table;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) {
            if (t[0] == '#') break;
            toks.push_back(t);
        }
        if (toks.empty()) continue;
        if (!header) {
            if (toks[0] != "blockmap") parse_fail(lineno, "expected 'blockmap' header");
            header = true;
            continue;
        }
        if (toks[0] == "alphabet") {
            if (toks.size() != 2) parse_fail(lineno, "expected 'alphabet <size>'");
            alphabet = parse_int(toks[1], lineno);
        } else if (toks[0] == "n") {
            if (toks.size() != 2) parse_fail(lineno, "expected 'n <window>'");
            window = parse_int(toks[1], lineno);
        } else {
            if (!alphabet || !window) parse_fail(lineno, "table rows must follow 'alphabet' and 'n'");
            if (toks.size() != 2) parse_fail(lineno, "expected '<word> <value>'");
            if (table.empty()) {
                std::size_t size = 1;
                for (int i = 0; i < *window; ++i) size *= static_cast<std::size_t>(*alphabet);
                table.assign(size, std::nullopt);
            }
            const Word w = parse_word(toks[0], *alphabet, *window, lineno);
            std::size_t idx = 0;
            for (int s : w) idx = idx * static_cast<std::size_t>(*alphabet) + static_cast<std::size_t>(s);
            if (table[idx]) parse_fail(lineno, "duplicate table row for '" + toks[0] + "'");
            const int v = parse_int(toks[1], lineno);
            if (v < 0 || v >= *alphabet) parse_fail(lineno, "value " + toks[1] + " leaves the alphabet");
            table[idx] = v;
        }
    }
    if (!header) throw ParseError("missing 'blockmap' header");
    if (!alphabet || !window) throw ParseError("missing 'alphabet' or 'n' line");
    if (table.empty()) throw ParseError("missing table rows");
    std::vector<int> values(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!table[i]) throw ParseError("table is missing a row (only " + std::to_string(i) + " preceding rows found)");
        values[i] = *table[i];
    }
    return {*alphabet, *window, std::move(values)};
}

BlockMap load_block_map_string(const std::string& text) {
    std::istringstream in(text);
    return load_block_map(in);
}

BlockMap load_block_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_block_map(in);
}

std::string save_block_map(const BlockMap& d) {
    std::ostringstream out;
    out << "blockmap\n";
    out << "alphabet " << d.alphabet_size() << "\n";
    out << "n " << d.window() << "\n";
    Word word(static_cast<std::size_t>(d.window()), 0);
    for (std::size_t idx = 0; idx < d.table().size(); ++idx) {
        out << show_word(word, d.alphabet_size()) << " " << d.table()[idx] << "\n";
        std::size_t pos = word.size();
        while (pos > 0 && word[pos - 1] == d.alphabet_size() - 1) word[--pos] = 0;
        if (pos > 0) ++word[pos - 1];
    }
    return out.str();
}

}  // namespace coalign
