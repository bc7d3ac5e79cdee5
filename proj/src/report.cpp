#include "coalign/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace coalign {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::error: return "error";
    }
    return "error";
}

void Report::add_count(std::string key, std::int64_t value) {
    counts.emplace_back(std::move(key), value);
}

void Report::sort_counts() { std::sort(counts.begin(), counts.end()); }

Report make_pass(std::string check, std::string digest) {
    Report r;
    r.check = std::move(check);
    r.input_digest = std::move(digest);
    r.verdict = Verdict::pass;
    return r;
}

Report make_fail(std::string check, std::string digest, std::string counterexample) {
    Report r;
    r.check = std::move(check);
    r.input_digest = std::move(digest);
    r.verdict = Verdict::fail;
    r.counterexample = std::move(counterexample);
    return r;
}

Report make_error(std::string check, std::string digest, std::string note) {
    Report r;
    r.check = std::move(check);
    r.input_digest = std::move(digest);
    r.verdict = Verdict::error;
    r.note = std::move(note);
    return r;
}

std::string to_text(const Report& r, bool with_timings) {
    std::ostringstream out;
    out << "check: " << r.check << "\n";
    out << "input: " << r.input_digest << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    for (const auto& [k, v] : r.counts) out << "  " << k << ": " << v << "\n";
    if (!r.counterexample.empty()) out << "counterexample: " << r.counterexample << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    if (with_timings) out << "elapsed_s: " << r.elapsed_seconds << "\n";
    return out.str();
}

std::string to_json_line(const Report& r, bool with_timings) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["input"] = r.input_digest;
    j["verdict"] = to_string(r.verdict);
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    j["counts"] = counts;
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    if (!r.note.empty()) j["note"] = r.note;
    if (with_timings) j["elapsed_s"] = r.elapsed_seconds;
    return j.dump();
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace coalign
