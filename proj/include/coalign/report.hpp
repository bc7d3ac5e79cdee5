#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coalign {

enum class Verdict { pass, fail, error };

std::string to_string(Verdict);

// One check outcome for CLI output.  counterexample is nonempty iff the
// verdict is fail; counts carry check-specific tallies sorted by key.
struct Report {
    std::string check;
    std::string input_digest;
    Verdict verdict = Verdict::error;
    std::string counterexample;
    std::vector<std::pair<std::string, std::int64_t>> counts;
    std::string note;
    double elapsed_seconds = 0.0;

    void add_count(std::string key, std::int64_t value);
    void sort_counts();
};

Report make_pass(std::string check, std::string digest);
Report make_fail(std::string check, std::string digest, std::string counterexample);
Report make_error(std::string check, std::string digest, std::string note);

// Human-readable block and one-line JSON record.  Timings are printed
// only when requested so default output is byte-deterministic.
std::string to_text(const Report&, bool with_timings);
std::string to_json_line(const Report&, bool with_timings);

// FNV-1a over the canonical serialized input, as a short hex digest.
std::uint64_t fnv1a(std::string_view data);
std::string digest_hex(std::string_view data);

}  // namespace coalign
